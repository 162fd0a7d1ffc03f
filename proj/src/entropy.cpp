// Copyright 2026 The neq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "neq/entropy.hpp"

#include <cmath>

#include "neq/errors.hpp"
#include "neq/sdp.hpp"

namespace neq {

namespace {

void require_psd_input(const CMatrix &m, const char *who) {
    if (m.rows() != m.cols()) throw InvalidDimensions(std::string(who) + ": matrix not square");
    if (!is_hermitian(m)) throw NotHermitian(std::string(who) + ": not Hermitian");
    auto e = eig_herm(m);
    double scale = std::max(1.0, e.values.cwiseAbs().maxCoeff());
    if (e.values.minCoeff() < -1e-9 * scale)
        throw NotPsd(std::string(who) + ": negative eigenvalue");
}

bool supported_within(const CMatrix &rho, const CMatrix &sigma) {
    CMatrix pi = support_projector(sigma);
    const int n = static_cast<int>(rho.rows());
    double leak = ((identity(n) - pi) * rho).trace().real();
    return leak <= kSupportTol * std::max(1.0, std::abs(rho.trace().real()));
}

bool is_pure_reference(const CMatrix &sigma) {
    return std::abs(support_projector(sigma).trace().real() - 1.0) < 0.5;
}

// Sum of lambda * log2(lambda) over the support.
double spectral_h(const CMatrix &rho) {
    auto e = eig_herm(rho);
    double scale = std::max(e.values.cwiseAbs().maxCoeff(), 1e-300);
    double h = 0.0;
    for (int i = 0; i < e.values.size(); ++i) {
        double lam = e.values(i);
        if (lam > kSupportTol * scale) h += lam * std::log2(lam);
    }
    return h;
}

double petz_divergence(const CMatrix &rho, const CMatrix &sigma, double alpha,
                       PureRefConvention conv) {
    if (alpha > 1.0 && !supported_within(rho, sigma)) return inf();
    if (alpha < 1.0 && conv == PureRefConvention::Infinity && is_pure_reference(sigma) &&
        !supported_within(rho, sigma))
        return inf();
    CMatrix ra = func_on_support(rho, [alpha](double x) { return std::pow(x, alpha); });
    CMatrix sb = func_on_support(sigma, [alpha](double x) { return std::pow(x, 1.0 - alpha); });
    double q = (ra * sb).trace().real();
    if (q <= 1e-300) return inf();
    return std::log2(q) / (alpha - 1.0);
}

double sandwiched_divergence(const CMatrix &rho, const CMatrix &sigma, double alpha,
                             PureRefConvention conv) {
    if (alpha > 1.0 && !supported_within(rho, sigma)) return inf();
    if (alpha < 1.0 && conv == PureRefConvention::Infinity && is_pure_reference(sigma) &&
        !supported_within(rho, sigma))
        return inf();
    const double p = (1.0 - alpha) / (2.0 * alpha);
    CMatrix w = func_on_support(sigma, [p](double x) { return std::pow(x, p); });
    CMatrix inner = hermitize(w * rho * w);
    CMatrix ia = func_on_support(inner, [alpha](double x) { return std::pow(x, alpha); });
    double q = ia.trace().real();
    if (q <= 1e-300) return inf();
    return std::log2(q) / (alpha - 1.0);
}

}  // namespace

double h_min_conditional(const CMatrix &omega, BipartiteDims dims) {
    require_psd_input(omega, "h_min_conditional");
    if (omega.rows() != dims.d_A * dims.d_B)
        throw InvalidDimensions("h_min_conditional: dims mismatch");

    SdpProblem prob;
    int lam = prob.add_psd_block("Lambda", dims.d_B);
    CMatrix ia = identity(dims.d_A);
    prob.set_objective(Sense::Min,
                       [lam](const BlockValues &v) { return v[lam].trace().real(); });
    prob.add_leq(
        [&, lam](const BlockValues &v) -> CMatrix { return omega - kron(ia, v[lam]); },
        CMatrix::Zero(omega.rows(), omega.cols()));

    SdpSolution sol = solve_sdp(prob);
    if (sol.status != SdpStatus::Optimal)
        throw SolverFailure("h_min_conditional: " + sol.note);
    if (sol.objective <= 1e-300) return inf();
    return -std::log2(sol.objective);
}

double relative_entropy(const CMatrix &rho, const CMatrix &sigma) {
    require_psd_input(rho, "relative_entropy");
    require_psd_input(sigma, "relative_entropy");
    if (rho.rows() != sigma.rows()) throw InvalidDimensions("relative_entropy: dims mismatch");
    if (!supported_within(rho, sigma)) return inf();
    CMatrix lg = func_on_support(sigma, [](double x) { return std::log2(x); });
    return spectral_h(rho) - (rho * lg).trace().real();
}

double divergence(const CMatrix &rho, const CMatrix &sigma, const DivergenceSpec &spec) {
    switch (spec.family) {
        case DivergenceFamily::VonNeumann:
            return relative_entropy(rho, sigma);
        case DivergenceFamily::DMax:
            return d_max(rho, sigma);
        case DivergenceFamily::DMin:
            return d_min(rho, sigma);
        case DivergenceFamily::Renyi:
        case DivergenceFamily::Sandwiched:
            break;
    }
    require_psd_input(rho, "divergence");
    require_psd_input(sigma, "divergence");
    if (rho.rows() != sigma.rows()) throw InvalidDimensions("divergence: dims mismatch");
    if (!(spec.alpha >= 0.0) || !std::isfinite(spec.alpha))
        throw OutOfRange("divergence: alpha must be finite and nonnegative");
    if (spec.alpha == 1.0) return relative_entropy(rho, sigma);
    if (spec.family == DivergenceFamily::Sandwiched) {
        if (spec.alpha <= 0.0) throw OutOfRange("divergence: sandwiched needs alpha > 0");
        return sandwiched_divergence(rho, sigma, spec.alpha, spec.pure_reference_convention);
    }
    return petz_divergence(rho, sigma, spec.alpha, spec.pure_reference_convention);
}

double conditional_renyi(const CMatrix &rho_or_proj, BipartiteDims dims, double alpha) {
    require_psd_input(rho_or_proj, "conditional_renyi");
    const int n = dims.d_A * dims.d_B;
    if (rho_or_proj.rows() != n) throw InvalidDimensions("conditional_renyi: dims mismatch");

    if (alpha == 0.0) {
        CMatrix pi = support_projector(rho_or_proj);
        return std::log2(spectral_norm(partial_trace(pi, dims, Sys::A)));
    }
    if (alpha != 0.5) throw OutOfRange("conditional_renyi: alpha must be 0 or 1/2");

    // max_{sigma_Q} Re Tr[V X]  s.t.  [[rho_r, X],[X^+, I_S (x) sigma_Q]] >= 0,
    // Tr[sigma_Q] = 1, where rho = V rho_r V^+ is the compression of rho to its
    // support (keeps the feasible set's interior nonempty when rho is singular).
    // The optimum is the root fidelity max_sigma F(rho, I (x) sigma).
    auto er = eig_herm(rho_or_proj);
    const double cut = kSupportTol * std::max(er.values.cwiseAbs().maxCoeff(), 1e-300);
    std::vector<int> keep;
    for (int i = 0; i < er.values.size(); ++i)
        if (er.values(i) > cut) keep.push_back(i);
    const int r = static_cast<int>(keep.size());
    if (r == 0) return -inf();
    CMatrix vmap(n, r);
    CMatrix rho_r = CMatrix::Zero(r, r);
    for (int i = 0; i < r; ++i) {
        vmap.col(i) = er.vectors.col(keep[i]);
        rho_r(i, i) = er.values(keep[i]);
    }

    SdpProblem prob;
    int y = prob.add_psd_block("Y", r + n);
    int sg = prob.add_psd_block("sigma", dims.d_B);
    CMatrix is = identity(dims.d_A);
    prob.set_objective(Sense::Max, [y, r, n, vmap](const BlockValues &v) {
        return (vmap * v[y].block(0, r, r, n)).trace().real();
    });
    prob.add_eq([y, r](const BlockValues &v) -> CMatrix { return v[y].block(0, 0, r, r); },
                rho_r);
    prob.add_eq(
        [y, sg, r, n, is](const BlockValues &v) -> CMatrix {
            return v[y].block(r, r, n, n) - kron(is, v[sg]);
        },
        CMatrix::Zero(n, n));
    prob.add_eq(
        [sg](const BlockValues &v) -> CMatrix {
            CMatrix t(1, 1);
            t(0, 0) = v[sg].trace();
            return t;
        },
        CMatrix::Identity(1, 1));

    SdpSolution sol = solve_sdp(prob);
    if (sol.status != SdpStatus::Optimal)
        throw SolverFailure("conditional_renyi: " + sol.note);
    if (sol.objective <= 1e-300) return -inf();
    return 2.0 * std::log2(sol.objective);
}

double thermo_capacity_lower(const std::vector<std::pair<CMatrix, CMatrix>> &task_states,
                             const GibbsContext &ctx) {
    if (task_states.empty()) throw OutOfRange("thermo_capacity_lower: empty task");
    CMatrix ga = ctx.gamma_A();
    CMatrix gb = ctx.gamma_B();
    double best = -inf();
    for (const auto &[in, out] : task_states) {
        double d_out = relative_entropy(out, gb);
        double d_in = relative_entropy(in, ga);
        if (d_out == inf()) return inf();
        best = std::max(best, d_out - d_in);
    }
    return best;
}

}  // namespace neq
