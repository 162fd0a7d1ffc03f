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

#include "neq/quantum.hpp"

#include <algorithm>
#include <cmath>

namespace neq {

bool Hamiltonian::degenerate() const {
    for (double e : energies)
        if (e != energies.front()) return false;
    return true;
}

Hamiltonian make_hamiltonian(std::vector<double> energies) {
    if (energies.empty()) throw InvalidDimensions("make_hamiltonian: empty energy list");
    for (double e : energies)
        if (!std::isfinite(e)) throw OutOfRange("make_hamiltonian: non-finite energy");
    if (!std::is_sorted(energies.begin(), energies.end()))
        throw OutOfRange("make_hamiltonian: energies must be ascending");
    return Hamiltonian{std::move(energies)};
}

Hamiltonian degenerate_hamiltonian(int d) {
    if (d <= 0) throw InvalidDimensions("degenerate_hamiltonian: dimension must be positive");
    return Hamiltonian{std::vector<double>(d, 0.0)};
}

namespace {

double partition_function(const Hamiltonian &h, double beta) {
    double z = 0.0;
    for (double e : h.energies) z += std::exp(-beta * e);
    return z;
}

CMatrix gibbs_matrix(const Hamiltonian &h, double beta) {
    const int d = h.dim();
    const double z = partition_function(h, beta);
    CMatrix g = CMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) g(i, i) = std::exp(-beta * h.energies[i]) / z;
    return g;
}

}  // namespace

double GibbsContext::z_A() const { return partition_function(h_A, beta); }
double GibbsContext::z_B() const { return partition_function(h_B, beta); }
double GibbsContext::g_A(int i) const { return std::exp(-beta * h_A.energies.at(i)) / z_A(); }
double GibbsContext::g_B(int i) const { return std::exp(-beta * h_B.energies.at(i)) / z_B(); }
CMatrix GibbsContext::gamma_A() const { return gibbs_matrix(h_A, beta); }
CMatrix GibbsContext::gamma_B() const { return gibbs_matrix(h_B, beta); }
GibbsContext GibbsContext::swapped() const { return GibbsContext{beta, h_B, h_A}; }

GibbsContext make_context(double beta, Hamiltonian h_A, Hamiltonian h_B) {
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw OutOfRange("make_context: beta must be finite and nonnegative");
    return GibbsContext{beta, std::move(h_A), std::move(h_B)};
}

nlohmann::json context_to_json(const GibbsContext &ctx) {
    return nlohmann::json{{"beta", ctx.beta},
                          {"energies_A", ctx.h_A.energies},
                          {"energies_B", ctx.h_B.energies}};
}

GibbsContext context_from_json(const nlohmann::json &j) {
    try {
        return make_context(j.at("beta").get<double>(),
                            make_hamiltonian(j.at("energies_A").get<std::vector<double>>()),
                            make_hamiltonian(j.at("energies_B").get<std::vector<double>>()));
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("GibbsContext JSON: ") + e.what());
    }
}

GibbsStateInfo gibbs_state(const Hamiltonian &h, double beta) {
    if (!(beta >= 0.0) || !std::isfinite(beta))
        throw OutOfRange("gibbs_state: beta must be finite and nonnegative");
    GibbsStateInfo info;
    info.z = partition_function(h, beta);
    info.state = gibbs_matrix(h, beta);
    info.mean_energy = 0.0;
    for (int i = 0; i < h.dim(); ++i)
        info.mean_energy += h.energies[i] * info.state(i, i).real();
    const double ln_z = std::log(info.z);
    info.entropy_bits = (ln_z + beta * info.mean_energy) * kLog2E;
    info.free_energy = beta > 0.0 ? -ln_z / beta : -inf();
    return info;
}

DensityOperator make_state(const CMatrix &m) {
    if (m.rows() != m.cols()) throw InvalidDimensions("make_state: matrix not square");
    if (!is_hermitian(m, 1e-9)) throw NotHermitian("make_state: not Hermitian");
    if (std::abs(m.trace().real() - 1.0) > 1e-9 || std::abs(m.trace().imag()) > 1e-9)
        throw NotPsd("make_state: trace differs from one");
    EigH e = eig_herm(m);
    if (e.values.minCoeff() < -1e-9) throw NotPsd("make_state: negative eigenvalue");
    return DensityOperator{m};
}

ChoiChannel make_channel(const CMatrix &choi, BipartiteDims dims) {
    if (choi.rows() != static_cast<long>(dims.d_A) * dims.d_B)
        throw InvalidDimensions("make_channel: Choi side does not match dims");
    if (!is_hermitian(choi, 1e-8)) throw NotHermitian("make_channel: Choi not Hermitian");
    if (lambda_min(choi) < -1e-9 * std::max(1.0, lambda_max(choi)))
        throw NotPsd("make_channel: Choi has a negative eigenvalue");
    CMatrix marg = partial_trace(choi, dims, Sys::B);
    if ((marg - identity(dims.d_A)).cwiseAbs().maxCoeff() > 1e-8)
        throw InvalidChannel("make_channel: Tr_B[choi] differs from the identity");
    return ChoiChannel{choi, dims};
}

ChoiChannel identity_channel(int d) {
    CMatrix m = CMatrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m += kron(ket_bra(i, j, d), ket_bra(i, j, d));
    return ChoiChannel{m, {d, d}};
}

ChoiChannel constant_channel(const CMatrix &sigma_B, int d_A) {
    return ChoiChannel{kron(identity(d_A), sigma_B),
                       {d_A, static_cast<int>(sigma_B.rows())}};
}

CMatrix apply_channel(const ChoiChannel &ch, const CMatrix &X) {
    if (X.rows() != ch.dims.d_A || X.cols() != ch.dims.d_A)
        throw InvalidDimensions("apply_channel: input side mismatch");
    CMatrix lifted = kron(X.transpose(), identity(ch.dims.d_B));
    return partial_trace(lifted * ch.choi, ch.dims, Sys::A);
}

double d_max(const CMatrix &rho, const CMatrix &sigma) {
    if (!is_psd(rho, 1e-9)) throw NotPsd("d_max: rho not PSD");
    if (!is_psd(sigma, 1e-9)) throw NotPsd("d_max: sigma not PSD");
    CMatrix pi = support_projector(sigma);
    const double leak =
        ((identity(static_cast<int>(sigma.rows())) - pi) * rho).trace().real();
    if (leak > kSupportTol * std::max(1.0, rho.trace().real())) return inf();
    CMatrix s = inv_sqrt_on_support(sigma);
    return std::log2(spectral_norm(hermitize(s * rho * s)));
}

double d_min(const CMatrix &rho, const CMatrix &sigma) {
    if (!is_psd(rho, 1e-9)) throw NotPsd("d_min: rho not PSD");
    if (!is_psd(sigma, 1e-9)) throw NotPsd("d_min: sigma not PSD");
    const double overlap = (support_projector(rho) * sigma).trace().real();
    if (overlap <= 0.0) return inf();
    return -std::log2(overlap);
}

double fidelity(const CMatrix &rho, const CMatrix &sigma) {
    const double root = trace_norm(sqrt_psd(rho) * sqrt_psd(sigma));
    return std::clamp(root * root, 0.0, 1.0);
}

double generalized_fidelity(const CMatrix &rho, const CMatrix &sigma) {
    const double root = trace_norm(sqrt_psd(rho) * sqrt_psd(sigma));
    const double defect = std::sqrt(std::max(0.0, 1.0 - rho.trace().real()) *
                                    std::max(0.0, 1.0 - sigma.trace().real()));
    return std::clamp((root + defect) * (root + defect), 0.0, 1.0);
}

Distances distances(const DensityOperator &rho, const DensityOperator &sigma) {
    Distances d;
    d.fidelity = fidelity(rho.matrix, sigma.matrix);
    d.trace_distance = 0.5 * trace_norm(rho.matrix - sigma.matrix);
    d.purified_distance = std::sqrt(std::max(0.0, 1.0 - d.fidelity));
    return d;
}

CMatrix time_reverse_perf_op(const CMatrix &omega, const GibbsContext &ctx) {
    return time_reverse_with(omega, ctx.gamma_A(), ctx.gamma_B(), ctx.dims());
}

CMatrix time_reverse_with(const CMatrix &omega, const CMatrix &gamma_A,
                          const CMatrix &gamma_B, BipartiteDims dims) {
    const int dA = dims.d_A, dB = dims.d_B;
    if (omega.rows() != static_cast<long>(dA) * dB)
        throw InvalidDimensions("time_reverse_with: operator side mismatch");
    CMatrix marg_A = partial_trace(omega, dims, Sys::B);
    const double leak =
        ((identity(dA) - support_projector(gamma_A)) * marg_A).trace().real();
    if (leak > kSupportTol * std::max(1.0, marg_A.trace().real()))
        throw SupportError("time_reverse_with: omega leaves the support of Gamma_A");

    // Full transpose, then reorder factors to B (x) A.
    CMatrix swapped = swap_sides(omega.transpose(), dims);
    CMatrix sandwich = kron(sqrt_psd(gamma_B), inv_sqrt_on_support(gamma_A));
    return hermitize(sandwich * swapped * sandwich);
}

CMatrix transpose_perf_op(const CMatrix &omega, BipartiteDims dims) {
    return partial_transpose(omega, dims, Sys::B);
}

}  // namespace neq
