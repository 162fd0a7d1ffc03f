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

#include "neq/cost.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "neq/errors.hpp"
#include "neq/sdp.hpp"

namespace neq {

namespace {

constexpr double kCommuteTol = 1e-9;
constexpr double kLeakTol = 1e-12;
constexpr double kTpTol = 1e-7;

double env_gap() {
    if (const char *env = std::getenv("NEQ_SOLVER_GAP")) {
        char *end = nullptr;
        double g = std::strtod(env, &end);
        if (end != env && g > 0.0 && g < 1.0) return g;
    }
    return 0.0;
}

SdpOptions default_opts() {
    SdpOptions opts;
    if (double g = env_gap(); g > 0.0) {
        opts.gap_tol = g;
        opts.feas_tol = g;
    }
    return opts;
}

ConeOptions lp_opts() {
    ConeOptions opts;
    opts.feas_tol = 1e-9;
    opts.abs_tol = 1e-9;
    opts.rel_tol = 1e-9;
    if (double g = env_gap(); g > 0.0) {
        opts.feas_tol = g;
        opts.abs_tol = g;
        opts.rel_tol = g;
    }
    return opts;
}

void check_projector_commutes(const CMatrix &pi, const Hamiltonian &h, const std::string &who) {
    if (pi.rows() != h.dim() || pi.cols() != h.dim())
        throw InvalidDimensions(who + ": projector does not match the Hamiltonian dimension");
    if ((pi - pi.adjoint()).cwiseAbs().maxCoeff() > kCommuteTol ||
        (pi * pi - pi).cwiseAbs().maxCoeff() > kCommuteTol)
        throw InvalidProjector(who + ": input is not an orthogonal projector");
    for (int i = 0; i < pi.rows(); ++i)
        for (int j = 0; j < pi.cols(); ++j)
            if (std::abs(pi(i, j)) * std::abs(h.energies[i] - h.energies[j]) > kCommuteTol)
                throw InvalidProjector(who + ": projector does not commute with the Hamiltonian");
}

// Projected input reference Pi Gamma_A Pi in the task's coordinates.
CMatrix projected_input(const Task &t) {
    return hermitize(t.input_projector * t.gamma_A * t.input_projector);
}

// Weight of the output space truncated away by the task's coordinates. A
// strictly positive value means the output reference is subnormalized and
// trace leaving the retained block can be dumped into the truncated Gibbs
// weight at relative cost leak / weight.
double truncated_output_weight(const Task &t) {
    return 1.0 - t.gamma_B.trace().real();
}

bool has_leak(const Task &t) { return truncated_output_weight(t) > kLeakTol; }

std::vector<CMatrix> sdp_ops(const Task &t) {
    if (t.covariant_average) return {*t.covariant_average};
    return t.perf_ops;
}

CMatrix clip_psd(const CMatrix &m, double tol, const std::string &who) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(m));
    Eigen::VectorXd ev = es.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    if (ev.minCoeff() < -tol * scale) throw ConstructionFailed(who);
    Eigen::VectorXd clipped = ev.cwiseMax(0.0);
    return hermitize(es.eigenvectors() * clipped.asDiagonal() *
                     es.eigenvectors().adjoint());
}

std::optional<int> label_param(const std::string &label, const std::string &key) {
    const std::string needle = ";" + key + "=";
    auto pos = label.find(needle);
    if (pos == std::string::npos) return std::nullopt;
    return std::atoi(label.c_str() + pos + needle.size());
}

// Shared result of the cost / accuracy / reverse programs.
struct ProgramOut {
    SdpStatus status = SdpStatus::NumericalFailure;
    double value = 0.0;
    double gap = 0.0;
    CMatrix choi;
    std::string note;
};

SdpStatus map_cone_status(ConeStatus s) {
    switch (s) {
        case ConeStatus::Optimal: return SdpStatus::Optimal;
        case ConeStatus::PrimalInfeasible: return SdpStatus::Infeasible;
        case ConeStatus::DualInfeasible: return SdpStatus::Unbounded;
        default: return SdpStatus::NumericalFailure;
    }
}

// ---------------------------------------------------------------------------
// Diagonal fast path. For tasks whose operators, projector, and references
// are all diagonal in the energy basis, a diagonal-unitary twirl of any
// feasible channel is again feasible with the same accuracy and no larger
// cost, so the programs restrict to diagonal Choi matrices and become LPs.
// ---------------------------------------------------------------------------

struct DiagTask {
    int d_in = 0, d_out = 0;
    Eigen::VectorXd pg;              // diag of Pi Gamma_A Pi
    Eigen::VectorXd gb;              // diag of Gamma_B
    std::vector<Eigen::VectorXd> w;  // per-op diagonal weights, length d_in*d_out
    double leak_weight = 0.0;
    std::vector<int> support;        // inputs with Pi(x,x) > 0
};

DiagTask diag_data(const Task &t) {
    DiagTask d;
    d.d_in = t.dims.d_A;
    d.d_out = t.dims.d_B;
    const CMatrix pgp = projected_input(t);
    d.pg = pgp.diagonal().real();
    d.gb = t.gamma_B.diagonal().real();
    for (const CMatrix &om : sdp_ops(t)) d.w.push_back(om.diagonal().real());
    const double lw = truncated_output_weight(t);
    d.leak_weight = lw > kLeakTol ? lw : 0.0;
    for (int x = 0; x < d.d_in; ++x)
        if (t.input_projector(x, x).real() > 0.5) d.support.push_back(x);
    return d;
}

CMatrix diag_choi(const DiagTask &d, const Eigen::VectorXd &x) {
    CMatrix m = CMatrix::Zero(d.d_in * d.d_out, d.d_in * d.d_out);
    for (int i = 0; i < d.d_in * d.d_out; ++i) m(i, i) = std::max(x(i), 0.0);
    return m;
}

// min lambda (mode Cost, fidelity fixed) or max t (mode Accuracy, lambda
// fixed or absent). Variables: m(x,y) row-major, then the scalar.
enum class DiagMode { Cost, Accuracy };

ProgramOut lp_gibbs(const Task &t, DiagMode mode, double fidelity,
                    std::optional<double> lambda) {
    const DiagTask d = diag_data(t);
    const int nm = d.d_in * d.d_out;
    const int n = nm + 1;
    const bool gibbs = mode == DiagMode::Cost || lambda.has_value();
    const bool leaky = gibbs && d.leak_weight > 0.0;
    const auto var = [&](int x, int y) { return x * d.d_out + y; };

    Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
    c(nm) = mode == DiagMode::Cost ? 1.0 : -1.0;

    // Equality rows: trace preservation on the projector support. With a
    // truncated output block the row relaxes to <= 1 and the deficit is
    // charged to the leak row below.
    const int n_sup = static_cast<int>(d.support.size());
    const int n_ops = static_cast<int>(d.w.size());
    int rows = nm + (gibbs ? d.d_out : 0) + n_ops + (leaky ? n_sup + 1 : 0);
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(rows, n);
    Eigen::VectorXd h = Eigen::VectorXd::Zero(rows);
    int r = 0;
    for (int i = 0; i < nm; ++i) G(r++, i) = -1.0;  // m >= 0
    if (gibbs) {
        for (int y = 0; y < d.d_out; ++y, ++r) {
            for (int x : d.support) G(r, var(x, y)) = d.pg(x);
            if (mode == DiagMode::Cost)
                G(r, nm) = -d.gb(y);
            else
                h(r) = *lambda * d.gb(y);
        }
    }
    for (int k = 0; k < n_ops; ++k, ++r) {
        for (int i = 0; i < nm; ++i) G(r, i) = -d.w[k](i);
        if (mode == DiagMode::Cost)
            h(r) = -fidelity;
        else
            G(r, nm) = 1.0;
    }
    if (leaky) {
        for (int x : d.support) {
            for (int y = 0; y < d.d_out; ++y) G(r, var(x, y)) = 1.0;
            h(r) = 1.0;
            ++r;
        }
        for (int x : d.support)
            for (int y = 0; y < d.d_out; ++y) G(r, var(x, y)) = -d.pg(x);
        if (mode == DiagMode::Cost)
            G(r, nm) = -d.leak_weight;
        else
            h(r) = *lambda * d.leak_weight;
        h(r) -= d.pg.sum();
        ++r;
    }

    Eigen::MatrixXd A(leaky ? 0 : n_sup, n);
    Eigen::VectorXd b(leaky ? 0 : n_sup);
    if (!leaky) {
        A.setZero();
        int ar = 0;
        for (int x : d.support) {
            for (int y = 0; y < d.d_out; ++y) A(ar, var(x, y)) = 1.0;
            b(ar) = 1.0;
            ++ar;
        }
    }

    ConeResult res = solve_cone_lp(c, G, h, ConeDims{rows, {}}, A, b, lp_opts());
    ProgramOut out;
    out.status = map_cone_status(res.status);
    out.note = res.note;
    if (out.status == SdpStatus::Optimal) {
        out.value = res.x(nm);
        out.gap = std::abs(res.gap);
        out.choi = diag_choi(d, res.x.head(nm));
    }
    return out;
}

// max t over diagonal time-reversed channels; t is defined on the reversed
// task (input on B).
ProgramOut lp_reverse(const Task &rev) {
    const DiagTask d = diag_data(rev);
    const int nm = d.d_in * d.d_out;
    const int n = nm + 1;
    const auto var = [&](int x, int y) { return x * d.d_out + y; };

    Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
    c(nm) = -1.0;
    const int n_ops = static_cast<int>(d.w.size());
    const int rows = nm + n_ops;
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(rows, n);
    Eigen::VectorXd h = Eigen::VectorXd::Zero(rows);
    int r = 0;
    for (int i = 0; i < nm; ++i) G(r++, i) = -1.0;
    for (int k = 0; k < n_ops; ++k, ++r) {
        for (int i = 0; i < nm; ++i) G(r, i) = -d.w[k](i);
        G(r, nm) = 1.0;
    }
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(d.d_in, n);
    Eigen::VectorXd b = Eigen::VectorXd::Ones(d.d_in);
    for (int x = 0; x < d.d_in; ++x)
        for (int y = 0; y < d.d_out; ++y) A(x, var(x, y)) = 1.0;

    ConeResult res = solve_cone_lp(c, G, h, ConeDims{rows, {}}, A, b, lp_opts());
    ProgramOut out;
    out.status = map_cone_status(res.status);
    out.note = res.note;
    if (out.status == SdpStatus::Optimal) {
        out.value = res.x(nm);
        out.gap = std::abs(res.gap);
        out.choi = diag_choi(d, res.x.head(nm));
    }
    return out;
}

// ---------------------------------------------------------------------------
// General semidefinite programs.
// ---------------------------------------------------------------------------

// min lambda s.t. M >= 0, Tr_B M = I (or <= I plus the leak row), output
// Tr_A[(Pi Gamma_A Pi (x) I) M] <= lambda Gamma_B, Tr[M Omega_x] >= F.
ProgramOut sdp_cost(const Task &t, double fidelity) {
    const int da = t.dims.d_A;
    const int db = t.dims.d_B;
    const BipartiteDims dims = t.dims;
    const CMatrix pgp = projected_input(t);
    const CMatrix lift = kron(pgp, identity(db));
    const CMatrix gb = t.gamma_B;
    const CMatrix ia = identity(da);
    const bool leaky = has_leak(t);
    const double leak_weight = truncated_output_weight(t);

    SdpProblem prob;
    const int m = prob.add_psd_block("choi", da * db);
    const int lam = prob.add_scalar_block("lambda");
    prob.set_objective(Sense::Min,
                       [lam](const BlockValues &v) { return v[lam](0, 0).real(); });
    if (!leaky) {
        prob.add_eq(
            [m, dims](const BlockValues &v) -> CMatrix {
                return partial_trace(v[m], dims, Sys::B);
            },
            ia);
    } else {
        prob.add_leq(
            [m, dims](const BlockValues &v) -> CMatrix {
                return partial_trace(v[m], dims, Sys::B);
            },
            ia);
        prob.add_leq(
            [m, lam, dims, pgp, ia, leak_weight](const BlockValues &v) -> CMatrix {
                CMatrix out = CMatrix::Zero(1, 1);
                const CMatrix q = partial_trace(v[m], dims, Sys::B);
                out(0, 0) = ((ia - q) * pgp).trace().real() -
                            v[lam](0, 0).real() * leak_weight;
                return out;
            },
            CMatrix::Zero(1, 1));
    }
    prob.add_leq(
        [m, lam, dims, lift, gb](const BlockValues &v) -> CMatrix {
            return hermitize(partial_trace(lift * v[m], dims, Sys::A)) -
                   v[lam](0, 0).real() * gb;
        },
        CMatrix::Zero(db, db));
    for (const CMatrix &om : sdp_ops(t)) {
        prob.add_leq(
            [m, om, fidelity](const BlockValues &v) -> CMatrix {
                CMatrix out = CMatrix::Zero(1, 1);
                out(0, 0) = fidelity - (v[m] * om).trace().real();
                return out;
            },
            CMatrix::Zero(1, 1));
    }

    SdpSolution sol = solve_sdp(prob, default_opts());
    ProgramOut out;
    out.status = sol.status;
    out.note = sol.note;
    if (sol.status == SdpStatus::Optimal) {
        out.value = sol.objective;
        out.gap = std::abs(sol.gap);
        out.choi = sol.blocks[m];
    }
    return out;
}

// max t s.t. M is a channel (Gibbs-bounded if lambda is given, PPT if
// requested) and Tr[M Omega_x] >= t for every operator.
ProgramOut sdp_accuracy(const Task &t, std::optional<double> lambda, bool ppt) {
    const int da = t.dims.d_A;
    const int db = t.dims.d_B;
    const BipartiteDims dims = t.dims;
    const CMatrix ia = identity(da);
    const bool leaky = lambda.has_value() && has_leak(t);

    SdpProblem prob;
    const int m = prob.add_psd_block("choi", da * db);
    const int tt = prob.add_scalar_block("accuracy");
    prob.set_objective(Sense::Max,
                       [tt](const BlockValues &v) { return v[tt](0, 0).real(); });
    if (!leaky) {
        prob.add_eq(
            [m, dims](const BlockValues &v) -> CMatrix {
                return partial_trace(v[m], dims, Sys::B);
            },
            ia);
    } else {
        const CMatrix pgp = projected_input(t);
        const double leak_weight = truncated_output_weight(t);
        prob.add_leq(
            [m, dims](const BlockValues &v) -> CMatrix {
                return partial_trace(v[m], dims, Sys::B);
            },
            ia);
        CMatrix leak_rhs = CMatrix::Zero(1, 1);
        leak_rhs(0, 0) = *lambda * leak_weight;
        prob.add_leq(
            [m, dims, pgp, ia](const BlockValues &v) -> CMatrix {
                CMatrix out = CMatrix::Zero(1, 1);
                out(0, 0) = ((ia - partial_trace(v[m], dims, Sys::B)) * pgp)
                                .trace()
                                .real();
                return out;
            },
            leak_rhs);
    }
    if (lambda) {
        const CMatrix lift = kron(projected_input(t), identity(db));
        const CMatrix rhs = *lambda * t.gamma_B;
        prob.add_leq(
            [m, dims, lift](const BlockValues &v) -> CMatrix {
                return hermitize(partial_trace(lift * v[m], dims, Sys::A));
            },
            rhs);
    }
    if (ppt) {
        prob.add_leq(
            [m, dims](const BlockValues &v) -> CMatrix {
                return (-partial_transpose(v[m], dims, Sys::B)).eval();
            },
            CMatrix::Zero(da * db, da * db));
    }
    for (const CMatrix &om : sdp_ops(t)) {
        prob.add_leq(
            [m, tt, om](const BlockValues &v) -> CMatrix {
                CMatrix out = CMatrix::Zero(1, 1);
                out(0, 0) = v[tt](0, 0).real() - (v[m] * om).trace().real();
                return out;
            },
            CMatrix::Zero(1, 1));
    }

    SdpSolution sol = solve_sdp(prob, default_opts());
    ProgramOut out;
    out.status = sol.status;
    out.note = sol.note;
    if (sol.status == SdpStatus::Optimal) {
        out.value = sol.objective;
        out.gap = std::abs(sol.gap);
        out.choi = sol.blocks[m];
    }
    return out;
}

// Dispatchers.
ProgramOut prog_cost(const Task &t, double fidelity) {
    if (t.diagonal) return lp_gibbs(t, DiagMode::Cost, fidelity, std::nullopt);
    return sdp_cost(t, fidelity);
}

ProgramOut prog_accuracy(const Task &t, std::optional<double> lambda, bool ppt) {
    // Diagonal Choi matrices coincide with their partial transpose, so the
    // PPT relaxation adds nothing on the diagonal path.
    if (t.diagonal) return lp_gibbs(t, DiagMode::Accuracy, 0.0, lambda);
    return sdp_accuracy(t, lambda, ppt);
}

// H_min(A|B) of the twisted task state via min Tr[Lambda], omega <= I (x)
// Lambda. Used when a covariant average makes the reverse value exact.
ProgramOut hmin_covariant(const Task &t) {
    const CMatrix sandwich =
        kron(inv_sqrt_on_support(t.gamma_A), sqrt_psd(t.gamma_B));
    const CMatrix omega = hermitize(sandwich * (*t.covariant_average) * sandwich);
    const int da = t.dims.d_A;
    const int db = t.dims.d_B;
    const CMatrix ia = identity(da);

    SdpProblem prob;
    const int lam = prob.add_psd_block("Lambda", db);
    prob.set_objective(Sense::Min, [lam](const BlockValues &v) {
        return v[lam].trace().real();
    });
    prob.add_leq(
        [lam, omega, ia](const BlockValues &v) -> CMatrix {
            return omega - kron(ia, v[lam]);
        },
        CMatrix::Zero(da * db, da * db));

    SdpSolution sol = solve_sdp(prob, default_opts());
    ProgramOut out;
    out.status = sol.status;
    out.note = sol.note;
    if (sol.status == SdpStatus::Optimal) {
        out.value = sol.objective;
        out.gap = std::abs(sol.gap);
    }
    return out;
}

// max over time-reversed channels of the worst-case reversed accuracy.
ProgramOut reverse_program(const Task &t) {
    Task rev = derived_task(t, DerivedKind::TimeReversed);
    if (rev.diagonal) return lp_reverse(rev);
    const BipartiteDims dims = rev.dims;
    const CMatrix ib = identity(dims.d_A);

    SdpProblem prob;
    const int m = prob.add_psd_block("choi", dims.d_A * dims.d_B);
    const int tt = prob.add_scalar_block("accuracy");
    prob.set_objective(Sense::Max,
                       [tt](const BlockValues &v) { return v[tt](0, 0).real(); });
    prob.add_eq(
        [m, dims](const BlockValues &v) -> CMatrix {
            return partial_trace(v[m], dims, Sys::B);
        },
        ib);
    for (const CMatrix &om : sdp_ops(rev)) {
        prob.add_leq(
            [m, tt, om](const BlockValues &v) -> CMatrix {
                CMatrix out = CMatrix::Zero(1, 1);
                out(0, 0) = v[tt](0, 0).real() - (v[m] * om).trace().real();
                return out;
            },
            CMatrix::Zero(1, 1));
    }

    SdpSolution sol = solve_sdp(prob, default_opts());
    ProgramOut out;
    out.status = sol.status;
    out.note = sol.note;
    if (sol.status == SdpStatus::Optimal) {
        out.value = sol.objective;
        out.gap = std::abs(sol.gap);
        out.choi = sol.blocks[m];
    }
    return out;
}

[[noreturn]] void throw_solver(const std::string &who, const ProgramOut &out) {
    std::ostringstream ss;
    ss << who << ": solver failed";
    if (!out.note.empty()) ss << " (" << out.note << ")";
    throw SolverFailure(ss.str());
}

CostMethod sdp_method(const Task &t) {
    if (t.covariant_average || t.diagonal) return CostMethod::Sdp;
    return t.bounds_only ? CostMethod::BoundOnly : CostMethod::Sdp;
}

double closed_cloning_kappa(const CloningSpec &spec, const GibbsContext &ctx) {
    return spec.delta() *
           (std::log2(ctx.z_A()) + ctx.beta * ctx.h_A.e_max() * kLog2E);
}

void check_cloning_context(const CloningSpec &spec, const GibbsContext &ctx,
                           const std::string &who) {
    if (spec.n < 1 || spec.m < spec.n || spec.d < 2)
        throw OutOfRange(who + ": need 1 <= n <= m, d >= 2");
    if (ctx.d_A() != spec.d)
        throw InvalidDimensions(who + ": context dimension must match d");
}

}  // namespace

// ---------------------------------------------------------------------------
// Channel cost and task accuracy.
// ---------------------------------------------------------------------------

CostReport channel_cost(const ChoiChannel &ch, const CMatrix &pi_A,
                        const GibbsContext &ctx) {
    if (ch.dims.d_A != ctx.d_A() || ch.dims.d_B != ctx.d_B())
        throw InvalidDimensions("channel_cost: channel does not match the context");
    check_projector_commutes(pi_A, ctx.h_A, "channel_cost");
    const CMatrix q = partial_trace(ch.choi, ch.dims, Sys::B);
    if ((q - identity(ch.dims.d_A)).cwiseAbs().maxCoeff() > kTpTol)
        throw InvalidChannel("channel_cost: Choi matrix is not trace preserving");
    const CMatrix pgp = hermitize(pi_A * ctx.gamma_A() * pi_A);
    CostReport r;
    r.value_bits = d_max(apply_channel(ch, pgp), ctx.gamma_B());
    r.method = CostMethod::ClosedForm;
    if (std::isinf(r.value_bits))
        r.note = "output leaves the support of the Gibbs reference";
    return r;
}

CostReport channel_cost(const ChoiChannel &ch, const Task &t) {
    if (ch.dims.d_A != t.dims.d_A || ch.dims.d_B != t.dims.d_B)
        throw InvalidDimensions("channel_cost: channel does not match the task");
    const CMatrix pgp = projected_input(t);
    const CMatrix q = partial_trace(ch.choi, ch.dims, Sys::B);
    const double tp_dev = (q - identity(t.dims.d_A)).cwiseAbs().maxCoeff();
    CostReport r;
    r.method = CostMethod::ClosedForm;
    double cost = d_max(apply_channel(ch, pgp), t.gamma_B);
    if (tp_dev > kTpTol) {
        // Subnormalized Choi: the missing trace is read as leaking into the
        // truncated output block and costed against its Gibbs weight.
        const double leak_weight = truncated_output_weight(t);
        if (leak_weight <= kLeakTol)
            throw InvalidChannel("channel_cost: Choi matrix is not trace preserving");
        if (lambda_max(hermitize(q) - identity(t.dims.d_A)) > kTpTol)
            throw InvalidChannel("channel_cost: Choi marginal exceeds the identity");
        const double leaked =
            std::max(0.0, ((identity(t.dims.d_A) - q) * pgp).trace().real());
        const double leak_cost =
            leaked > 0.0 ? std::log2(leaked / leak_weight) : -inf();
        cost = std::max(cost, leak_cost);
        r.note = "subnormalized channel; leak costed against the truncated block";
    }
    r.value_bits = cost;
    if (std::isinf(cost) && cost > 0)
        r.note = "output leaves the support of the Gibbs reference";
    return r;
}

double c_min_of(const CMatrix &pi_A, const GibbsContext &ctx) {
    check_projector_commutes(pi_A, ctx.h_A, "c_min_of");
    return std::log2((pi_A * ctx.gamma_A()).trace().real());
}

double c_min_of(const Task &t) {
    return std::log2((t.input_projector * t.gamma_A).trace().real());
}

double task_accuracy(const Task &t, const ChoiChannel &ch) {
    if (ch.dims.d_A != t.dims.d_A || ch.dims.d_B != t.dims.d_B)
        throw InvalidDimensions("task_accuracy: channel does not match the task");
    double worst = inf();
    for (const CMatrix &om : sdp_ops(t))
        worst = std::min(worst, (ch.choi * om).trace().real());
    return worst;
}

// ---------------------------------------------------------------------------
// Reverse entropy.
// ---------------------------------------------------------------------------

CostReport reverse_entropy(const Task &t) {
    CostReport r;
    if (t.covariant_average && !t.diagonal) {
        ProgramOut out = hmin_covariant(t);
        if (out.status != SdpStatus::Optimal) throw_solver("reverse_entropy", out);
        r.value_bits = out.value > 0 ? -std::log2(out.value) : inf();
        r.method = CostMethod::Sdp;
        r.solver_gap = out.gap;
        r.note = "covariant average; computed as H_min(A|B) of the twisted state";
        return r;
    }
    ProgramOut out = reverse_program(t);
    if (out.status != SdpStatus::Optimal) throw_solver("reverse_entropy", out);
    r.value_bits = out.value > 0 ? -std::log2(out.value) : inf();
    r.method = sdp_method(t);
    r.solver_gap = out.gap;
    if (out.choi.size() > 0)
        r.witness = ChoiChannel{out.choi, {t.dims.d_B, t.dims.d_A}};
    return r;
}

// ---------------------------------------------------------------------------
// Cost / accuracy trade-off.
// ---------------------------------------------------------------------------

CostReport cost_of_accuracy(const Task &t, double fidelity) {
    if (!(fidelity > 0.0) || fidelity > 1.0)
        throw OutOfRange("cost_of_accuracy: fidelity must lie in (0, 1]");
    ProgramOut out = prog_cost(t, fidelity);
    if (out.status == SdpStatus::NumericalFailure)
        out = prog_cost(t, fidelity * (1.0 - 1e-9));
    CostReport r;
    r.method = sdp_method(t);
    if (out.status == SdpStatus::Infeasible) {
        r.status = CostStatus::Infeasible;
        r.value_bits = inf();
        r.note = "fidelity above the task's maximum";
        return r;
    }
    if (out.status != SdpStatus::Optimal) throw_solver("cost_of_accuracy", out);
    const double cmin = c_min_of(t);
    double c = std::log2(std::max(out.value, 0.0));
    r.solver_gap = out.gap;
    r.witness = ChoiChannel{out.choi, t.dims};
    if (c <= cmin + 1e-9) {
        c = std::max(c, cmin);
        r.status = CostStatus::Clamped;
        r.note = "cost floor log2 Tr[Pi Gamma_A] reached";
    }
    r.value_bits = c;
    return r;
}

CostReport accuracy_of_cost(const Task &t, double cost_bits) {
    const double cmin = c_min_of(t);
    CostReport r;
    r.method = sdp_method(t);
    if (cost_bits < cmin - 1e-9) {
        r.status = CostStatus::Infeasible;
        r.value_bits = 0.0;
        r.note = "cost below log2 Tr[Pi Gamma_A]; no channel exists";
        return r;
    }
    const double lambda = std::exp2(cost_bits);
    ProgramOut out = prog_accuracy(t, lambda, false);
    if (out.status == SdpStatus::NumericalFailure)
        out = prog_accuracy(t, lambda * (1.0 + 1e-9), false);
    if (out.status != SdpStatus::Optimal) throw_solver("accuracy_of_cost", out);
    r.value_bits = out.value;
    r.solver_gap = out.gap;
    r.witness = ChoiChannel{out.choi, t.dims};
    return r;
}

FExtremes f_extremes(const Task &t) {
    ProgramOut out = prog_accuracy(t, std::nullopt, false);
    if (out.status != SdpStatus::Optimal) throw_solver("f_extremes", out);
    const double kappa = reverse_entropy(t).value_bits;
    return FExtremes{out.value, std::exp2(c_min_of(t) - kappa)};
}

// ---------------------------------------------------------------------------
// Achieving channels.
// ---------------------------------------------------------------------------

ChoiChannel build_mf_channel(const Task &t, const ChoiChannel &m0, double f0,
                             double f) {
    if (!(f0 > 0.0) || f0 > 1.0)
        throw OutOfRange("build_mf_channel: base fidelity must lie in (0, 1]");
    const CostReport base = channel_cost(m0, t);
    if (std::isinf(base.value_bits))
        throw ConstructionFailed("build_mf_channel: base channel has infinite cost");
    const double kappa = base.value_bits - std::log2(f0);
    const double cmin = c_min_of(t);
    const double f_star = std::exp2(cmin - kappa);
    if (f > f0 + 1e-9 || f < f_star - 1e-9)
        throw OutOfRange("build_mf_channel: fidelity outside [2^(c_min - kappa), F0]");
    const double p_star = f_star / f0;
    if (p_star > 1.0 - 1e-12) {
        if (std::abs(f - f0) < 1e-9) return m0;
        throw ConstructionFailed("build_mf_channel: trade-off interval collapsed");
    }
    const CMatrix pgp = projected_input(t);
    const CMatrix gtilde = pgp / pgp.trace().real();
    const CMatrix chi = clip_psd(
        (t.gamma_B - p_star * apply_channel(m0, gtilde)) / (1.0 - p_star), 1e-8,
        "build_mf_channel: interpolation state is not PSD; the base channel does "
        "not saturate the bound");
    const double p_f = std::min(f / f0, 1.0);
    ChoiChannel mf{
        hermitize(p_f * m0.choi + (1.0 - p_f) * kron(identity(t.dims.d_A), chi)),
        t.dims};
    const double cost = channel_cost(mf, t).value_bits;
    const double acc = task_accuracy(t, mf);
    if (std::abs(cost - (kappa + std::log2(f))) > 1e-6 || acc < f - 1e-6)
        throw ConstructionFailed("build_mf_channel: constructed channel misses the target");
    return mf;
}

ChoiChannel werner_cloner(const CloningSpec &spec, const GibbsContext &ctx) {
    check_cloning_context(spec, ctx, "werner_cloner");
    const int dn = sym_dim(spec.n, spec.d);
    const int dm = sym_dim(spec.m, spec.d);
    if (dn * dm > 64) throw TooLarge("werner_cloner: Choi side exceeds 64");
    const auto occ_n = occupations(spec.n, spec.d);
    const auto occ_m = occupations(spec.m, spec.d);
    const auto occ_b = occupations(spec.delta(), spec.d);
    std::map<std::vector<int>, int> index_m;
    for (int j = 0; j < dm; ++j) index_m[occ_m[j]] = j;

    auto log_binom = [](int a, int b) {
        return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
    };
    const double log_norm = log_binom(spec.m, spec.n);
    CMatrix choi = CMatrix::Zero(dn * dm, dn * dm);
    for (const auto &b : occ_b) {
        CVector v = CVector::Zero(dn * dm);
        for (int i = 0; i < dn; ++i) {
            std::vector<int> mvec = occ_n[i];
            double log_c = -log_norm;
            for (int x = 0; x < spec.d; ++x) {
                mvec[x] += b[x];
                log_c += log_binom(mvec[x], occ_n[i][x]);
            }
            v(i * dm + index_m.at(mvec)) = std::exp(0.5 * log_c);
        }
        choi += v * v.adjoint();
    }
    choi *= static_cast<double>(dn) / dm;
    ChoiChannel ch{hermitize(choi), {dn, dm}};

    const CMatrix q = partial_trace(ch.choi, ch.dims, Sys::B);
    if ((q - identity(dn)).cwiseAbs().maxCoeff() > 1e-9)
        throw ConstructionFailed("werner_cloner: Choi matrix is not trace preserving");
    const CMatrix ga = sym_gibbs_projected(ctx.h_A, ctx.beta, spec.n);
    const CMatrix gb = sym_gibbs_projected(ctx.h_A, ctx.beta, spec.m);
    const double cost = d_max(apply_channel(ch, ga), gb);
    const double closed =
        closed_cloning_kappa(spec, ctx) + std::log2(static_cast<double>(dn) / dm);
    if (std::abs(cost - closed) > 1e-7)
        throw ConstructionFailed("werner_cloner: cost misses the closed form");
    return ch;
}

ChoiChannel state_estimation_cloner(const CloningSpec &spec) {
    if (spec.n < 1 || spec.m < spec.n || spec.d < 2)
        throw OutOfRange("state_estimation_cloner: need 1 <= n <= m, d >= 2");
    const int dn = sym_dim(spec.n, spec.d);
    const int dm = sym_dim(spec.m, spec.d);
    if (dn * dm > 64)
        throw TooLarge("state_estimation_cloner: Choi side exceeds 64");
    const int d_sum = sym_dim(spec.n + spec.m, spec.d);
    const CMatrix s = sym_split_isometry(spec.n, spec.m, spec.d);
    CMatrix choi = partial_transpose(s * s.adjoint(), {dn, dm}, Sys::A) *
                   (static_cast<double>(dn) / d_sum);
    return ChoiChannel{hermitize(choi), {dn, dm}};
}

// ---------------------------------------------------------------------------
// Entanglement-breaking bound and transposition closed forms.
// ---------------------------------------------------------------------------

CostReport eb_bound(const Task &t, double fidelity) {
    if (!(fidelity > 0.0) || fidelity > 1.0)
        throw OutOfRange("eb_bound: fidelity must lie in (0, 1]");
    const CostReport fwd = reverse_entropy(t);
    const CostReport rev = reverse_entropy(derived_task(t, DerivedKind::Transposed));
    const double kappa_eb = std::max(fwd.value_bits, rev.value_bits);
    CostReport r;
    r.value_bits = kappa_eb + std::log2(fidelity);
    r.method = t.eb_exact ? CostMethod::Sdp : CostMethod::BoundOnly;
    if (fwd.solver_gap && rev.solver_gap)
        r.solver_gap = *fwd.solver_gap + *rev.solver_gap;
    std::ostringstream note;
    note << "kappa=" << fwd.value_bits << ", transposed kappa=" << rev.value_bits;
    r.note = note.str();
    return r;
}

double transpose_cloning_kappa_bound(const CloningSpec &spec,
                                     const GibbsContext &ctx) {
    check_cloning_context(spec, ctx, "transpose_cloning_kappa_bound");
    const int dm = sym_dim(spec.m, spec.d);
    const int d_sum = sym_dim(spec.n + spec.m, spec.d);
    const double de = ctx.h_A.e_max() - ctx.h_A.e_min();
    return closed_cloning_kappa(spec, ctx) +
           std::log2(static_cast<double>(d_sum) / dm) -
           ctx.beta * spec.m * de * kLog2E;
}

// ---------------------------------------------------------------------------
// Phase-covariant channels and the qubit benchmark.
// ---------------------------------------------------------------------------

PhaseCovariantReport phase_covariant(const PhaseCovariantChannel &pc,
                                     const GibbsContext &ctx) {
    const int d = pc.dim();
    if (d < 2 || pc.p.cols() != d || pc.c.rows() != d || pc.c.cols() != d)
        throw InvalidDimensions("phase_covariant: parameter matrices must be d x d");
    if (ctx.d_A() != d || ctx.d_B() != d)
        throw InvalidDimensions("phase_covariant: context dimension mismatch");
    for (int n = 0; n < d; ++n) {
        double col = 0.0;
        for (int m = 0; m < d; ++m) {
            if (pc.p(m, n) < -1e-12)
                throw InvalidChannel("phase_covariant: negative transition weight");
            col += pc.p(m, n);
        }
        if (std::abs(col - 1.0) > 1e-9)
            throw InvalidChannel("phase_covariant: columns of p must sum to one");
    }
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < m; ++n)
            if (std::norm(pc.c(m, n)) >
                pc.p(m, n) * pc.p(n, m) * (1.0 + 1e-9) + 1e-12)
                throw InvalidChannel(
                    "phase_covariant: coherence exceeds sqrt(p_mn p_nm)");

    CMatrix choi = CMatrix::Zero(d * d, d * d);
    for (int n = 0; n < d; ++n)
        for (int m = 0; m < d; ++m) choi(n * d + m, n * d + m) = pc.p(m, n);
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < m; ++n) {
            choi(n * d + m, m * d + n) = pc.c(m, n);
            choi(m * d + n, n * d + m) = std::conj(pc.c(m, n));
        }

    double cost = -inf();
    for (int m = 0; m < d; ++m) {
        double row = 0.0;
        for (int n = 0; n < d; ++n) row += pc.p(m, n) * ctx.g_A(n);
        cost = std::max(cost, std::log2(row / ctx.g_B(m)));
    }

    Eigen::MatrixXd p = pc.p;
    CMatrix c = pc.c;
    auto fidelity = [p, c, d](const CVector &psi) {
        if (psi.size() != d)
            throw InvalidDimensions("phase_covariant fidelity: state dimension mismatch");
        double f = 0.0;
        for (int m = 0; m < d; ++m) {
            const double wm = std::norm(psi(m));
            f += p(m, m) * wm * wm;
            for (int n = 0; n < m; ++n)
                f += std::norm(psi(n)) * wm *
                     (p(m, n) + p(n, m) + 2.0 * std::real(c(m, n)));
        }
        return f;
    };

    return PhaseCovariantReport{ChoiChannel{choi, {d, d}}, cost, fidelity};
}

PhaseCovariantChannel qubit_benchmark_channel(double fidelity) {
    if (!(fidelity >= 0.5) || fidelity > 0.75)
        throw OutOfRange("qubit_benchmark_channel: fidelity must lie in [1/2, 3/4]");
    PhaseCovariantChannel pc;
    pc.p = Eigen::MatrixXd(2, 2);
    pc.c = CMatrix::Zero(2, 2);
    const double f = fidelity;
    pc.p(0, 0) = f * (3.0 - 4.0 * f) / (1.0 - f);
    pc.p(1, 0) = (2.0 * f - 1.0) * (2.0 * f - 1.0) / (1.0 - f);
    pc.p(0, 1) = 1.0 - f;
    pc.p(1, 1) = f;
    pc.c(1, 0) = 2.0 * f - 1.0;
    return pc;
}

BenchmarkReport qubit_benchmark(double fidelity, const GibbsContext &ctx) {
    const int d = ctx.d_A();
    if (ctx.d_B() != d || d < 2)
        throw InvalidDimensions("qubit_benchmark: context must act on one qudit");
    // gamma collects the Boltzmann factors of consecutive level gaps.
    double sq = 0.0;
    for (int m = 1; m < d; ++m)
        sq += std::exp(-0.5 * ctx.beta * (ctx.h_A.energies[m] - ctx.h_A.energies[m - 1]));
    const double gamma = sq * sq;

    BenchmarkReport r;
    r.f_max = 2.0 / (d + 1);
    if (d == 2) {
        const double eb = std::exp(ctx.beta *
                                   (ctx.h_A.energies[1] - ctx.h_A.energies[0]));
        r.f_min = (eb + 1.0) / (2.0 * eb + 1.0);
        r.method = CostMethod::ClosedForm;
    } else {
        r.f_min = (d + 2.0 * std::sqrt(gamma)) / (d * d + 2.0 * std::sqrt(gamma));
        r.method = CostMethod::BoundOnly;
    }

    double f = fidelity;
    const double lo = (d + 2.0 * std::sqrt(gamma)) / (d * d + 2.0 * std::sqrt(gamma));
    if (f < lo - 1e-12 || f > r.f_max + 1e-12) {
        f = std::clamp(f, lo, r.f_max);
        r.status = CostStatus::Clamped;
        r.note = "fidelity clamped into the achievable window";
    }
    const double num = d * d * f - d;
    double value = std::log2(num * num / (4.0 * gamma * (1.0 - f)) + f);
    if (value < 0.0) {
        value = 0.0;
        r.status = CostStatus::Clamped;
        r.note = r.note.empty() ? "closed form below zero; cost floored at 0"
                                : r.note + "; cost floored at 0";
    }
    r.cost_bits = value;
    return r;
}

// ---------------------------------------------------------------------------
// Classical and thermodynamic oracles.
// ---------------------------------------------------------------------------

double kappa_classical(const std::vector<int> &f, const GibbsContext &ctx) {
    if (static_cast<int>(f.size()) != ctx.d_A())
        throw InvalidFunction("kappa_classical: table size must equal d_A");
    std::vector<double> pushed(ctx.d_B(), 0.0);
    for (int x = 0; x < ctx.d_A(); ++x) {
        if (f[x] < 0 || f[x] >= ctx.d_B())
            throw InvalidFunction("kappa_classical: table value out of range");
        pushed[f[x]] += ctx.g_A(x);
    }
    double best = -inf();
    for (int y = 0; y < ctx.d_B(); ++y)
        if (pushed[y] > 0.0)
            best = std::max(best, std::log2(pushed[y] / ctx.g_B(y)));
    return best;
}

ErasureReport erasure_oracle(const GibbsContext &ctx, double fidelity) {
    const double f_min = ctx.g_B(0);
    if (fidelity < f_min - 1e-12 || fidelity > 1.0 + 1e-12)
        throw OutOfRange("erasure_oracle: fidelity must lie in [g_B(0), 1]");
    const double kappa = -std::log2(f_min);
    const double cost =
        std::max(0.0, kappa + std::log2(std::min(fidelity, 1.0)));
    return ErasureReport{cost, cost, f_min};
}

double cloning_oracle(const CloningSpec &spec, const GibbsContext &ctx,
                      double fidelity, CloningVariant variant) {
    check_cloning_context(spec, ctx, "cloning_oracle");
    const double kappa = closed_cloning_kappa(spec, ctx);
    const double f_max =
        variant == CloningVariant::Quantum
            ? static_cast<double>(sym_dim(spec.n, spec.d)) / sym_dim(spec.m, spec.d)
            : 1.0;
    const double cmin =
        std::log2(sym_gibbs_projected(ctx.h_A, ctx.beta, spec.n).trace().real());
    const double f_min = std::exp2(cmin - kappa);
    if (fidelity < f_min - 1e-12 || fidelity > f_max + 1e-12)
        throw OutOfRange("cloning_oracle: fidelity outside the achievable window");
    return kappa + std::log2(std::min(fidelity, f_max));
}

double extractable_work(const DensityOperator &rho, const GibbsContext &ctx) {
    if (rho.dim() != ctx.d_A())
        throw InvalidDimensions("extractable_work: state does not match the context");
    CMatrix pinched = rho.matrix;
    for (int i = 0; i < rho.dim(); ++i)
        for (int j = 0; j < rho.dim(); ++j)
            if (std::abs(ctx.h_A.energies[i] - ctx.h_A.energies[j]) > 1e-12)
                pinched(i, j) = 0.0;
    return d_min(hermitize(pinched), ctx.gamma_A());
}

MemoryErasureReport memory_erasure_bound(const CMatrix &pi_sq,
                                         const std::vector<double> &joint_energies,
                                         double beta, BipartiteDims dims) {
    const int d_total = dims.d_A * dims.d_B;
    if (pi_sq.rows() != d_total || pi_sq.cols() != d_total ||
        static_cast<int>(joint_energies.size()) != d_total)
        throw InvalidDimensions("memory_erasure_bound: dimension mismatch");
    check_projector_commutes(pi_sq, make_hamiltonian(joint_energies),
                             "memory_erasure_bound");
    Eigen::VectorXd w(d_total);
    for (int i = 0; i < d_total; ++i) w(i) = std::exp(-beta * joint_energies[i]);
    CMatrix gamma = CMatrix::Zero(d_total, d_total);
    gamma.diagonal() = (w / w.sum()).cast<std::complex<double>>();

    const CMatrix pgp = hermitize(pi_sq * gamma * pi_sq);
    const double weight = pgp.trace().real();
    if (weight <= kSupportTol)
        throw InvalidProjector("memory_erasure_bound: projector misses the Gibbs support");
    const CMatrix gtilde = pgp / weight;
    const CMatrix gamma_q = partial_trace(gtilde, dims, Sys::A);
    const CMatrix target = kron(basis_proj(0, dims.d_A), gamma_q);

    MemoryErasureReport r;
    r.general = d_max(target, gamma) - d_max(gtilde, gamma);
    bool degenerate = true;
    for (double e : joint_energies)
        if (std::abs(e - joint_energies[0]) > 1e-12) degenerate = false;
    if (degenerate)
        r.degenerate_h0 = std::log2(lambda_max(partial_trace(pi_sq, dims, Sys::A)));
    return r;
}

// ---------------------------------------------------------------------------
// Trade-off curves.
// ---------------------------------------------------------------------------

namespace {

Task classical_variant_of(const Task &t) {
    if (t.diagonal) return t;
    if (t.label.rfind("cloning;", 0) == 0) {
        CloningSpec spec;
        spec.n = label_param(t.label, "n").value_or(1);
        spec.m = label_param(t.label, "m").value_or(2);
        spec.d = label_param(t.label, "d").value_or(2);
        return cloning_task(spec, t.ctx, CloningVariant::Classical);
    }
    throw OutOfRange("scan_curve: no classical variant for task " + t.label);
}

TradeoffCurve one_curve(const Task &t, int n_points, CurveVariant variant,
                        int jobs) {
    TradeoffCurve curve;
    curve.variant = variant;

    Task task = variant == CurveVariant::Classical ? classical_variant_of(t) : t;
    curve.task_label = task.label;
    curve.c_min = c_min_of(task);

    if (variant == CurveVariant::Eb) {
        const double kappa = reverse_entropy(task).value_bits;
        const double kappa_t =
            reverse_entropy(derived_task(task, DerivedKind::Transposed)).value_bits;
        curve.kappa = std::max(kappa, kappa_t);
        ProgramOut fmax = prog_accuracy(task, std::nullopt, true);
        if (fmax.status != SdpStatus::Optimal) throw_solver("scan_curve", fmax);
        curve.f_max = fmax.value;
        curve.f_min = std::exp2(curve.c_min - curve.kappa);
        if (!task.eb_exact)
            curve.note = "entanglement-breaking bound; not proven tight for this task";
        for (int i = 0; i < n_points; ++i) {
            const double f =
                curve.f_min +
                (curve.f_max - curve.f_min) * i / static_cast<double>(n_points - 1);
            const double c = curve.kappa + std::log2(f);
            curve.points.push_back(CurvePoint{f, c, c, CostStatus::Ok});
        }
        return curve;
    }

    curve.kappa = reverse_entropy(task).value_bits;
    if (variant == CurveVariant::Classical) {
        curve.f_max = 1.0;
    } else {
        ProgramOut fmax = prog_accuracy(task, std::nullopt, false);
        if (fmax.status != SdpStatus::Optimal) throw_solver("scan_curve", fmax);
        curve.f_max = std::min(fmax.value, 1.0);
    }
    curve.f_min = std::exp2(curve.c_min - curve.kappa);

    curve.points.resize(n_points);
    std::vector<std::string> errors(n_points);
    auto eval = [&](int i) {
        const double f =
            curve.f_min +
            (curve.f_max - curve.f_min) * i / static_cast<double>(n_points - 1);
        CurvePoint pt;
        pt.fidelity = f;
        pt.lower_bound_bits = curve.kappa + std::log2(f);
        try {
            CostReport rep = cost_of_accuracy(task, std::min(f, 1.0));
            if (rep.status == CostStatus::Infeasible)
                // The SDP f_max overshoots the boundary by its gap tolerance;
                // nudge back inside.
                rep = cost_of_accuracy(task, std::min(f, 1.0) * (1.0 - 1e-7));
            pt.cost_bits = rep.value_bits;
            pt.status = rep.status;
        } catch (const std::exception &e) {
            pt.cost_bits = std::numeric_limits<double>::quiet_NaN();
            pt.status = CostStatus::Infeasible;
            errors[i] = e.what();
        }
        curve.points[i] = pt;
    };
    const int workers = std::max(1, std::min(jobs, n_points));
    if (workers == 1) {
        for (int i = 0; i < n_points; ++i) eval(i);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < workers; ++k)
            pool.emplace_back([&, k] {
                for (int i = k; i < n_points; i += workers) eval(i);
            });
        for (auto &th : pool) th.join();
    }
    for (int i = 0; i < n_points; ++i)
        if (!errors[i].empty())
            curve.note += (curve.note.empty() ? "" : "; ") + ("point " + std::to_string(i) + ": " + errors[i]);
    return curve;
}

}  // namespace

std::vector<TradeoffCurve> scan_curve(const Task &t, int n_points,
                                      const std::vector<CurveVariant> &variants,
                                      int jobs) {
    if (n_points < 2) throw OutOfRange("scan_curve: need at least two points");
    if (variants.empty()) throw OutOfRange("scan_curve: no variants requested");
    std::vector<TradeoffCurve> out;
    out.reserve(variants.size());
    for (CurveVariant v : variants) out.push_back(one_curve(t, n_points, v, jobs));
    return out;
}

}  // namespace neq
