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

#include "neq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

#include "neq/cost.hpp"
#include "neq/entropy.hpp"
#include "neq/errors.hpp"
#include "neq/sdp.hpp"
#include "neq/tasks.hpp"

namespace neq::verify {

namespace {

GibbsContext flat_ctx(int d) {
    return make_context(1.0, degenerate_hamiltonian(d), degenerate_hamiltonian(d));
}

// Qubit context with e^{beta dE} = ratio on both sides.
GibbsContext ratio_qubit(double ratio) {
    return make_context(std::log(ratio), make_hamiltonian({0.0, 1.0}),
                        make_hamiltonian({0.0, 1.0}));
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

// Accumulates deviations, each against its own pinned tolerance; a check
// passes when every deviation stays within its tolerance. The reported worst
// is the raw deviation of the point with the largest dev/tol ratio.
struct Tracker {
    double worst_ratio = 0.0;
    double worst_dev = 0.0;
    double worst_tol = 0.0;
    int points = 0;
    std::string where;

    void add(double dev, double tol, const std::string &loc) {
        ++points;
        const double ratio = dev / tol;
        if (ratio > worst_ratio) {
            worst_ratio = ratio;
            worst_dev = dev;
            worst_tol = tol;
            where = loc;
        }
    }

    void fail(const std::string &loc) { add(1.0, 1e-12, loc); }
};

CheckResult finish(const std::string &id, const std::string &name, const Tracker &t) {
    CheckResult r;
    r.id = id;
    r.name = name;
    r.worst = t.worst_dev;
    r.tol = t.worst_tol;
    r.pass = t.worst_ratio <= 1.0;
    std::ostringstream os;
    os << "worst " << fmt(t.worst_dev) << " of tol " << fmt(t.worst_tol) << " over "
       << t.points << " checks";
    if (!t.where.empty()) os << " (" << t.where << ")";
    r.detail = os.str();
    return r;
}

double werner_closed_cost(const CloningSpec &s, const GibbsContext &ctx) {
    const double dn = sym_dim(s.n, s.d);
    const double dm = sym_dim(s.m, s.d);
    return s.delta() * (std::log2(ctx.z_A()) + ctx.beta * ctx.h_A.e_max() * kLog2E) +
           std::log2(dn / dm);
}

CMatrix random_psd(std::mt19937 &rng, int d) {
    std::normal_distribution<double> g;
    CMatrix r(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r(i, j) = std::complex<double>(g(rng), g(rng));
    CMatrix p = r * r.adjoint();
    return 0.5 * (p + p.adjoint());
}

CMatrix random_state(std::mt19937 &rng, int d) {
    CMatrix p = random_psd(rng, d);
    p += 1e-3 * CMatrix::Identity(d, d);
    return p / p.trace().real();
}

Hamiltonian random_h(std::mt19937 &rng, int d, double max_gap) {
    std::uniform_real_distribution<double> u(0.05, max_gap);
    std::vector<double> e(d, 0.0);
    for (int i = 1; i < d; ++i) e[i] = e[i - 1] + u(rng);
    return make_hamiltonian(e);
}

// ---------------------------------------------------------------------------
// Criterion checks
// ---------------------------------------------------------------------------

CheckResult check_transposition_kappa(const VerifyOptions &opts) {
    Tracker t;
    for (int d : {2, 3, 4}) {
        const double kap = reverse_entropy(transposition_task(d, flat_ctx(d))).value_bits;
        t.add(std::abs(kap - std::log2((d + 1) / 2.0)), opts.tol, "d=" + std::to_string(d));
    }
    return finish("transposition-kappa", "transposition reverse entropy log2((d+1)/2)", t);
}

CheckResult check_erasure_line(const VerifyOptions &opts) {
    Tracker t;
    int c = 0;
    for (const GibbsContext &ctx : {flat_ctx(2), ratio_qubit(2.0)}) {
        const std::string tag = c++ == 0 ? "flat" : "e^b=2";
        Task task = erasure_task(2, ctx);
        const double f_min = ctx.g_B(0);
        t.add(std::abs(reverse_entropy(task).value_bits + std::log2(f_min)), opts.tol,
              tag + " kappa");
        for (int i = 0; i <= 10; ++i) {
            const double f = f_min + (1.0 - f_min) * i / 10.0;
            ErasureReport oracle = erasure_oracle(ctx, f);
            CostReport sdp = cost_of_accuracy(task, f);
            t.add(std::abs(sdp.value_bits - oracle.cost_bits), opts.tol, tag + " F=" + fmt(f));
            // The reported work is the cost expressed in units of kT ln 2.
            t.add(std::abs(oracle.work_kt_ln2_bits - oracle.cost_bits), opts.tol,
                  tag + " work");
        }
    }
    return finish("erasure-line", "erasure SDP against the closed-form line", t);
}

CheckResult check_werner_cost(const VerifyOptions &) {
    Tracker t;
    GibbsContext d3_hot = make_context(std::log(2.0), make_hamiltonian({0.0, 1.0, 2.0}),
                                       make_hamiltonian({0.0, 1.0, 2.0}));
    struct Case {
        CloningSpec spec;
        GibbsContext ctx;
        const char *tag;
    };
    const Case cases[] = {
        {{1, 2, 2}, flat_ctx(2), "1->2 flat"},   {{1, 2, 2}, ratio_qubit(2.0), "1->2 e^b=2"},
        {{1, 3, 2}, flat_ctx(2), "1->3 flat"},   {{1, 3, 2}, ratio_qubit(2.0), "1->3 e^b=2"},
        {{2, 3, 2}, flat_ctx(2), "2->3 flat"},   {{2, 3, 2}, ratio_qubit(2.0), "2->3 e^b=2"},
        {{1, 2, 3}, flat_ctx(3), "1->2 qutrit"}, {{1, 2, 3}, d3_hot, "1->2 qutrit hot"},
    };
    for (const Case &k : cases) {
        ChoiChannel w = werner_cloner(k.spec, k.ctx);
        Task task = cloning_task(k.spec, k.ctx, CloningVariant::Quantum);
        t.add(std::abs(channel_cost(w, task).value_bits - werner_closed_cost(k.spec, k.ctx)),
              1e-9, k.tag);
    }
    return finish("werner-cost", "optimal cloner D_max against the closed form", t);
}

CheckResult check_cloning_tradeoff(const VerifyOptions &opts) {
    Tracker t;
    GibbsContext deg = flat_ctx(2);
    for (int m : {2, 3, 4}) {
        CloningSpec spec{1, m, 2};
        const std::string tag = "1->" + std::to_string(m);
        const double d_n = sym_dim(1, 2), d_m = sym_dim(m, 2);
        Task q = cloning_task(spec, deg, CloningVariant::Quantum);

        auto curves = scan_curve(q, 9, {CurveVariant::Quantum}, opts.jobs);
        for (const CurvePoint &p : curves[0].points)
            t.add(std::abs(p.cost_bits - (spec.delta() + std::log2(p.fidelity))), 1e-5,
                  tag + " F=" + fmt(p.fidelity));
        t.add(std::abs(f_extremes(q).f_max - d_n / d_m), opts.tol, tag + " f_max");

        Task c = cloning_task(spec, deg, CloningVariant::Classical);
        t.add(std::abs(cost_of_accuracy(c, 1.0).value_bits - spec.delta()), opts.tol,
              tag + " classical F=1");
    }
    return finish("cloning-tradeoff", "cloning curves on the dN + log2 F line", t);
}

CheckResult check_eb_gap(const VerifyOptions &opts) {
    Tracker t;
    GibbsContext deg = flat_ctx(2);
    Task q = cloning_task({1, 2, 2}, deg, CloningVariant::Quantum);
    auto curves = scan_curve(q, 7, {CurveVariant::Quantum, CurveVariant::Eb}, opts.jobs);
    const TradeoffCurve &qc = curves[0], &ec = curves[1];

    t.add(std::abs(ec.kappa - (1.0 + std::log2(4.0 / 3.0))), 1e-9, "kappa* closed form");
    t.add(std::abs(ec.f_max - 0.5), opts.tol, "EB f_max");

    const double gap = std::log2(4.0 / 3.0);
    for (const CurvePoint &p : qc.points)
        t.add(std::abs((ec.kappa + std::log2(p.fidelity)) - p.cost_bits - gap), opts.tol,
              "gap at F=" + fmt(p.fidelity));
    // The windows touch at F = 1/2 up to solver precision.
    int common = 0;
    for (const CurvePoint &pq : qc.points)
        for (const CurvePoint &pe : ec.points)
            if (std::abs(pq.fidelity - pe.fidelity) <= 1e-6) {
                ++common;
                t.add(std::abs(pe.cost_bits - pq.cost_bits - gap), opts.tol,
                      "common F=" + fmt(pq.fidelity));
            }
    if (common == 0) t.fail("no common fidelity between the curves");
    return finish("eb-gap", "entanglement-binding gap log2(4/3) on cloning", t);
}

CheckResult check_benchmark_grid(const VerifyOptions &opts) {
    Tracker t;
    for (double ratio : {1.0, 2.0, 4.0}) {
        GibbsContext ctx = ratio_qubit(ratio);
        const double root_g = 1.0 / std::sqrt(ratio);
        const double f_star = (1.0 + root_g) / (2.0 + root_g);
        const std::string tag = "e^b=" + std::to_string((int)ratio);
        for (int i = 0; i < 9; ++i) {
            const double f = f_star + (2.0 / 3.0 - f_star) * i / 8.0;
            PhaseCovariantReport rep = phase_covariant(qubit_benchmark_channel(f), ctx);
            const double closed =
                std::log2(f + ratio * (2.0 * f - 1.0) * (2.0 * f - 1.0) / (1.0 - f));
            t.add(std::abs(rep.cost_bits - closed), opts.tol, tag + " cost F=" + fmt(f));
            t.add(std::abs(qubit_benchmark(f, ctx).cost_bits - std::max(closed, 0.0)),
                  opts.tol, tag + " oracle F=" + fmt(f));

            double worst_f = inf();
            CVector e0(2), e1(2);
            e0 << 1.0, 0.0;
            e1 << 0.0, 1.0;
            worst_f = std::min(worst_f, rep.fidelity(e0));
            worst_f = std::min(worst_f, rep.fidelity(e1));
            for (int k = 0; k < 8; ++k) {
                const double th = 2.0 * std::numbers::pi * k / 8.0;
                CVector psi(2);
                psi << 1.0 / std::sqrt(2.0),
                    std::exp(std::complex<double>(0, th)) / std::sqrt(2.0);
                worst_f = std::min(worst_f, rep.fidelity(psi));
            }
            t.add(std::abs(worst_f - f), 1e-8, tag + " fidelity F=" + fmt(f));

            CMatrix pt = partial_transpose(rep.choi.choi, rep.choi.dims, Sys::B);
            Eigen::SelfAdjointEigenSolver<CMatrix> es(pt);
            t.add(std::max(0.0, -es.eigenvalues().minCoeff()), 1e-9, tag + " PPT F=" + fmt(f));
        }
    }
    return finish("benchmark-grid", "phase-covariant family achieves the benchmark formula",
                  t);
}

CheckResult check_achievability(const VerifyOptions &opts) {
    Tracker t;

    GibbsContext hot = ratio_qubit(2.0);
    Task er = erasure_task(2, hot);
    CMatrix e0 = CMatrix::Zero(2, 2);
    e0(0, 0) = 1.0;
    ChoiChannel er_m0 = constant_channel(e0, 2);
    const double er_kappa = std::log2(1.5);
    for (double f : {0.70, 0.78, 0.86, 0.93, 0.99}) {
        ChoiChannel mf = build_mf_channel(er, er_m0, 1.0, f);
        const double acc = task_accuracy(er, mf);
        t.add(std::abs(acc - f), opts.tol, "erasure acc F=" + fmt(f));
        t.add(std::abs(channel_cost(mf, er).value_bits - (er_kappa + std::log2(acc))),
              opts.tol, "erasure cost F=" + fmt(f));
    }

    GibbsContext deg = flat_ctx(2);
    Task cl = cloning_task({1, 2, 2}, deg, CloningVariant::Quantum);
    ChoiChannel cl_m0 = werner_cloner({1, 2, 2}, deg);
    for (double f : {0.52, 0.56, 0.60, 0.63, 0.66}) {
        ChoiChannel mf = build_mf_channel(cl, cl_m0, 2.0 / 3.0, f);
        const double acc = task_accuracy(cl, mf);
        t.add(std::abs(acc - f), opts.tol, "cloning acc F=" + fmt(f));
        t.add(std::abs(channel_cost(mf, cl).value_bits - (1.0 + std::log2(acc))), opts.tol,
              "cloning cost F=" + fmt(f));
    }
    return finish("achievability", "interpolated channels sit on kappa + log2 F", t);
}

// Random vertex of {P column-stochastic, P gamma = gamma} via an LP with a
// random objective; the solution is projected back onto the affine
// constraints so the channel fixes gamma to near machine precision.
bool random_gibbs_channel(std::mt19937 &rng, const GibbsContext &ctx, Eigen::MatrixXd *out) {
    const int d = ctx.d_A();
    const int n = d * d;  // p(i|j) at index i + d j
    Eigen::VectorXd gamma(d);
    for (int i = 0; i < d; ++i) gamma(i) = ctx.g_A(i);

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * d - 1, n);
    Eigen::VectorXd b(2 * d - 1);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) A(j, i + d * j) = 1.0;
        b(j) = 1.0;
    }
    for (int i = 0; i + 1 < d; ++i) {  // the last fixed-point row is implied
        for (int j = 0; j < d; ++j) A(d + i, i + d * j) = gamma(j);
        b(d + i) = gamma(i);
    }

    std::normal_distribution<double> g;
    Eigen::VectorXd c(n);
    for (int k = 0; k < n; ++k) c(k) = g(rng);

    ConeDims dims;
    dims.l = n;
    ConeOptions lp;
    lp.feas_tol = 1e-9;
    lp.abs_tol = 1e-9;
    lp.rel_tol = 1e-9;
    ConeResult res = solve_cone_lp(c, -Eigen::MatrixXd::Identity(n, n),
                                   Eigen::VectorXd::Zero(n), dims, A, b, lp);
    if (res.status != ConeStatus::Optimal) return false;

    Eigen::VectorXd p = res.x;
    for (int pass = 0; pass < 2; ++pass) {
        p -= A.transpose() * (A * A.transpose()).ldlt().solve(A * p - b);
        p = p.cwiseMax(0.0);
    }
    Eigen::MatrixXd P(d, d);
    for (int j = 0; j < d; ++j) {
        const double col = p.segment(d * j, d).sum();
        if (col <= 0.5) return false;
        P.col(j) = p.segment(d * j, d) / col;
    }
    if (((P * gamma) - gamma).cwiseAbs().maxCoeff() > 1e-9) return false;
    *out = P;
    return true;
}

ChoiChannel stochastic_choi(const Eigen::MatrixXd &P) {
    const int d = static_cast<int>(P.rows());
    CMatrix m = CMatrix::Zero(d * d, d * d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) m(j * d + i, j * d + i) = P(i, j);
    return make_channel(m, {d, d});
}

CheckResult check_cost_floor(const VerifyOptions &opts) {
    Tracker t;
    std::mt19937 rng(333);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int inst = 0; inst < 10; ++inst) {
        const int d = 2 + inst % 5;
        Hamiltonian h = random_h(rng, d, 0.8);
        GibbsContext ctx = make_context(1.0, h, h);
        const std::string tag = "instance " + std::to_string(inst);

        std::vector<int> mask(d, 0);
        int picked = 0;
        while (picked == 0)
            for (int i = 0; i < d; ++i) picked += mask[i] = coin(rng);
        CMatrix pi = CMatrix::Zero(d, d);
        for (int i = 0; i < d; ++i)
            if (mask[i]) pi(i, i) = 1.0;
        const double c_min = c_min_of(pi, ctx);

        // 100 Gibbs-fixing channels; the thermalizer attains the floor.
        double best = channel_cost(constant_channel(ctx.gamma_B(), d), pi, ctx).value_bits;
        double below = 0.0;
        int have = 1, attempts = 0;
        while (have < 100 && attempts < 400) {
            ++attempts;
            Eigen::MatrixXd P;
            if (!random_gibbs_channel(rng, ctx, &P)) continue;
            ++have;
            const double c = channel_cost(stochastic_choi(P), pi, ctx).value_bits;
            best = std::min(best, c);
            below = std::max(below, c_min - c);
        }
        if (have < 100) t.fail(tag + " channel sampling");
        t.add(below, 1e-7, tag + " floor");
        t.add(std::max(0.0, best - c_min), opts.tol, tag + " attained");

        // F_min = 2^{c_min - kappa} round-trips through accuracy_of_cost at
        // the identity-on-the-support task.
        Task idt;
        idt.label = "identity-floor;d=" + std::to_string(d);
        idt.dims = {d, d};
        idt.ctx = ctx;
        for (int x = 0; x < d; ++x)
            if (mask[x]) {
                CMatrix om = CMatrix::Zero(d * d, d * d);
                om(x * d + x, x * d + x) = 1.0;
                idt.perf_ops.push_back(om);
            }
        idt.input_projector = pi;
        idt.gamma_A = ctx.gamma_A();
        idt.gamma_B = ctx.gamma_B();
        idt.diagonal = true;
        const double kappa = reverse_entropy(idt).value_bits;
        const double f_min = std::pow(2.0, c_min - kappa);
        const double back = accuracy_of_cost(idt, c_min).value_bits;
        t.add(std::abs(back - f_min), 1e-5, tag + " F_min round trip");
    }
    return finish("cost-floor", "c_min floor and the F_min round trip", t);
}

CheckResult check_counterexample(const VerifyOptions &opts) {
    Tracker t;
    GibbsContext hot = ratio_qubit(2.0);
    const CMatrix gamma = hot.gamma_B();

    CMatrix choi = CMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CMatrix unit = CMatrix::Zero(2, 2);
            unit(j, i) = 1.0;
            CMatrix block = (CMatrix::Identity(2, 2) * (i == j ? 1.0 : 0.0) + unit) / 3.0;
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) choi(i * 2 + a, j * 2 + b) = block(a, b);
        }
    ChoiChannel m = make_channel(choi, {2, 2});

    std::vector<CMatrix> inputs;
    for (int k = 0; k < 8; ++k) {
        const double th = 2.0 * std::numbers::pi * k / 8.0;
        CVector psi(2);
        psi << 1.0 / std::sqrt(2.0), std::exp(std::complex<double>(0, th)) / std::sqrt(2.0);
        inputs.push_back(psi * psi.adjoint());
    }
    for (const CMatrix &rho : inputs)
        t.add(std::abs(relative_entropy(apply_channel(m, rho), gamma) - 1.0 / 6.0), 1e-9,
              "equator D");

    t.add(std::abs(1.0 / 6.0 + std::log2(2.0 / 3.0) - (-0.418)), 2e-3, "printed -0.418");

    CMatrix e0 = CMatrix::Zero(2, 2), e1 = CMatrix::Zero(2, 2);
    e0(0, 0) = 1.0;
    e1(1, 1) = 1.0;
    inputs.push_back(e0);
    inputs.push_back(e1);
    for (const CMatrix &rho : inputs)
        for (double alpha : {0.3, 0.5, 0.8, 2.0})
            for (DivergenceFamily fam :
                 {DivergenceFamily::Renyi, DivergenceFamily::Sandwiched}) {
                DivergenceSpec spec;
                spec.family = fam;
                spec.alpha = alpha;
                const double diff = divergence(apply_channel(m, rho), gamma, spec) -
                                    divergence(rho, gamma, spec);
                t.add(std::max(0.0, diff), 1e-9, "alpha=" + fmt(alpha));
            }

    Task tr = transposition_task(2, hot);
    const double cost = cost_of_accuracy(tr, 2.0 / 3.0).value_bits;
    t.add(std::max(0.0, std::log2(4.0 / 3.0) - cost), opts.tol, "cost positivity");
    return finish("counterexample", "monotone divergences with a positive one-shot cost", t);
}

CheckResult check_properties(const VerifyOptions &) {
    const int n = 200;
    const PropResult rs[] = {prop_time_reversal(n, 11), prop_dmax_transpose(n, 22),
                             prop_weak_duality(n, 33), prop_divergence_order(n, 44),
                             prop_monotone_curves(n, 55)};
    const char *names[] = {"time reversal", "D_max transpose", "weak duality",
                           "divergence order", "monotone curves"};
    CheckResult r;
    r.id = "properties";
    r.name = "randomized property suites";
    r.tol = 0.0;
    int failures = 0;
    std::ostringstream os;
    for (int i = 0; i < 5; ++i) {
        failures += rs[i].failures;
        if (i) os << ", ";
        os << names[i] << " " << (rs[i].cases - rs[i].failures) << "/" << rs[i].cases;
        if (rs[i].failures && !rs[i].detail.empty()) os << " [" << rs[i].detail << "]";
    }
    r.worst = failures;
    r.pass = failures == 0;
    r.detail = os.str();
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Property suites
// ---------------------------------------------------------------------------

PropResult prop_time_reversal(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dim(2, 3);
    std::uniform_real_distribution<double> beta(0.3, 2.0);
    PropResult out;
    out.cases = cases;
    for (int k = 0; k < cases; ++k) {
        const int da = dim(rng), db = dim(rng);
        GibbsContext ctx =
            make_context(beta(rng), random_h(rng, da, 1.0), random_h(rng, db, 1.0));
        CMatrix omega = random_psd(rng, da * db);
        omega /= std::max(1.0, omega.cwiseAbs().maxCoeff());
        CMatrix back = time_reverse_perf_op(time_reverse_perf_op(omega, ctx), ctx.swapped());
        const double dev = (back - omega).cwiseAbs().maxCoeff();
        if (dev > 1e-9) {
            ++out.failures;
            if (out.detail.empty()) out.detail = "case " + std::to_string(k);
        }
        out.worst = std::max(out.worst, dev);
    }
    return out;
}

PropResult prop_dmax_transpose(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dim(2, 4);
    PropResult out;
    out.cases = cases;
    for (int k = 0; k < cases; ++k) {
        const int d = dim(rng);
        CMatrix rho = random_state(rng, d);
        std::uniform_real_distribution<double> u(0.1, 1.0);
        CMatrix sigma = CMatrix::Zero(d, d);
        double z = 0.0;
        for (int i = 0; i < d; ++i) {
            sigma(i, i) = u(rng);
            z += sigma(i, i).real();
        }
        sigma /= z;
        const double dev = std::abs(d_max(rho, sigma) - d_max(rho.transpose().eval(), sigma));
        if (dev > 1e-9) {
            ++out.failures;
            if (out.detail.empty()) out.detail = "case " + std::to_string(k);
        }
        out.worst = std::max(out.worst, dev);
    }
    return out;
}

PropResult prop_weak_duality(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> da_dist(2, 4), db_dist(2, 3);
    std::uniform_real_distribution<double> beta(0.5, 1.5), frac(0.2, 0.95);
    PropResult out;
    out.cases = cases;
    for (int k = 0; k < cases; ++k) {
        Task t;
        if (k % 10 == 9) {
            // Every tenth case exercises the PSD-cone path.
            t = transposition_task(
                2, make_context(beta(rng), random_h(rng, 2, 1.0), random_h(rng, 2, 1.0)));
        } else {
            const int da = da_dist(rng), db = db_dist(rng);
            std::vector<int> f(da);
            std::uniform_int_distribution<int> y(0, db - 1);
            for (int &v : f) v = y(rng);
            t = classical_task(
                f, make_context(beta(rng), random_h(rng, da, 1.0), random_h(rng, db, 1.0)));
        }
        bool bad = false;
        try {
            const double kappa = reverse_entropy(t).value_bits;
            FExtremes fx = f_extremes(t);
            const double f = fx.f_min + frac(rng) * (fx.f_max - fx.f_min);
            CostReport r1 = cost_of_accuracy(t, f);
            CostReport r2 = cost_of_accuracy(t, f);
            const double slack = r1.value_bits - (kappa + std::log2(f));
            if (slack < -1e-7) bad = true;                   // universal lower bound
            if (r1.value_bits != r2.value_bits) bad = true;  // determinism
            if (r1.solver_gap && *r1.solver_gap > 1e-6) bad = true;
            out.worst = std::max(out.worst, std::max(0.0, -slack));
        } catch (const Error &) {
            bad = true;
        }
        if (bad) {
            ++out.failures;
            if (out.detail.empty()) out.detail = "case " + std::to_string(k);
        }
    }
    return out;
}

PropResult prop_divergence_order(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dim(2, 3);
    PropResult out;
    out.cases = cases;
    const double alphas[] = {0.3, 0.5, 0.8, 1.0, 1.5, 2.0};
    for (int k = 0; k < cases; ++k) {
        const int d = dim(rng);
        CMatrix rho = random_state(rng, d), sigma = random_state(rng, d);
        auto dv = [&](DivergenceFamily fam, double a) -> double {
            DivergenceSpec s;
            s.family = fam;
            s.alpha = a;
            return divergence(rho, sigma, s);
        };
        double dev = 0.0;
        double prev_p = -inf(), prev_s = -inf();
        for (double a : alphas) {
            const double p = dv(DivergenceFamily::Renyi, a);
            const double sw = dv(DivergenceFamily::Sandwiched, a);
            dev = std::max(dev, prev_p - p);   // Petz nondecreasing in alpha
            dev = std::max(dev, prev_s - sw);  // sandwiched nondecreasing in alpha
            dev = std::max(dev, sw - p);       // sandwiched <= Petz
            prev_p = p;
            prev_s = sw;
        }
        const double lo = dv(DivergenceFamily::DMin, 0);
        const double mid = dv(DivergenceFamily::VonNeumann, 1);
        const double hi = dv(DivergenceFamily::DMax, 0);
        dev = std::max(dev, lo - mid);
        dev = std::max(dev, mid - hi);
        if (dev > 1e-9) {
            ++out.failures;
            if (out.detail.empty()) out.detail = "case " + std::to_string(k);
        }
        out.worst = std::max(out.worst, dev);
    }
    return out;
}

PropResult prop_monotone_curves(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> da_dist(2, 3);
    std::uniform_real_distribution<double> beta(0.5, 1.5);
    PropResult out;
    out.cases = cases;
    for (int k = 0; k < cases; ++k) {
        const int da = da_dist(rng);
        std::vector<int> f(da);
        std::uniform_int_distribution<int> y(0, 1);
        for (int &v : f) v = y(rng);
        Task t = classical_task(
            f, make_context(beta(rng), random_h(rng, da, 1.0), random_h(rng, 2, 1.0)));
        bool bad = false;
        double dev = 0.0;
        try {
            auto curves = scan_curve(t, 6, {CurveVariant::Quantum});
            const auto &pts = curves[0].points;
            for (size_t i = 0; i < pts.size(); ++i) {
                dev = std::max(dev, pts[i].lower_bound_bits - pts[i].cost_bits);
                if (i) {
                    if (pts[i].fidelity < pts[i - 1].fidelity) bad = true;
                    dev = std::max(dev, pts[i - 1].cost_bits - pts[i].cost_bits);
                }
                if (pts[i].status == CostStatus::Infeasible) bad = true;
            }
        } catch (const Error &) {
            bad = true;
        }
        if (dev > 1e-6 || bad) {
            ++out.failures;
            if (out.detail.empty()) out.detail = "case " + std::to_string(k);
        }
        out.worst = std::max(out.worst, dev);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

std::vector<std::string> check_ids() {
    return {"transposition-kappa", "erasure-line",   "werner-cost",   "cloning-tradeoff",
            "eb-gap",              "benchmark-grid", "achievability", "cost-floor",
            "counterexample",      "properties"};
}

CheckResult run_check(const std::string &id, const VerifyOptions &opts) {
    if (id == "transposition-kappa") return check_transposition_kappa(opts);
    if (id == "erasure-line") return check_erasure_line(opts);
    if (id == "werner-cost") return check_werner_cost(opts);
    if (id == "cloning-tradeoff") return check_cloning_tradeoff(opts);
    if (id == "eb-gap") return check_eb_gap(opts);
    if (id == "benchmark-grid") return check_benchmark_grid(opts);
    if (id == "achievability") return check_achievability(opts);
    if (id == "cost-floor") return check_cost_floor(opts);
    if (id == "counterexample") return check_counterexample(opts);
    if (id == "properties") return check_properties(opts);
    throw OutOfRange("run_check: unknown check id '" + id + "'");
}

std::vector<CheckResult> run_all(const VerifyOptions &opts) {
    std::vector<CheckResult> out;
    for (const std::string &id : check_ids()) out.push_back(run_check(id, opts));
    return out;
}

nlohmann::json report_to_json(const std::vector<CheckResult> &results) {
    nlohmann::json checks = nlohmann::json::array();
    bool all = true;
    for (const CheckResult &r : results) {
        checks.push_back({{"id", r.id},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"worst", r.worst},
                          {"tol", r.tol},
                          {"detail", r.detail}});
        all = all && r.pass;
    }
    return {{"checks", checks}, {"all_pass", all}};
}

}  // namespace neq::verify
