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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "doctest.h"
#include "neq/entropy.hpp"
#include "neq/errors.hpp"
#include "neq/tasks.hpp"

using namespace neq;

namespace {

GibbsContext flat_ctx(int d) {
    return make_context(1.0, degenerate_hamiltonian(d), degenerate_hamiltonian(d));
}

// Gibbs weights (2/3, 1/3): beta * dE = ln 2.
GibbsContext skew_qubit_ctx() {
    return make_context(std::log(2.0), make_hamiltonian({0.0, 1.0}),
                        make_hamiltonian({0.0, 1.0}));
}

double werner_closed_cost(const CloningSpec &s, const GibbsContext &ctx) {
    const double dn = sym_dim(s.n, s.d);
    const double dm = sym_dim(s.m, s.d);
    return s.delta() * (std::log2(ctx.z_A()) + ctx.beta * ctx.h_A.e_max() * kLog2E) +
           std::log2(dn / dm);
}

CVector random_qudit(std::mt19937 &rng, int d) {
    std::normal_distribution<double> g;
    CVector v(d);
    for (int i = 0; i < d; ++i) v(i) = std::complex<double>(g(rng), g(rng));
    return v / v.norm();
}

}  // namespace

TEST_CASE("erasure: SDP equals the closed-form line on both contexts") {
    for (const GibbsContext &ctx : {flat_ctx(2), skew_qubit_ctx()}) {
        Task t = erasure_task(2, ctx);
        const double f_min = ctx.g_B(0);
        for (int i = 0; i <= 10; ++i) {
            const double f = f_min + (1.0 - f_min) * i / 10.0;
            ErasureReport oracle = erasure_oracle(ctx, f);
            CostReport sdp = cost_of_accuracy(t, f);
            CHECK(std::abs(sdp.value_bits - oracle.cost_bits) <= 1e-6);
            CHECK(oracle.work_kt_ln2_bits == oracle.cost_bits);
        }
        CHECK(erasure_oracle(ctx, f_min).cost_bits == doctest::Approx(0.0));
        CHECK_THROWS_AS(erasure_oracle(ctx, f_min - 1e-3), OutOfRange);
    }
    // Pinned values on the skewed context: kappa = log2(3/2).
    GibbsContext hot = skew_qubit_ctx();
    Task t = erasure_task(2, hot);
    CHECK(std::abs(reverse_entropy(t).value_bits - std::log2(1.5)) <= 1e-7);
    CHECK(std::abs(cost_of_accuracy(t, 0.70).value_bits - 0.070389328) <= 1e-6);
    CHECK(std::abs(cost_of_accuracy(t, 0.85).value_bits - 0.350497247) <= 1e-6);
    CHECK(std::abs(cost_of_accuracy(t, 1.00).value_bits - 0.584962501) <= 1e-6);
}

TEST_CASE("erasure: clamp and witness behaviour") {
    GibbsContext hot = skew_qubit_ctx();
    Task t = erasure_task(2, hot);
    CostReport low = cost_of_accuracy(t, 0.5);  // below f_min = 2/3
    CHECK(low.status == CostStatus::Clamped);
    CHECK(low.value_bits == doctest::Approx(0.0));
    CostReport mid = cost_of_accuracy(t, 0.85);
    REQUIRE(mid.witness.has_value());
    CHECK(task_accuracy(t, *mid.witness) >= 0.85 - 1e-6);
    CHECK(channel_cost(*mid.witness, t).value_bits <= mid.value_bits + 1e-6);
}

TEST_CASE("cloning 1->2 qubits, degenerate: kappa, window and line") {
    GibbsContext deg = flat_ctx(2);
    Task t = cloning_task({1, 2, 2}, deg, CloningVariant::Quantum);
    CHECK(std::abs(reverse_entropy(t).value_bits - 1.0) <= 1e-6);
    CHECK(c_min_of(t) == doctest::Approx(0.0));

    FExtremes fx = f_extremes(t);
    CHECK(std::abs(fx.f_max - 2.0 / 3.0) <= 1e-6);
    CHECK(std::abs(fx.f_min - 0.5) <= 1e-6);

    for (int i = 0; i <= 6; ++i) {
        const double f = 0.5 + (2.0 / 3.0 - 0.5) * i / 6.0;
        CostReport r = cost_of_accuracy(t, f);
        CHECK(std::abs(r.value_bits - (1.0 + std::log2(f))) <= 1e-5);
    }
    CHECK(cost_of_accuracy(t, 0.70).status == CostStatus::Infeasible);
    CHECK(cost_of_accuracy(t, 0.70).value_bits == inf());
    CHECK(accuracy_of_cost(t, -0.1).status == CostStatus::Infeasible);
    CHECK(std::abs(accuracy_of_cost(t, 0.0).value_bits - 0.5) <= 1e-6);
    const double c23 = 1.0 + std::log2(2.0 / 3.0);
    CHECK(std::abs(accuracy_of_cost(t, c23).value_bits - 2.0 / 3.0) <= 1e-5);
}

TEST_CASE("cloning 1->2 classical variant: leak LP reaches F = 1 at cost dN") {
    GibbsContext deg = flat_ctx(2);
    Task t = cloning_task({1, 2, 2}, deg, CloningVariant::Classical);
    CHECK(t.diagonal);
    CHECK(std::abs(reverse_entropy(t).value_bits - 1.0) <= 1e-6);
    CHECK(std::abs(accuracy_of_cost(t, 0.0).value_bits - 0.5) <= 1e-6);
    for (int i = 0; i <= 5; ++i) {
        const double f = 0.5 + 0.5 * i / 5.0;
        CHECK(std::abs(cost_of_accuracy(t, f).value_bits - (1.0 + std::log2(f))) <= 1e-6);
    }
    CHECK(std::abs(cost_of_accuracy(t, 1.0).value_bits - 1.0) <= 1e-6);
}

TEST_CASE("quantum and classical reverse entropies of cloning coincide") {
    // kappa^C = kappa^Q = dN (log2 Z + beta E_max log2 e) on qubits.
    for (const GibbsContext &ctx : {flat_ctx(2), skew_qubit_ctx()}) {
        for (CloningSpec s : {CloningSpec{1, 2, 2}, CloningSpec{1, 3, 2}}) {
            const double closed = werner_closed_cost(s, ctx) -
                                  std::log2((double)sym_dim(s.n, s.d) / sym_dim(s.m, s.d));
            Task q = cloning_task(s, ctx, CloningVariant::Quantum);
            Task c = cloning_task(s, ctx, CloningVariant::Classical);
            CHECK(std::abs(reverse_entropy(q).value_bits - closed) <= 1e-6);
            CHECK(std::abs(reverse_entropy(c).value_bits - closed) <= 1e-6);
        }
    }
}

TEST_CASE("werner cloner: direct D_max cost matches the closed form") {
    GibbsContext d3_deg = flat_ctx(3);
    GibbsContext d3_hot =
        make_context(std::log(2.0), make_hamiltonian({0.0, 1.0, 2.0}),
                     make_hamiltonian({0.0, 1.0, 2.0}));
    struct Case {
        CloningSpec spec;
        GibbsContext ctx;
    };
    const Case cases[] = {
        {{1, 2, 2}, flat_ctx(2)},  {{1, 2, 2}, skew_qubit_ctx()},
        {{1, 3, 2}, flat_ctx(2)},  {{1, 3, 2}, skew_qubit_ctx()},
        {{2, 3, 2}, flat_ctx(2)},  {{2, 3, 2}, skew_qubit_ctx()},
        {{1, 2, 3}, d3_deg},       {{1, 2, 3}, d3_hot},
    };
    for (const Case &k : cases) {
        ChoiChannel w = werner_cloner(k.spec, k.ctx);
        Task t = cloning_task(k.spec, k.ctx, CloningVariant::Quantum);
        CHECK(std::abs(channel_cost(w, t).value_bits - werner_closed_cost(k.spec, k.ctx)) <=
              1e-9);
        const double f_max = (double)sym_dim(k.spec.n, k.spec.d) / sym_dim(k.spec.m, k.spec.d);
        CHECK(std::abs(task_accuracy(t, w) - f_max) <= 1e-9);
    }
}

TEST_CASE("werner cloner: single-copy fidelity is input independent") {
    std::mt19937 rng(7);
    GibbsContext deg = flat_ctx(2);
    ChoiChannel w = werner_cloner({1, 2, 2}, deg);
    for (int trial = 0; trial < 20; ++trial) {
        CVector psi = random_qudit(rng, 2);
        CVector in = sym_product_state(psi, 1);
        CVector out = sym_product_state(psi, 2);
        CMatrix rho = apply_channel(w, in * in.adjoint());
        const double f = (out.adjoint() * rho * out)(0, 0).real();
        CHECK(std::abs(f - 2.0 / 3.0) <= 1e-9);
    }
}

TEST_CASE("state estimation cloner: EB machine at the EB ceiling") {
    GibbsContext deg = flat_ctx(2);
    Task t = cloning_task({1, 2, 2}, deg, CloningVariant::Quantum);
    ChoiChannel se = state_estimation_cloner({1, 2, 2});
    CHECK(std::abs(task_accuracy(t, se) - 0.5) <= 1e-9);

    // PPT Choi: partial transpose stays PSD.
    CMatrix pt = partial_transpose(se.choi, se.dims, Sys::B);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(pt);
    CHECK(es.eigenvalues().minCoeff() >= -1e-9);

    // Composing with output transposition leaves D_max unchanged.
    ChoiChannel se_t = make_channel(pt, se.dims);
    const double c0 = channel_cost(se, t).value_bits;
    CHECK(std::abs(c0 - channel_cost(se_t, t).value_bits) <= 1e-9);
    CHECK(std::abs(c0 - std::log2(4.0 / 3.0)) <= 1e-9);
}

TEST_CASE("eb bound: degenerate 1->2 kappa* is exact") {
    GibbsContext deg = flat_ctx(2);
    const double kap_star = 1.0 + std::log2(4.0 / 3.0);
    CHECK(std::abs(transpose_cloning_kappa_bound({1, 2, 2}, deg) - kap_star) <= 1e-9);
    CHECK(std::abs(transpose_cloning_kappa_bound({1, 3, 2}, deg) - (2.0 + std::log2(1.25))) <=
          1e-9);

    Task t = cloning_task({1, 2, 2}, deg, CloningVariant::Quantum);
    CostReport eb = eb_bound(t, 0.5);
    CHECK(eb.method == CostMethod::Sdp);
    CHECK(std::abs(eb.value_bits - (kap_star - 1.0)) <= 1e-9);
}

TEST_CASE("eb bound: qubit storage on the skewed context") {
    GibbsContext hot = skew_qubit_ctx();
    Task t = storage_task(2, hot);
    CHECK(std::abs(reverse_entropy(t).value_bits) <= 1e-6);  // identity is free
    const double kap_star = reverse_entropy(derived_task(t, DerivedKind::Transposed)).value_bits;
    CHECK(kap_star >= std::log2(9.0 / 7.0) - 1e-6);  // Haar-prior H_min lower bound
    CHECK(kap_star <= 0.665);
    CHECK(std::abs(kap_star - 0.530515) <= 1e-4);
    CostReport eb = eb_bound(t, 2.0 / 3.0);
    CHECK(std::abs(eb.value_bits - (kap_star + std::log2(2.0 / 3.0))) <= 1e-9);
    CHECK(std::abs(eb.value_bits - (-0.054447784)) <= 1e-4);
}

TEST_CASE("reverse entropy of transposition: log2((d+1)/2) when degenerate") {
    for (int d : {2, 3}) {
        Task t = transposition_task(d, flat_ctx(d));
        CHECK(std::abs(reverse_entropy(t).value_bits - std::log2((d + 1) / 2.0)) <= 1e-6);
    }
}

TEST_CASE("transposition on the skewed context: cost at F = 2/3") {
    GibbsContext hot = skew_qubit_ctx();
    Task t = transposition_task(2, hot);
    CostReport r = cost_of_accuracy(t, 2.0 / 3.0);
    CHECK(r.method == CostMethod::Sdp);
    CHECK(std::abs(r.value_bits - std::log2(4.0 / 3.0)) <= 1e-6);
    CHECK(std::abs(f_extremes(t).f_max - 2.0 / 3.0) <= 1e-6);
}

TEST_CASE("second laws can hold while the one-shot cost stays positive") {
    // M(rho) = (I + rho^T)/3 against Gamma = diag(2/3, 1/3).
    GibbsContext hot = skew_qubit_ctx();
    const CMatrix gamma = hot.gamma_B();
    CMatrix choi = CMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CMatrix unit = CMatrix::Zero(2, 2);
            unit(j, i) = 1.0;  // |j><i| = (|i><j|)^T
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
    // Every equatorial input lands exactly 1/6 bit above Gamma.
    for (const CMatrix &rho : inputs)
        CHECK(std::abs(relative_entropy(apply_channel(m, rho), gamma) - 1.0 / 6.0) <= 1e-9);
    // The ground state is mapped onto Gamma itself.
    CMatrix e0 = CMatrix::Zero(2, 2), e1 = CMatrix::Zero(2, 2);
    e0(0, 0) = 1.0;
    e1(1, 1) = 1.0;
    CHECK(relative_entropy(apply_channel(m, e0), gamma) <= 1e-12);
    inputs.push_back(e0);
    inputs.push_back(e1);

    for (const CMatrix &rho : inputs) {
        for (double alpha : {0.3, 0.5, 0.8, 2.0}) {
            for (DivergenceFamily fam : {DivergenceFamily::Renyi, DivergenceFamily::Sandwiched}) {
                DivergenceSpec spec;
                spec.family = fam;
                spec.alpha = alpha;
                const double diff =
                    divergence(apply_channel(m, rho), gamma, spec) - divergence(rho, gamma, spec);
                CHECK(diff <= 1e-9);
            }
        }
    }
    CHECK(std::abs(1.0 / 6.0 + std::log2(2.0 / 3.0) - (-0.418295834)) <= 1e-8);

    // Yet implementing transposition at F = 2/3 costs log2(4/3) > 0.
    Task t = transposition_task(2, hot);
    CHECK(cost_of_accuracy(t, 2.0 / 3.0).value_bits >= std::log2(4.0 / 3.0) - 1e-6);
}

TEST_CASE("phase covariant channels: dephasing is free") {
    GibbsContext hot = skew_qubit_ctx();
    PhaseCovariantChannel pc;
    pc.p = Eigen::MatrixXd::Identity(2, 2);
    pc.c = CMatrix::Zero(2, 2);
    PhaseCovariantReport rep = phase_covariant(pc, hot);
    CHECK(rep.cost_bits == doctest::Approx(0.0));
    // The Choi is the diagonal-preserving pinch, not the identity channel.
    CMatrix expect = CMatrix::Zero(4, 4);
    expect(0, 0) = expect(3, 3) = 1.0;
    CHECK((rep.choi.choi - expect).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("phase covariant validation") {
    PhaseCovariantChannel pc;
    pc.p = Eigen::MatrixXd::Identity(2, 2);
    pc.c = CMatrix::Zero(2, 2);
    pc.c(1, 0) = 0.5;  // |c_10|^2 > p_10 p_01 = 0
    CHECK_THROWS_AS(phase_covariant(pc, skew_qubit_ctx()), InvalidChannel);
}

TEST_CASE("qubit benchmark channel at F = 2/3, e^{b dE} = 2") {
    GibbsContext hot = skew_qubit_ctx();
    PhaseCovariantReport rep = phase_covariant(qubit_benchmark_channel(2.0 / 3.0), hot);
    CHECK(std::abs(rep.cost_bits - std::log2(4.0 / 3.0)) <= 1e-9);
    CVector basis0(2), basis1(2), equator(2);
    basis0 << 1.0, 0.0;
    basis1 << 0.0, 1.0;
    equator << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    for (const CVector &psi : {basis0, basis1, equator})
        CHECK(std::abs(rep.fidelity(psi) - 2.0 / 3.0) <= 1e-9);
}

TEST_CASE("qubit benchmark closed form: pinned grid") {
    auto ctx_for = [](double ratio) -> GibbsContext {
        return make_context(std::log(ratio), make_hamiltonian({0.0, 1.0}),
                            make_hamiltonian({0.0, 1.0}));
    };
    BenchmarkReport flat = qubit_benchmark(0.65, flat_ctx(2));
    CHECK(flat.status == CostStatus::Clamped);  // 0.65 < f_min = f_max = 2/3
    CHECK(flat.cost_bits == doctest::Approx(0.0));
    CHECK(std::abs(flat.f_min - 2.0 / 3.0) <= 1e-12);
    CHECK(std::abs(flat.f_max - 2.0 / 3.0) <= 1e-12);

    BenchmarkReport two = qubit_benchmark(0.65, ctx_for(2.0));
    CHECK(std::abs(two.cost_bits - 0.219445137) <= 1e-8);
    CHECK(std::abs(two.f_min - 0.6) <= 1e-12);

    BenchmarkReport four = qubit_benchmark(0.65, ctx_for(4.0));
    CHECK(std::abs(four.cost_bits - 0.747233930) <= 1e-8);
    CHECK(std::abs(four.f_min - 5.0 / 9.0) <= 1e-12);

    BenchmarkReport qutrit = qubit_benchmark(0.55, flat_ctx(3));
    CHECK(qutrit.method == CostMethod::BoundOnly);
}

TEST_CASE("benchmark channel family saturates the closed form") {
    GibbsContext hot = skew_qubit_ctx();
    BenchmarkReport bench = qubit_benchmark(0.64, hot);
    PhaseCovariantReport rep = phase_covariant(qubit_benchmark_channel(0.64), hot);
    CHECK(std::abs(rep.cost_bits - bench.cost_bits) <= 1e-9);
    Task t = transposition_task(2, hot);
    CHECK(cost_of_accuracy(t, 0.64).value_bits <= bench.cost_bits + 1e-6);
}

TEST_CASE("build_mf_channel: erasure interpolation sits on the line") {
    GibbsContext hot = skew_qubit_ctx();
    Task t = erasure_task(2, hot);
    CMatrix e0 = CMatrix::Zero(2, 2);
    e0(0, 0) = 1.0;
    ChoiChannel m0 = constant_channel(e0, 2);
    const double kappa = std::log2(1.5);
    for (double f : {0.70, 0.80, 0.90, 0.95, 1.0}) {
        ChoiChannel mf = build_mf_channel(t, m0, 1.0, f);
        CHECK(std::abs(channel_cost(mf, t).value_bits - (kappa + std::log2(f))) <= 1e-6);
        CHECK(task_accuracy(t, mf) >= f - 1e-6);
    }
    // At F = f_min the construction collapses to the free thermalizer.
    ChoiChannel free = build_mf_channel(t, m0, 1.0, 2.0 / 3.0);
    CHECK(std::abs(channel_cost(free, t).value_bits) <= 1e-6);
    CHECK_THROWS_AS(build_mf_channel(t, m0, 1.0, 0.5), OutOfRange);
    CHECK_THROWS_AS(build_mf_channel(t, m0, 1.0, 1.5), OutOfRange);
}

TEST_CASE("build_mf_channel: cloning interpolation") {
    GibbsContext deg = flat_ctx(2);
    Task t = cloning_task({1, 2, 2}, deg, CloningVariant::Quantum);
    ChoiChannel m0 = werner_cloner({1, 2, 2}, deg);
    for (double f : {0.52, 0.55, 0.60, 0.64, 2.0 / 3.0}) {
        ChoiChannel mf = build_mf_channel(t, m0, 2.0 / 3.0, f);
        CHECK(std::abs(channel_cost(mf, t).value_bits - (1.0 + std::log2(f))) <= 1e-6);
        CHECK(task_accuracy(t, mf) >= f - 1e-6);
    }
    CHECK(std::abs(channel_cost(build_mf_channel(t, m0, 2.0 / 3.0, 0.6), t).value_bits -
                   0.263034406) <= 1e-6);
}

TEST_CASE("channel_cost: pinned direct evaluations") {
    GibbsContext hot = skew_qubit_ctx();
    const CMatrix id2 = CMatrix::Identity(2, 2);
    CHECK(std::abs(channel_cost(identity_channel(2), id2, hot).value_bits) <= 1e-9);
    CHECK(std::abs(channel_cost(constant_channel(hot.gamma_B(), 2), id2, hot).value_bits) <=
          1e-9);
    CMatrix e0 = CMatrix::Zero(2, 2);
    e0(0, 0) = 1.0;
    CHECK(std::abs(channel_cost(constant_channel(e0, 2), id2, hot).value_bits -
                   std::log2(1.5)) <= 1e-9);
    // Restricting the input support can only lower the cost.
    CHECK(std::abs(channel_cost(constant_channel(e0, 2), e0, hot).value_bits -
                   (std::log2(1.5) + std::log2(2.0 / 3.0))) <= 1e-9);
}

TEST_CASE("kappa_classical agrees with the reverse LP") {
    GibbsContext hot = skew_qubit_ctx();
    CHECK(kappa_classical({0, 1}, hot) == doctest::Approx(0.0));
    CHECK(std::abs(kappa_classical({0, 0}, hot) - std::log2(1.5)) <= 1e-12);
    for (const std::vector<int> &f : {std::vector<int>{0, 1}, {0, 0}, {1, 0}}) {
        Task t = classical_task(f, hot);
        CHECK(std::abs(reverse_entropy(t).value_bits - kappa_classical(f, hot)) <= 1e-6);
    }
    GibbsContext wide =
        make_context(1.0, make_hamiltonian({0.0, 0.5, 1.0}), make_hamiltonian({0.0, 1.0}));
    const std::vector<int> merge{0, 0, 1};
    Task t = classical_task(merge, wide);
    CHECK(std::abs(reverse_entropy(t).value_bits - kappa_classical(merge, wide)) <= 1e-6);
}

TEST_CASE("extractable work: pinned states on the skewed context") {
    GibbsContext hot = skew_qubit_ctx();
    CHECK(std::abs(extractable_work(make_state(hot.gamma_A()), hot)) <= 1e-12);
    CMatrix e1 = CMatrix::Zero(2, 2);
    e1(1, 1) = 1.0;
    CHECK(std::abs(extractable_work(make_state(e1), hot) - std::log2(3.0)) <= 1e-12);
    CMatrix plus = CMatrix::Constant(2, 2, 0.5);
    // The pinch kills the coherence; the dephased state has full support.
    CHECK(std::abs(extractable_work(make_state(plus), hot)) <= 1e-12);
}

TEST_CASE("memory erasure bound: maximally entangled memory pays negative work") {
    std::vector<double> flat4(4, 0.0);
    MemoryErasureReport full = memory_erasure_bound(CMatrix::Identity(4, 4), flat4, 1.0, {2, 2});
    CHECK(std::abs(full.general - 1.0) <= 1e-9);
    REQUIRE(full.degenerate_h0.has_value());
    CHECK(std::abs(*full.degenerate_h0 - 1.0) <= 1e-12);

    CMatrix phi = CMatrix::Zero(4, 4);
    phi(0, 0) = phi(0, 3) = phi(3, 0) = phi(3, 3) = 0.5;
    MemoryErasureReport ent = memory_erasure_bound(phi, flat4, 1.0, {2, 2});
    CHECK(std::abs(ent.general - (-1.0)) <= 1e-9);
    REQUIRE(ent.degenerate_h0.has_value());
    CHECK(std::abs(*ent.degenerate_h0 - (-1.0)) <= 1e-12);
}

TEST_CASE("round trips between cost and accuracy") {
    GibbsContext hot = skew_qubit_ctx();
    for (Task t : {erasure_task(2, hot), cloning_task({1, 2, 2}, flat_ctx(2),
                                                      CloningVariant::Quantum)}) {
        FExtremes fx = f_extremes(t);
        const double f = 0.5 * (fx.f_min + fx.f_max);
        CostReport c = cost_of_accuracy(t, f);
        CostReport back = accuracy_of_cost(t, c.value_bits);
        CHECK(std::abs(back.value_bits - f) <= 1e-5);
    }
}

TEST_CASE("scan_curve: cloning figure data") {
    GibbsContext deg = flat_ctx(2);
    Task t = cloning_task({1, 2, 2}, deg, CloningVariant::Quantum);
    auto curves = scan_curve(t, 7, {CurveVariant::Quantum, CurveVariant::Classical,
                                    CurveVariant::Eb});
    REQUIRE(curves.size() == 3);

    const TradeoffCurve &q = curves[0];
    CHECK(q.variant == CurveVariant::Quantum);
    CHECK(std::abs(q.kappa - 1.0) <= 1e-6);
    CHECK(std::abs(q.f_max - 2.0 / 3.0) <= 1e-6);
    CHECK(std::abs(q.f_min - 0.5) <= 1e-6);
    REQUIRE(q.points.size() == 7);
    for (size_t i = 0; i < q.points.size(); ++i) {
        const CurvePoint &p = q.points[i];
        CHECK(std::abs(p.cost_bits - (1.0 + std::log2(p.fidelity))) <= 1e-5);
        CHECK(p.cost_bits >= p.lower_bound_bits - 1e-5);
        if (i > 0) CHECK(p.fidelity >= q.points[i - 1].fidelity);
    }

    const TradeoffCurve &c = curves[1];
    CHECK(c.variant == CurveVariant::Classical);
    CHECK(std::abs(c.points.back().fidelity - 1.0) <= 1e-12);
    CHECK(std::abs(c.points.back().cost_bits - 1.0) <= 1e-6);

    const TradeoffCurve &e = curves[2];
    CHECK(e.variant == CurveVariant::Eb);
    CHECK(std::abs(e.kappa - (1.0 + std::log2(4.0 / 3.0))) <= 1e-9);
    CHECK(std::abs(e.f_max - 0.5) <= 1e-6);
    CHECK(std::abs(e.kappa - q.kappa - std::log2(4.0 / 3.0)) <= 1e-6);
}

TEST_CASE("scan_curve: job count does not change the result") {
    GibbsContext hot = skew_qubit_ctx();
    Task t = erasure_task(2, hot);
    auto one = scan_curve(t, 9, {CurveVariant::Quantum}, 1);
    auto four = scan_curve(t, 9, {CurveVariant::Quantum}, 4);
    REQUIRE(one[0].points.size() == four[0].points.size());
    for (size_t i = 0; i < one[0].points.size(); ++i) {
        CHECK(one[0].points[i].fidelity == four[0].points[i].fidelity);
        CHECK(one[0].points[i].cost_bits == four[0].points[i].cost_bits);
    }
    CHECK_THROWS_AS(scan_curve(t, 1, {CurveVariant::Quantum}), OutOfRange);
    CHECK_THROWS_AS(scan_curve(t, 5, {}), OutOfRange);
}
