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

#include "neq/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "neq/errors.hpp"

using namespace neq;

namespace {

double mad(const CMatrix &a, const CMatrix &b) { return (a - b).cwiseAbs().maxCoeff(); }

GibbsContext flat_ctx(int d_A, int d_B) {
    return make_context(1.0, degenerate_hamiltonian(d_A), degenerate_hamiltonian(d_B));
}

GibbsContext skew_qubit_ctx() {
    // Gibbs weights (2/3, 1/3) on both sides.
    return make_context(std::log(2.0), make_hamiltonian({0.0, 1.0}),
                        make_hamiltonian({0.0, 1.0}));
}

double min_accuracy(const Task &t, const CMatrix &choi) {
    double best = inf();
    for (const CMatrix &om : t.perf_ops)
        best = std::min(best, (choi * om).trace().real());
    return best;
}

// Symmetrizer on (C^d)^(x)k built from explicit permutation operators.
CMatrix full_symmetrizer(int k, int d) {
    int n = 1;
    for (int i = 0; i < k; ++i) n *= d;
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    CMatrix acc = CMatrix::Zero(n, n);
    int count = 0;
    do {
        CMatrix u = CMatrix::Zero(n, n);
        for (int row = 0; row < n; ++row) {
            std::vector<int> digits(k);
            int rem = row;
            for (int i = k - 1; i >= 0; --i) {
                digits[i] = rem % d;
                rem /= d;
            }
            int col = 0;
            for (int i = 0; i < k; ++i) col = col * d + digits[perm[i]];
            u(row, col) = 1.0;
        }
        acc += u;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc / count;
}

// |k, m> embedded in the full product space: equal superposition of the
// distinct arrangements of the occupation vector m.
CVector embedded_sym_basis(const std::vector<int> &m, int k, int d) {
    int n = 1;
    for (int i = 0; i < k; ++i) n *= d;
    CVector v = CVector::Zero(n);
    int hits = 0;
    for (int row = 0; row < n; ++row) {
        std::vector<int> occ(d, 0);
        int rem = row;
        for (int i = 0; i < k; ++i) {
            occ[rem % d]++;
            rem /= d;
        }
        if (occ == m) {
            v(row) = 1.0;
            ++hits;
        }
    }
    return v / std::sqrt(static_cast<double>(hits));
}

}  // namespace

TEST_CASE("symmetric dimensions match exhaustive enumeration") {
    for (int d = 1; d <= 3; ++d)
        for (int k = 0; k <= 5; ++k) {
            std::set<std::vector<int>> seen;
            int n = 1;
            for (int i = 0; i < k; ++i) n *= d;
            for (int row = 0; row < n; ++row) {
                std::vector<int> occ(d, 0);
                int rem = row;
                for (int i = 0; i < k; ++i) {
                    occ[rem % d]++;
                    rem /= d;
                }
                seen.insert(occ);
            }
            CHECK(sym_dim(k, d) == static_cast<int>(seen.size()));
            auto occ = occupations(k, d);
            CHECK(static_cast<int>(occ.size()) == sym_dim(k, d));
            CHECK(std::set<std::vector<int>>(occ.begin(), occ.end()) == seen);
        }
}

TEST_CASE("sym_product_state: normalization and split consistency") {
    std::mt19937_64 rng(11);
    for (int d = 2; d <= 3; ++d)
        for (int k = 1; k <= 4; ++k) {
            CVector psi = haar_ket(d, rng);
            CHECK(sym_product_state(psi, k).norm() == doctest::Approx(1.0).epsilon(1e-12));
        }

    // S embeds Sym^{n1+n2} into Sym^{n1} (x) Sym^{n2} and acts trivially on
    // product states.
    for (auto [n1, n2, d] : {std::array<int, 3>{1, 1, 2}, {1, 2, 2}, {2, 2, 2}, {1, 2, 3}}) {
        CMatrix s = sym_split_isometry(n1, n2, d);
        CHECK(mad(dagger(s) * s, identity(sym_dim(n1 + n2, d))) < 1e-12);
        CVector psi = haar_ket(d, rng);
        CVector lhs = s * sym_product_state(psi, n1 + n2);
        CVector rhs = kron(CMatrix(sym_product_state(psi, n1)),
                           CMatrix(sym_product_state(psi, n2)));
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("sym_energies and projected Gibbs against full tensor powers") {
    Hamiltonian h = make_hamiltonian({0.0, 1.0});
    auto e2 = sym_energies(h, 2);
    CHECK(e2 == std::vector<double>{0.0, 1.0, 2.0});

    for (auto [k, d] : {std::array<int, 2>{2, 2}, {3, 2}, {2, 3}}) {
        Hamiltonian h1 = d == 2 ? make_hamiltonian({0.0, 1.0})
                                : make_hamiltonian({0.0, 0.4, 1.2});
        const double beta = 0.7;
        CMatrix g_sym = sym_gibbs_projected(h1, beta, k);
        CMatrix g1 = gibbs_state(h1, beta).state;
        CMatrix g_full = g1;
        for (int i = 1; i < k; ++i) g_full = kron(g_full, g1);
        CMatrix p_full = full_symmetrizer(k, d);
        CHECK(g_sym.trace().real() ==
              doctest::Approx((p_full * g_full).trace().real()).epsilon(1e-12));
        auto occ = occupations(k, d);
        for (int i = 0; i < static_cast<int>(occ.size()); ++i) {
            CVector v = embedded_sym_basis(occ[i], k, d);
            CHECK(g_sym(i, i).real() ==
                  doctest::Approx((v.adjoint() * g_full * v).value().real()).epsilon(1e-12));
        }
    }
}

TEST_CASE("classical tasks") {
    Task ident = classical_task({0, 1}, flat_ctx(2, 2));
    REQUIRE(ident.perf_ops.size() == 2);
    CHECK(mad(ident.perf_ops[0], kron(basis_proj(0, 2), basis_proj(0, 2))) == 0.0);
    CHECK(mad(ident.perf_ops[1], kron(basis_proj(1, 2), basis_proj(1, 2))) == 0.0);
    CHECK(ident.diagonal);

    // The ideal channel M_f has accuracy exactly 1.
    std::vector<int> and_gate{0, 0, 0, 1};
    Task andt = classical_task(and_gate, flat_ctx(4, 2));
    CMatrix mf = CMatrix::Zero(8, 8);
    for (int x = 0; x < 4; ++x) mf += kron(basis_proj(x, 4), basis_proj(and_gate[x], 2));
    CHECK(min_accuracy(andt, mf) == doctest::Approx(1.0).epsilon(1e-15));

    // Output distribution of f under the uniform input Gibbs weights.
    std::vector<double> p_f(2, 0.0);
    for (int x = 0; x < 4; ++x) p_f[and_gate[x]] += andt.ctx.g_A(x);
    CHECK(p_f[0] == doctest::Approx(0.75));
    CHECK(p_f[1] == doctest::Approx(0.25));

    CHECK_THROWS_AS(classical_task({0, 2}, flat_ctx(2, 2)), InvalidFunction);
    CHECK_THROWS_AS(classical_task({0}, flat_ctx(2, 2)), InvalidDimensions);

    // Constant f(x)=0 is the classical-erasure family.
    Task constant = classical_task({0, 0}, flat_ctx(2, 2));
    Task erase = erasure_task(2, flat_ctx(2, 2));
    for (int x = 0; x < 2; ++x) CHECK(mad(constant.perf_ops[x], erase.perf_ops[x]) == 0.0);
}

TEST_CASE("erasure task") {
    Task flat = erasure_task(2, flat_ctx(2, 2));
    REQUIRE(flat.covariant_average.has_value());
    CHECK(mad(*flat.covariant_average, kron(identity(2) / 2.0, basis_proj(0, 2))) < 1e-15);

    Task skew = erasure_task(2, skew_qubit_ctx());
    CHECK(!skew.covariant_average.has_value());
    CHECK(skew.diagonal);
    // Worst-case accuracy of the thermalizing channel is <0|Gamma|0>.
    CMatrix therm = kron(identity(2), skew.ctx.gamma_B());
    CHECK(min_accuracy(skew, therm) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    CHECK_THROWS_AS(erasure_task(1, flat_ctx(1, 2)), OutOfRange);
}

TEST_CASE("storage task") {
    Task t = storage_task(2, flat_ctx(2, 2), 4);
    CHECK(t.perf_ops.size() == 6);
    CHECK(!t.diagonal);
    CHECK(!t.bounds_only);
    CHECK(t.eb_exact);
    REQUIRE(t.covariant_average.has_value());
    CHECK(t.covariant_average->trace().real() == doctest::Approx(1.0).epsilon(1e-14));

    // Identity channel stores perfectly; full thermalization scores 1/2.
    CMatrix ident_choi = CMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ident_choi += kron(ket_bra(i, j, 2), ket_bra(i, j, 2));
    CHECK(min_accuracy(t, ident_choi) == doctest::Approx(1.0).epsilon(1e-12));
    CMatrix therm = kron(identity(2), identity(2) / 2.0);
    CHECK(min_accuracy(t, therm) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK((therm * *t.covariant_average).trace().real() == doctest::Approx(0.5).epsilon(1e-12));

    CHECK(storage_task(3, flat_ctx(3, 3), 4).bounds_only);
    CHECK(!storage_task(2, skew_qubit_ctx(), 4).covariant_average.has_value());
    CHECK_THROWS_AS(storage_task(2, flat_ctx(2, 2), 2), OutOfRange);
}

TEST_CASE("transposition task") {
    const int d = 2;
    Task t = transposition_task(d, flat_ctx(d, d), 8);
    REQUIRE(t.covariant_average.has_value());

    // Haar average is the normalized symmetric projector.
    CMatrix swap_op = CMatrix::Zero(4, 4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) swap_op(b * 2 + a, a * 2 + b) = 1.0;
    CMatrix p_plus = (identity(4) + swap_op) / 2.0;
    CHECK(mad(*t.covariant_average, p_plus / 3.0) < 1e-14);

    // M(rho) = (I + rho^T)/(d+1) is covariant: equal fidelity on every sample.
    CMatrix opt = 2.0 * p_plus / (d + 1.0);
    for (const CMatrix &om : t.perf_ops)
        CHECK((opt * om).trace().real() == doctest::Approx(2.0 / (d + 1.0)).epsilon(1e-12));
    CHECK((opt * *t.covariant_average).trace().real() ==
          doctest::Approx(2.0 / (d + 1.0)).epsilon(1e-12));

    // Transposing again recovers storage.
    Task back = derived_task(t, DerivedKind::Transposed);
    Task stor = storage_task(d, flat_ctx(d, d), 8);
    REQUIRE(back.perf_ops.size() == stor.perf_ops.size());
    for (size_t i = 0; i < back.perf_ops.size(); ++i)
        CHECK(mad(back.perf_ops[i], stor.perf_ops[i]) < 1e-14);
}

TEST_CASE("cloning task") {
    GibbsContext one = flat_ctx(2, 2);
    Task q = cloning_task({1, 2, 2}, one, CloningVariant::Quantum);
    CHECK(q.dims.d_A == 2);
    CHECK(q.dims.d_B == 3);
    REQUIRE(q.covariant_average.has_value());
    CHECK(q.eb_exact);
    CHECK(mad(q.gamma_A, identity(2) / 2.0) < 1e-15);
    CHECK(mad(q.gamma_B, identity(3) / 4.0) < 1e-15);

    // The average equals the Haar integral of (psi^T)(x)(psi psi) sampled.
    std::mt19937_64 rng(5);
    CMatrix acc = CMatrix::Zero(6, 6);
    const int trials = 40000;
    for (int i = 0; i < trials; ++i) {
        CVector psi = haar_ket(2, rng);
        CMatrix va = CMatrix(sym_product_state(psi, 1)).conjugate();
        CMatrix vb = sym_product_state(psi, 2);
        acc += kron(va * dagger(va), vb * dagger(vb));
    }
    CHECK(mad(acc / trials, *q.covariant_average) < 0.02);

    Task c = cloning_task({1, 2, 2}, one, CloningVariant::Classical);
    REQUIRE(c.perf_ops.size() == 2);
    CHECK(c.diagonal);
    CHECK(mad(c.perf_ops[0], kron(basis_proj(0, 2), basis_proj(0, 3))) == 0.0);
    CHECK(mad(c.perf_ops[1], kron(basis_proj(1, 2), basis_proj(2, 3))) == 0.0);

    GibbsContext skew = skew_qubit_ctx();
    Task qs = cloning_task({1, 2, 2}, skew, CloningVariant::Quantum);
    CHECK(!qs.covariant_average.has_value());
    CHECK(qs.bounds_only);
    CHECK(qs.gamma_B(0, 0).real() == doctest::Approx(4.0 / 9.0));
    CHECK(qs.gamma_B(1, 1).real() == doctest::Approx(2.0 / 9.0));
    CHECK(qs.gamma_B(2, 2).real() == doctest::Approx(1.0 / 9.0));

    CHECK_THROWS_AS(cloning_task({2, 6, 3}, flat_ctx(3, 3), CloningVariant::Quantum), TooLarge);
    CHECK_THROWS_AS(cloning_task({2, 1, 2}, one, CloningVariant::Quantum), OutOfRange);
}

TEST_CASE("time-reversed tasks are involutive") {
    std::vector<Task> tasks = {
        classical_task({0, 0, 0, 1}, flat_ctx(4, 2)),
        erasure_task(2, skew_qubit_ctx()),
        storage_task(2, skew_qubit_ctx(), 4),
        cloning_task({1, 2, 2}, skew_qubit_ctx(), CloningVariant::Quantum),
    };
    for (const Task &t : tasks) {
        Task rev = derived_task(t, DerivedKind::TimeReversed);
        CHECK(rev.dims.d_A == t.dims.d_B);
        CHECK(mad(rev.gamma_A, t.gamma_B) == 0.0);
        Task back = derived_task(rev, DerivedKind::TimeReversed);
        REQUIRE(back.perf_ops.size() == t.perf_ops.size());
        for (size_t i = 0; i < t.perf_ops.size(); ++i)
            CHECK(mad(back.perf_ops[i], t.perf_ops[i]) < 1e-10);
    }

    // Transposition is involutive and fixes diagonal tasks.
    Task andt = classical_task({0, 0, 0, 1}, flat_ctx(4, 2));
    Task tr = derived_task(andt, DerivedKind::Transposed);
    for (size_t i = 0; i < andt.perf_ops.size(); ++i)
        CHECK(mad(tr.perf_ops[i], andt.perf_ops[i]) == 0.0);
}

TEST_CASE("task json round-trip") {
    for (const Task &t : {cloning_task({1, 2, 2}, flat_ctx(2, 2), CloningVariant::Quantum),
                          classical_task({1, 0}, skew_qubit_ctx())}) {
        Task back = task_from_json(task_to_json(t));
        CHECK(back.label == t.label);
        CHECK(back.dims.d_A == t.dims.d_A);
        CHECK(back.dims.d_B == t.dims.d_B);
        CHECK(back.diagonal == t.diagonal);
        CHECK(back.bounds_only == t.bounds_only);
        CHECK(back.eb_exact == t.eb_exact);
        CHECK(back.covariant_average.has_value() == t.covariant_average.has_value());
        REQUIRE(back.perf_ops.size() == t.perf_ops.size());
        for (size_t i = 0; i < t.perf_ops.size(); ++i)
            CHECK(mad(back.perf_ops[i], t.perf_ops[i]) < 1e-15);
        CHECK(mad(back.gamma_A, t.gamma_A) < 1e-15);
        CHECK(mad(back.gamma_B, t.gamma_B) < 1e-15);
    }
}

TEST_CASE("task URIs") {
    CHECK(task_from_uri("builtin:cloning;n=1;m=2;d=2", flat_ctx(2, 2)).label ==
          "cloning;n=1;m=2;d=2");
    CHECK(task_from_uri("builtin:erasure;d=2", flat_ctx(2, 2)).label == "erasure;d=2");
    CHECK(task_from_uri("builtin:transpose;d=2;samples=6", flat_ctx(2, 2)).perf_ops.size() == 8);
    CHECK(task_from_uri("builtin:storage;d=2;samples=8", flat_ctx(2, 2)).perf_ops.size() == 10);
    CHECK(task_from_uri("builtin:classical;table=0,0", flat_ctx(2, 2)).diagonal);

    CHECK_THROWS_AS(task_from_uri("cloning;n=1", flat_ctx(2, 2)), ParseError);
    CHECK_THROWS_AS(task_from_uri("builtin:frobnicate;d=2", flat_ctx(2, 2)), ParseError);
    CHECK_THROWS_AS(task_from_uri("builtin:classical;table=a,b", flat_ctx(2, 2)), ParseError);
    CHECK_THROWS_AS(task_from_uri("builtin:cloning;n", flat_ctx(2, 2)), ParseError);
}
