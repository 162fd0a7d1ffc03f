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

#include "doctest.h"

using namespace neq;

namespace {

CMatrix bell_state() {
    CMatrix phi = CMatrix::Zero(4, 1);
    phi(0, 0) = 1.0 / std::sqrt(2.0);
    phi(3, 0) = 1.0 / std::sqrt(2.0);
    return phi * phi.adjoint();
}

CMatrix swap_op() {
    CMatrix s = CMatrix::Zero(4, 4);
    s(0, 0) = s(3, 3) = 1.0;
    s(1, 2) = s(2, 1) = 1.0;
    return s;
}

CMatrix dephase_partial(const CMatrix &rho) {
    CMatrix z = CMatrix::Zero(2, 2);
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    return (2.0 / 3.0) * rho + (1.0 / 3.0) * z * rho * z;
}

}  // namespace

TEST_CASE("h_min_conditional pinned values") {
    std::mt19937_64 rng(41);
    CMatrix sigma = random_density(3, rng);
    CMatrix omega = kron(identity(2) / 2.0, sigma);
    CHECK(h_min_conditional(omega, {2, 3}) == doctest::Approx(1.0).epsilon(1e-6));

    CHECK(h_min_conditional(bell_state(), {2, 2}) == doctest::Approx(-1.0).epsilon(1e-6));

    CMatrix psym = 0.5 * (identity(4) + swap_op());
    CHECK(h_min_conditional(psym / 3.0, {2, 2}) ==
          doctest::Approx(std::log2(1.5)).epsilon(1e-6));

    // scaling: h_min(c*omega) = h_min(omega) - log2 c
    double base = h_min_conditional(omega, {2, 3});
    CHECK(h_min_conditional(4.0 * omega, {2, 3}) == doctest::Approx(base - 2.0).epsilon(1e-6));
}

TEST_CASE("divergence zero at equal full-rank states") {
    std::mt19937_64 rng(43);
    CMatrix rho = random_density(3, rng);
    for (DivergenceFamily fam :
         {DivergenceFamily::Renyi, DivergenceFamily::Sandwiched, DivergenceFamily::VonNeumann,
          DivergenceFamily::DMax, DivergenceFamily::DMin}) {
        DivergenceSpec spec{fam, 0.5, PureRefConvention::Limit};
        CHECK(std::abs(divergence(rho, rho, spec)) < 1e-8);
    }
    DivergenceSpec two{DivergenceFamily::Sandwiched, 2.0, PureRefConvention::Limit};
    CHECK(std::abs(divergence(rho, rho, two)) < 1e-8);
}

TEST_CASE("sandwiched pure-reference limit branch") {
    std::mt19937_64 rng(47);
    CMatrix psi = haar_ket(2, rng);
    CMatrix pure = psi * psi.adjoint();
    CMatrix rho = identity(2) / 2.0;
    for (double alpha : {0.3, 0.5, 0.8}) {
        DivergenceSpec spec{DivergenceFamily::Sandwiched, alpha, PureRefConvention::Limit};
        CHECK(divergence(rho, pure, spec) ==
              doctest::Approx(alpha / (alpha - 1.0) * (-1.0)).epsilon(1e-9));
        DivergenceSpec strict{DivergenceFamily::Sandwiched, alpha, PureRefConvention::Infinity};
        CHECK(divergence(rho, pure, strict) == inf());
    }
    DivergenceSpec above{DivergenceFamily::Sandwiched, 2.0, PureRefConvention::Limit};
    CHECK(divergence(rho, pure, above) == inf());
    CHECK(std::abs(divergence(pure, pure, above)) < 1e-9);
}

TEST_CASE("relative entropy pinned counterexample value") {
    CMatrix e = CMatrix::Zero(2, 2);
    e << 0.5, 0.5, 0.5, 0.5;
    CMatrix out = (identity(2) + e.transpose()) / 3.0;
    CMatrix gamma = CMatrix::Zero(2, 2);
    gamma(0, 0) = 2.0 / 3.0;
    gamma(1, 1) = 1.0 / 3.0;
    double s = relative_entropy(out, gamma);
    CHECK(s == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    CHECK(s + std::log2(2.0 / 3.0) == doctest::Approx(-0.41830).epsilon(1e-4));

    // support mismatch
    CHECK(relative_entropy(identity(2) / 2.0, basis_proj(0, 2)) == inf());
}

TEST_CASE("alpha = 1 routes to von Neumann, commuting case matches hand formula") {
    std::mt19937_64 rng(53);
    CMatrix rho = random_density(2, rng);
    CMatrix sigma = random_density(2, rng);
    DivergenceSpec one{DivergenceFamily::Renyi, 1.0, PureRefConvention::Limit};
    CHECK(divergence(rho, sigma, one) ==
          doctest::Approx(relative_entropy(rho, sigma)).epsilon(1e-12));

    CMatrix p = CMatrix::Zero(2, 2), q = CMatrix::Zero(2, 2);
    p(0, 0) = 0.7;
    p(1, 1) = 0.3;
    q(0, 0) = 0.5;
    q(1, 1) = 0.5;
    double expect = std::log2((0.49 + 0.09) / 0.5);
    DivergenceSpec petz2{DivergenceFamily::Renyi, 2.0, PureRefConvention::Limit};
    DivergenceSpec sand2{DivergenceFamily::Sandwiched, 2.0, PureRefConvention::Limit};
    CHECK(divergence(p, q, petz2) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(divergence(p, q, sand2) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("sandwiched monotone in alpha and data processing") {
    std::mt19937_64 rng(59);
    for (int rep = 0; rep < 10; ++rep) {
        CMatrix rho = random_density(2, rng);
        CMatrix sigma = random_density(2, rng);
        double prev = -inf();
        for (double alpha : {0.3, 0.5, 0.8, 1.2, 2.0}) {
            DivergenceSpec spec{DivergenceFamily::Sandwiched, alpha,
                                PureRefConvention::Limit};
            double d = divergence(rho, sigma, spec);
            CHECK(d >= prev - 1e-8);
            prev = d;
        }
        for (double alpha : {0.3, 0.5, 0.8, 2.0}) {
            DivergenceSpec spec{DivergenceFamily::Sandwiched, alpha,
                                PureRefConvention::Limit};
            double before = divergence(rho, sigma, spec);
            double after = divergence(dephase_partial(rho), dephase_partial(sigma), spec);
            CHECK(after <= before + 1e-8);
        }
    }
}

TEST_CASE("divergence hierarchy D_min <= S <= D_max") {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 10; ++rep) {
        CMatrix rho = random_density(3, rng);
        CMatrix sigma = random_density(3, rng);
        double lo = d_min(rho, sigma);
        double mid = relative_entropy(rho, sigma);
        double hi = d_max(rho, sigma);
        CHECK(lo <= mid + 1e-8);
        CHECK(mid <= hi + 1e-8);
    }
}

TEST_CASE("conditional H_0 pinned values and additivity") {
    CMatrix pi_s = basis_proj(0, 3) + basis_proj(1, 3);
    CMatrix pi_q = basis_proj(0, 2);
    CHECK(conditional_renyi(kron(pi_s, pi_q), {3, 2}, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-12));

    CHECK(conditional_renyi(bell_state(), {2, 2}, 0.0) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(conditional_renyi(identity(4), {2, 2}, 0.0) == doctest::Approx(1.0).epsilon(1e-12));

    // additivity across a product of two marked subspaces
    CMatrix pi1 = basis_proj(0, 2) + basis_proj(1, 2);
    CMatrix pi2 = basis_proj(0, 3) + basis_proj(1, 3);
    double joint = conditional_renyi(kron(kron(pi1, pi2), pi_q), {6, 2}, 0.0);
    CHECK(joint == doctest::Approx(std::log2(2.0) + std::log2(2.0)).epsilon(1e-12));
}

TEST_CASE("conditional H_{1/2} values") {
    CHECK(conditional_renyi(bell_state(), {2, 2}, 0.5) == doctest::Approx(-1.0).epsilon(1e-6));

    std::mt19937_64 rng(67);
    CMatrix rho_q = random_density(2, rng);
    CHECK(conditional_renyi(kron(identity(2) / 2.0, rho_q), {2, 2}, 0.5) ==
          doctest::Approx(1.0).epsilon(1e-6));

    CMatrix psi = haar_ket(2, rng);
    CHECK(conditional_renyi(kron(psi * psi.adjoint(), rho_q), {2, 2}, 0.5) ==
          doctest::Approx(0.0).epsilon(1e-6));

    CHECK_THROWS_AS(conditional_renyi(identity(4), {2, 2}, 0.3), OutOfRange);
}

TEST_CASE("thermo_capacity_lower examples") {
    GibbsContext flat = make_context(1.0, degenerate_hamiltonian(2), degenerate_hamiltonian(2));
    std::mt19937_64 rng(71);
    CMatrix psi = haar_ket(2, rng);
    CMatrix pure = psi * psi.adjoint();
    CHECK(thermo_capacity_lower({{pure, pure}}, flat) == doctest::Approx(0.0).epsilon(1e-10));

    // erasure of pure inputs, degenerate qubit
    CMatrix zero = basis_proj(0, 2);
    CHECK(thermo_capacity_lower({{pure, zero}, {zero, zero}}, flat) ==
          doctest::Approx(0.0).epsilon(1e-10));

    // 1 -> 2 cloning of basis states, degenerate
    GibbsContext clone_ctx =
        make_context(1.0, degenerate_hamiltonian(2), degenerate_hamiltonian(4));
    std::vector<std::pair<CMatrix, CMatrix>> pairs;
    for (int x = 0; x < 2; ++x)
        pairs.push_back({basis_proj(x, 2), kron(basis_proj(x, 2), basis_proj(x, 2))});
    CHECK(thermo_capacity_lower(pairs, clone_ctx) == doctest::Approx(1.0).epsilon(1e-10));
}
