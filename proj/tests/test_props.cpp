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

#include "doctest.h"
#include "neq/verify.hpp"

using namespace neq::verify;

TEST_CASE("property: time reversal is an involution") {
    PropResult r = prop_time_reversal(200, 11);
    CAPTURE(r.detail);
    CHECK(r.failures == 0);
    CHECK(r.worst <= 1e-9);
}

TEST_CASE("property: D_max is transpose invariant") {
    PropResult r = prop_dmax_transpose(200, 22);
    CAPTURE(r.detail);
    CHECK(r.failures == 0);
    CHECK(r.worst <= 1e-9);
}

TEST_CASE("property: cost programs respect the universal bound, deterministically") {
    PropResult r = prop_weak_duality(200, 33);
    CAPTURE(r.detail);
    CHECK(r.failures == 0);
}

TEST_CASE("property: divergence families are ordered") {
    PropResult r = prop_divergence_order(200, 44);
    CAPTURE(r.detail);
    CHECK(r.failures == 0);
    CHECK(r.worst <= 1e-9);
}

TEST_CASE("property: tradeoff curves are monotone") {
    PropResult r = prop_monotone_curves(200, 55);
    CAPTURE(r.detail);
    CHECK(r.failures == 0);
}
