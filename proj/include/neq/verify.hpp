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

#ifndef NEQ_VERIFY_HPP
#define NEQ_VERIFY_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace neq::verify {

// One cross-validation check: closed forms against SDPs, constructions
// against their certified values, or a randomized property suite. Checks
// ship with pinned tolerances; `tol` below only substitutes for the generic
// 1e-6 ones, never for the tighter pinned values.
struct CheckResult {
    std::string id;
    std::string name;
    bool pass = false;
    double worst = 0.0;  // largest deviation seen (failure count for suites)
    double tol = 0.0;
    std::string detail;
};

struct VerifyOptions {
    double tol = 1e-6;
    int jobs = 1;
};

// Stable check identifiers, in report order.
std::vector<std::string> check_ids();

CheckResult run_check(const std::string &id, const VerifyOptions &opts = {});
std::vector<CheckResult> run_all(const VerifyOptions &opts = {});

nlohmann::json report_to_json(const std::vector<CheckResult> &results);

// Randomized property suites. Each runs `cases` instances from the seed and
// reports the failure count plus the worst deviation; the verify check and
// the unit tests share these.
struct PropResult {
    int cases = 0;
    int failures = 0;
    double worst = 0.0;
    std::string detail;  // first failing instance, empty when clean
};

PropResult prop_time_reversal(int cases, unsigned seed);
PropResult prop_dmax_transpose(int cases, unsigned seed);
PropResult prop_weak_duality(int cases, unsigned seed);
PropResult prop_divergence_order(int cases, unsigned seed);
PropResult prop_monotone_curves(int cases, unsigned seed);

}  // namespace neq::verify

#endif
