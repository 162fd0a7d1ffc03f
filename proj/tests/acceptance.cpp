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

// Cross-validation gate: one line per check, nonzero exit on any failure.

#include <cstdio>

#include "neq/verify.hpp"

int main() {
    const auto results = neq::verify::run_all();
    int n = 0, passed = 0;
    for (const auto &r : results) {
        std::printf("criterion %2d [%s] %-20s %s (%s)\n", ++n, r.pass ? "PASS" : "FAIL",
                    r.id.c_str(), r.name.c_str(), r.detail.c_str());
        passed += r.pass ? 1 : 0;
    }
    std::printf("%d/%d checks passed\n", passed, n);
    return passed == n ? 0 : 1;
}
