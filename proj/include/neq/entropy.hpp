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

#ifndef NEQ_ENTROPY_HPP
#define NEQ_ENTROPY_HPP

#include <utility>
#include <vector>

#include "neq/quantum.hpp"

namespace neq {

// One-shot and Renyi entropic quantities. All returns are in bits.

enum class DivergenceFamily { Renyi, Sandwiched, VonNeumann, DMax, DMin };

// Behaviour when the reference state is pure and the first argument leaks
// outside its support. Limit uses the epsilon->0 closed forms (finite for
// alpha < 1), Infinity returns the sentinel unconditionally.
enum class PureRefConvention { Limit, Infinity };

struct DivergenceSpec {
    DivergenceFamily family = DivergenceFamily::VonNeumann;
    double alpha = 1.0;  // ignored for vonNeumann/dmax/dmin; alpha = 1 routes to vonNeumann
    PureRefConvention pure_reference_convention = PureRefConvention::Limit;
};

// Conditional min-entropy H_min(A|B) of a PSD operator omega on A (x) B:
//   -log2 min{ Tr[Lambda] : I_A (x) Lambda >= omega, Lambda >= 0 }.
double h_min_conditional(const CMatrix &omega, BipartiteDims dims);

// Quantum relative entropy S(rho||sigma) = Tr[rho (log2 rho - log2 sigma)],
// +inf when supp(rho) is not contained in supp(sigma).
double relative_entropy(const CMatrix &rho, const CMatrix &sigma);

// Petz / sandwiched Renyi divergences, von Neumann relative entropy, D_max,
// D_min, selected by spec.family. Inputs PSD; support mismatches map to the
// +inf sentinel where the definition dictates.
double divergence(const CMatrix &rho, const CMatrix &sigma, const DivergenceSpec &spec);

// Conditional Renyi entropy H_alpha(S|Q) for alpha in {0, 1/2} of a PSD
// operator on S (x) Q. For alpha = 0 the support projector of the input is
// taken first and H_0 = log2 ||Tr_S Pi||. For alpha = 1/2 the variational
// definition max over sigma_Q of 2 log2 F(rho, I_S (x) sigma_Q) is solved as
// a small SDP (root fidelity).
double conditional_renyi(const CMatrix &rho_or_proj, BipartiteDims dims, double alpha);

// Lower bound on the asymptotic (iid) reverse entropy:
//   max_x [ S(rho'_x || Gamma_B) - S(rho_x || Gamma_A) ].
double thermo_capacity_lower(const std::vector<std::pair<CMatrix, CMatrix>> &task_states,
                             const GibbsContext &ctx);

}  // namespace neq

#endif
