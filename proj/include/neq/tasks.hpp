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

#ifndef NEQ_TASKS_HPP
#define NEQ_TASKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "neq/quantum.hpp"

namespace neq {

// ---------------------------------------------------------------------------
// Symmetric subspace (bosonic occupation-number) machinery
// ---------------------------------------------------------------------------

// binom(k + d - 1, d - 1), the dimension of the symmetric subspace of k
// d-level systems.
int sym_dim(int k, int d);

// Occupation vectors (n_0..n_{d-1}) with sum k, in the fixed enumeration order
// used by every symmetric-coordinate operator in this library.
std::vector<std::vector<int>> occupations(int k, int d);

// |psi^(x) k> expressed in symmetric coordinates (length sym_dim(k, d)).
CVector sym_product_state(const CVector &psi, int k);

// Isometry Sym^{n1+n2} -> Sym^{n1} (x) Sym^{n2}; columns indexed by
// occupations(n1+n2, d), rows by (occupations(n1,d) x occupations(n2,d)).
// <a,b|S|m> = delta(a+b=m) sqrt(prod_x binom(m_x, a_x) / binom(n1+n2, n1)).
CMatrix sym_split_isometry(int n1, int n2, int d);

// Level energies of k copies restricted to the symmetric subspace, in
// occupation order: E(n) = sum n_x E_x. Not sorted for d >= 3.
std::vector<double> sym_energies(const Hamiltonian &h_single, int k);

// Gamma^(x)k compressed to symmetric coordinates: diag(prod_x g(x)^{n_x}).
// Subnormalized (trace = Tr[P_k Gamma^(x)k] < 1 unless k = 1).
CMatrix sym_gibbs_projected(const Hamiltonian &h_single, double beta, int k);

// ---------------------------------------------------------------------------
// Tasks
// ---------------------------------------------------------------------------

// An information-processing task as a finite family of performance operators
// Omega_x on A (x) B. A channel's accuracy is min_x Tr[M Omega_x] over the
// family (or Tr[M Omega_bar] when covariant_average is set, in which case the
// average provably equals the worst case).
struct Task {
    std::string label;
    BipartiteDims dims{0, 0};
    GibbsContext ctx;
    std::vector<CMatrix> perf_ops;
    CMatrix input_projector;
    std::optional<CMatrix> covariant_average;

    // References used by the cost programs. Equal to the context Gibbs states
    // except for multi-copy tasks in symmetric coordinates, where they hold
    // the compressed (subnormalized) tensor-power Gibbs matrices.
    CMatrix gamma_A, gamma_B;

    // Everything (operators, projector, references) diagonal in the energy
    // basis; cost programs may use the orthant-only fast path.
    bool diagonal = false;
    // The finite family is a discretization without a proven worst-case
    // reduction; SDP results are bounds, not exact values.
    bool bounds_only = false;
    // The transposed-task reverse entropy (EB bound) is exact for this task.
    bool eb_exact = false;
};

struct CloningSpec {
    int n = 1;   // input copies
    int m = 2;   // output copies, m >= n
    int d = 2;   // single-copy dimension
    int delta() const { return m - n; }
};

enum class CloningVariant { Quantum, Classical };
enum class DerivedKind { TimeReversed, Transposed };

// Omega_x = |x><x| (x) |f(x)><f(x)|; f maps {0..d_A-1} into {0..d_B-1}.
Task classical_task(const std::vector<int> &f, const GibbsContext &ctx);

// rho -> |0><0| for all inputs on d levels; basis family plus the averaged
// operator (I/d) (x) |0><0| (exactness flagged only for degenerate contexts).
Task erasure_task(int d, const GibbsContext &ctx);

// rho_x -> rho_x over basis plus equatorial samples. Exact worst-case
// discretization for qubits; d > 2 is flagged bounds_only.
Task storage_task(int d, const GibbsContext &ctx, int equator_samples = 8);

// rho_x -> rho_x^T over the same sample set as storage_task.
Task transposition_task(int d, const GibbsContext &ctx, int equator_samples = 8);

// N -> m cloning in symmetric coordinates; ctx supplies beta and the
// single-copy Hamiltonian (ctx.h_A). Quantum variant carries the Haar-averaged
// operator; classical variant is the diagonal basis family.
Task cloning_task(const CloningSpec &spec, const GibbsContext &ctx, CloningVariant variant);

// Operator-by-operator time reversal (swapping the two sides) or output
// transposition of an existing task.
Task derived_task(const Task &t, DerivedKind kind);

nlohmann::json task_to_json(const Task &t);
Task task_from_json(const nlohmann::json &j);

// Builtin-task URI, e.g. "builtin:cloning;n=1;m=2;d=2". Beta and single-copy
// energies come from the accompanying context.
Task task_from_uri(const std::string &uri, const GibbsContext &ctx);

}  // namespace neq

#endif
