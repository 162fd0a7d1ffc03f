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

#ifndef NEQ_QUANTUM_HPP
#define NEQ_QUANTUM_HPP

#include <limits>
#include <vector>

#include "neq/qmat.hpp"

namespace neq {

// log2(e); converts beta*E terms to bits.
inline constexpr double kLog2E = 1.4426950408889634;

inline double inf() { return std::numeric_limits<double>::infinity(); }

// Diagonal in the computational basis, energies ascending. k = 1 throughout.
struct Hamiltonian {
    std::vector<double> energies;
    int dim() const { return static_cast<int>(energies.size()); }
    double e_min() const { return energies.front(); }
    double e_max() const { return energies.back(); }
    bool degenerate() const;
};

Hamiltonian make_hamiltonian(std::vector<double> energies);
Hamiltonian degenerate_hamiltonian(int d);

struct GibbsContext {
    double beta = 1.0;
    Hamiltonian h_A, h_B;

    int d_A() const { return h_A.dim(); }
    int d_B() const { return h_B.dim(); }
    BipartiteDims dims() const { return {d_A(), d_B()}; }
    double z_A() const;
    double z_B() const;
    double g_A(int i) const;  // e^{-beta E_i} / Z_A
    double g_B(int i) const;
    CMatrix gamma_A() const;
    CMatrix gamma_B() const;
    GibbsContext swapped() const;  // A and B exchanged (time-reversed context)
};

GibbsContext make_context(double beta, Hamiltonian h_A, Hamiltonian h_B);
nlohmann::json context_to_json(const GibbsContext &ctx);
GibbsContext context_from_json(const nlohmann::json &j);

struct GibbsStateInfo {
    CMatrix state;
    double z;             // partition function
    double mean_energy;   // <E>
    double entropy_bits;  // (ln Z + beta <E>) / ln 2
    double free_energy;   // -ln(Z)/beta  (equals E_0 for beta -> inf)
};

GibbsStateInfo gibbs_state(const Hamiltonian &h, double beta);

struct DensityOperator {
    CMatrix matrix;
    int dim() const { return static_cast<int>(matrix.rows()); }
};

// Validates PSD within 1e-9 and unit trace within 1e-9.
DensityOperator make_state(const CMatrix &m);

// Choi operator on A (x) B, input factor first; Tr_B[choi] = I_A.
struct ChoiChannel {
    CMatrix choi;
    BipartiteDims dims;
};

ChoiChannel make_channel(const CMatrix &choi, BipartiteDims dims);
ChoiChannel identity_channel(int d);
ChoiChannel constant_channel(const CMatrix &sigma_B, int d_A);

//

CMatrix apply_channel(const ChoiChannel &ch, const CMatrix &X);

// Max relative entropy in bits; +inf when support(rho) is not contained in
// support(sigma). rho may be subnormalized.
double d_max(const CMatrix &rho, const CMatrix &sigma);

// Min relative entropy -log2 Tr[Pi_rho sigma]; +inf when the overlap vanishes.
double d_min(const CMatrix &rho, const CMatrix &sigma);

double fidelity(const CMatrix &rho, const CMatrix &sigma);
double generalized_fidelity(const CMatrix &rho, const CMatrix &sigma);

struct Distances {
    double fidelity;
    double trace_distance;
    double purified_distance;
};

Distances distances(const DensityOperator &rho, const DensityOperator &sigma);

// Crooks-type reversal of a performance operator on A (x) B: full transpose,
// system swap, then the Gibbs sandwich (Gamma_B^{1/2} (x) Gamma_A^{-1/2}) on
// both sides. Output lives on B (x) A.
CMatrix time_reverse_perf_op(const CMatrix &omega, const GibbsContext &ctx);

// Same map with explicit reference operators in place of the context Gibbs
// states (multi-copy tasks pass subnormalized projected references).
CMatrix time_reverse_with(const CMatrix &omega, const CMatrix &gamma_A,
                          const CMatrix &gamma_B, BipartiteDims dims);

// Partial transpose on the output factor.
CMatrix transpose_perf_op(const CMatrix &omega, BipartiteDims dims);

}  // namespace neq

#endif
