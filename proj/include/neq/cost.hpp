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

#ifndef NEQ_COST_HPP
#define NEQ_COST_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "neq/quantum.hpp"
#include "neq/tasks.hpp"

namespace neq {

enum class CostMethod { ClosedForm, Sdp, BoundOnly };
enum class CostStatus { Ok, Clamped, Infeasible };

// Result of a cost or accuracy query. value_bits carries the cost in bits
// (kappa, c, bounds); accuracy_of_cost reuses the field for the fidelity.
struct CostReport {
    double value_bits = 0.0;
    CostMethod method = CostMethod::ClosedForm;
    CostStatus status = CostStatus::Ok;
    std::optional<double> solver_gap;
    std::optional<ChoiChannel> witness;
    std::string note;
};

// c(M, Pi_A) = D_max(M(Pi Gamma_A Pi) || Gamma_B) for [Pi_A, H_A] = 0.
// The commutator is checked entrywise against the diagonal Hamiltonian.
CostReport channel_cost(const ChoiChannel &ch, const CMatrix &pi_A,
                        const GibbsContext &ctx);

// Same cost against the task's reference operators. Multi-copy tasks store
// subnormalized projected references; a Choi with Tr_B M  <  I_A is then
// read as a channel that leaks outside the symmetric subspace, and the leaked
// weight is costed against the leftover Gibbs weight 1 - Tr[gamma_B].
CostReport channel_cost(const ChoiChannel &ch, const Task &t);

// log2 Tr[Pi_A Gamma_A]; <= 0, with equality iff Pi = I.
double c_min_of(const CMatrix &pi_A, const GibbsContext &ctx);
double c_min_of(const Task &t);

// Worst-case accuracy of a channel on the task: min_x Tr[M Omega_x], or the
// averaged operator when the task is covariant.
double task_accuracy(const Task &t, const ChoiChannel &ch);

// kappa_T = -log2 of the best accuracy of the time-reversed task. Covariant
// tasks evaluate H_min(A|B) of the Gibbs-sandwiched average directly; finite
// families solve the reverse-channel SDP and attach the optimizer as witness.
CostReport reverse_entropy(const Task &t);

// min lambda over Choi M >= 0 with Tr_B M = I_A (or <= I_A plus a leak term
// for symmetric-subspace tasks), Tr_A[(Pi Gamma_A Pi (x) I) M] <= lambda
// Gamma_B and Tr[M Omega_x] >= F. Returns log2 lambda* with the optimal Choi
// as witness. F below F_min clamps to c_min; F above F_max is Infeasible.
CostReport cost_of_accuracy(const Task &t, double fidelity);

// max t under the same channel constraints with lambda fixed to 2^c.
CostReport accuracy_of_cost(const Task &t, double cost_bits);

struct FExtremes {
    double f_max = 0.0;  // unconstrained accuracy SDP
    double f_min = 0.0;  // 2^{c_min - kappa}
};

FExtremes f_extremes(const Task &t);

// Theorem-style interpolation M_F = p_F M_0 + (1 - p_F) (prepare chi_B) with
// p_F = F/F_0 and chi_B = (Gamma_B - p_{F*} M_0(normalized Pi Gamma Pi)) /
// (1 - p_{F*}) at F* = F_min. Requires m0 to saturate the tradeoff law at
// F_0; the result is post-verified to have cost kappa + log2 F and accuracy
// F. A non-PSD chi_B or a failed post-check raises ConstructionFailed.
ChoiChannel build_mf_channel(const Task &t, const ChoiChannel &m0, double f0,
                             double f);

// Choi of the optimal universal cloner M(rho) = (d_N/d_N') P_N' (rho (x)
// I^{(x)(N'-N)}) P_N' in symmetric-subspace coordinates. Its cost against the
// cloning task is asserted to match the closed form
// dN (log2 Z + beta E_max log2 e) + log2(d_N/d_N').
ChoiChannel werner_cloner(const CloningSpec &spec, const GibbsContext &ctx);

// Choi of the measure-and-prepare estimation cloner, built exactly from
// integral identities on the symmetric subspace. Worst-case fidelity
// d_N / d_{N+N'}; entanglement-binding by construction (PPT Choi).
ChoiChannel state_estimation_cloner(const CloningSpec &spec);

// max{kappa, kappa*} + log2 F, the floor for entanglement binding machines.
// Flagged exact (method sdp) only when the task metadata says achievability
// is proven; otherwise bound_only.
CostReport eb_bound(const Task &t, double fidelity);

// kappa_clon + log2(d_{N+N'} e^{-beta N' dE} / d_N') in bits; exact in the
// degenerate case.
double transpose_cloning_kappa_bound(const CloningSpec &spec,
                                     const GibbsContext &ctx);

// Phase-covariant channel: block-diagonal Choi determined by conditional
// probabilities p(m|n) (columns sum to 1) and coherences c(m,n) for m > n
// with |c_mn|^2 <= p_mn p_nm.
struct PhaseCovariantChannel {
    Eigen::MatrixXd p;
    CMatrix c;
    int dim() const { return static_cast<int>(p.rows()); }
};

struct PhaseCovariantReport {
    ChoiChannel choi;
    double cost_bits = 0.0;
    // Transposition fidelity on a pure input with the given amplitudes.
    std::function<double(const CVector &)> fidelity;
};

PhaseCovariantReport phase_covariant(const PhaseCovariantChannel &pc,
                                     const GibbsContext &ctx);

// Parameters of the optimal transposition benchmark channel at fidelity F:
// p(1|1) = F, p(0|1) = 1-F, p(1|0) = (2F-1)^2/(1-F), c_10 = 2F-1.
PhaseCovariantChannel qubit_benchmark_channel(double fidelity);

struct BenchmarkReport {
    double cost_bits = 0.0;
    double f_min = 0.0;
    double f_max = 0.0;
    CostMethod method = CostMethod::ClosedForm;
    CostStatus status = CostStatus::Ok;
    std::string note;
};

// Closed-form benchmark cost log2[F + (2F-1)^2/(gamma (1-F))] for qubits
// (exact), or the qudit transposition lower bound for d > 2. Out-of-range F
// clamps to the nearest endpoint; a negative closed form clamps to 0. Both
// are flagged in status/note.
BenchmarkReport qubit_benchmark(double fidelity, const GibbsContext &ctx);

// kappa of a classical function: D_max(p_f || g_B) with
// p_f(y) = sum_{x: f(x)=y} g_A(x).
double kappa_classical(const std::vector<int> &f, const GibbsContext &ctx);

struct ErasureReport {
    double cost_bits = 0.0;
    double work_kt_ln2_bits = 0.0;  // W / (kT ln 2)
    double f_min = 0.0;
};

// Erasure line c = kappa_erase + log2 F with kappa_erase = -log2 g_B(0);
// valid for F in [f_min, 1], f_min = g_B(0).
ErasureReport erasure_oracle(const GibbsContext &ctx, double fidelity);

// Cloning line dN (log2 Z + beta E_max log2 e) + log2 F. The quantum variant
// caps at F_max = d_N/d_N', the classical variant at F = 1.
double cloning_oracle(const CloningSpec &spec, const GibbsContext &ctx,
                      double fidelity,
                      CloningVariant variant = CloningVariant::Quantum);

// D_min of the energy-pinched state against the Gibbs state of h_A, in bits;
// multiply by kT ln 2 for the extractable work.
double extractable_work(const DensityOperator &rho, const GibbsContext &ctx);

struct MemoryErasureReport {
    double general = 0.0;
    std::optional<double> degenerate_h0;  // H_0(S|Q) when H_SQ is degenerate
};

// Work floor for resetting S with the memory Q intact:
// D_max(eta_S (x) gamma_Q || Gamma_SQ) - D_max(proj. Gamma || Gamma_SQ) with
// eta_S = |0><0|. joint_energies lists the diagonal of H_SQ in tensor order.
MemoryErasureReport memory_erasure_bound(const CMatrix &pi_sq,
                                         const std::vector<double> &joint_energies,
                                         double beta, BipartiteDims dims);

enum class CurveVariant { Quantum, Classical, Eb };

struct CurvePoint {
    double fidelity = 0.0;
    double cost_bits = 0.0;
    double lower_bound_bits = 0.0;
    CostStatus status = CostStatus::Ok;
};

struct TradeoffCurve {
    std::vector<CurvePoint> points;  // sorted by fidelity
    double kappa = 0.0;
    double f_min = 0.0;
    double f_max = 0.0;
    double c_min = 0.0;
    std::string task_label;
    CurveVariant variant = CurveVariant::Quantum;
    std::string note;
};

// Cost-vs-fidelity curves on [f_min, f_max] per variant. The classical
// variant of a cloning task switches to the classical family and caps at
// F = 1; the eb variant is the max{kappa, kappa*} + log2 F line up to the
// PPT-constrained accuracy maximum. Per-point failures are recorded in the
// curve note and the remaining points retained. jobs > 1 evaluates points
// concurrently; results are merged in fidelity order either way.
std::vector<TradeoffCurve> scan_curve(const Task &t, int n_points,
                                      const std::vector<CurveVariant> &variants,
                                      int jobs = 1);

}  // namespace neq

#endif
