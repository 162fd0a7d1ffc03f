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

#ifndef NEQ_QMAT_HPP
#define NEQ_QMAT_HPP

#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "neq/errors.hpp"

namespace neq {

using cx = std::complex<double>;

// Dense complex matrix, row-major. All operators in this library live here:
// states, Gibbs operators, Choi matrices, SDP witnesses.
using CMatrix = Eigen::Matrix<cx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

// System A is always the first tensor factor.
struct BipartiteDims {
    int d_A = 1;
    int d_B = 1;
};

enum class Sys { A, B };

// Relative support threshold used by func_on_support and friends.
inline constexpr double kSupportTol = 1e-9;

CMatrix kron(const CMatrix &a, const CMatrix &b);
CMatrix dagger(const CMatrix &m);
CMatrix hermitize(const CMatrix &m);

bool is_hermitian(const CMatrix &m, double rel_tol = 1e-8);
bool is_psd(const CMatrix &m, double tol = 1e-8);
void check_finite(const CMatrix &m);

CMatrix identity(int d);
CMatrix basis_proj(int i, int d);                    // |i><i|
CMatrix ket_bra(int i, int j, int d);                // |i><j|
CMatrix proj(const CVector &psi);                    // |psi><psi|

CMatrix partial_trace(const CMatrix &m, BipartiteDims dims, Sys which);
CMatrix partial_transpose(const CMatrix &m, BipartiteDims dims, Sys which);
CMatrix swap_sides(const CMatrix &m, BipartiteDims dims);  // A(x)B -> B(x)A

// Multipartite variants. `dims` lists the factor dimensions in tensor order,
// `systems` the 0-based factors traced out / transposed.
CMatrix partial_trace_multi(const CMatrix &m, const std::vector<int> &dims,
                            const std::vector<int> &systems);
CMatrix partial_transpose_multi(const CMatrix &m, const std::vector<int> &dims,
                                const std::vector<int> &systems);

struct EigH {
    RealVec values;   // ascending
    CMatrix vectors;  // columns, matching order
};

// Symmetrizes (M+M†)/2, then eigendecomposes. Throws NotHermitian if the
// anti-Hermitian part is large relative to the matrix scale.
EigH eig_herm(const CMatrix &m);

// Applies f to the eigenvalues strictly above tol·|λ|_max; eigenvalues at or
// below the threshold map to 0. Throws NotPsd when an eigenvalue sits below
// −tol·|λ|_max.
CMatrix func_on_support(const CMatrix &m, const std::function<double(double)> &f,
                        double tol = kSupportTol);

CMatrix sqrt_psd(const CMatrix &m);
CMatrix inv_sqrt_on_support(const CMatrix &m);
CMatrix support_projector(const CMatrix &m);

double spectral_norm(const CMatrix &m);  // Hermitian input: largest |eigenvalue|
double trace_norm(const CMatrix &m);     // sum of singular values
double lambda_max(const CMatrix &m);
double lambda_min(const CMatrix &m);

nlohmann::json mat_to_json(const CMatrix &m);
CMatrix mat_from_json(const nlohmann::json &j);

// Deterministic pseudo-random operators (tests, verification suites).
CMatrix random_ginibre(int d, std::mt19937_64 &rng);
CMatrix random_hermitian(int d, std::mt19937_64 &rng);
CMatrix random_psd(int d, std::mt19937_64 &rng);
CMatrix random_density(int d, std::mt19937_64 &rng);
CVector haar_ket(int d, std::mt19937_64 &rng);

}  // namespace neq

#endif
