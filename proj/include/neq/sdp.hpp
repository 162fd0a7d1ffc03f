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

#ifndef NEQ_SDP_HPP
#define NEQ_SDP_HPP

#include <functional>
#include <string>
#include <vector>

#include "neq/qmat.hpp"

namespace neq {

// ---------------------------------------------------------------------------
// Low-level real cone program
//
//   minimize    c'x
//   subject to  A x = b
//               G x + s = h,  s in K = R_+^l  x  PSD(q_1) x ... x PSD(q_k)
//
// PSD blocks are stored in svec form (lower triangle, column-major, off-diagonal
// entries scaled by sqrt(2)). Solved by a primal-dual interior-point method on
// the homogeneous self-dual embedding with Nesterov-Todd scaling and a Mehrotra
// predictor-corrector; dense Schur-complement KKT solves with iterative
// refinement. Deterministic: no randomized pivoting, fixed iteration order.
// ---------------------------------------------------------------------------

struct ConeDims {
    int l = 0;            // nonnegative orthant size
    std::vector<int> q;   // PSD block sides (already realified where needed)
};

enum class ConeStatus { Optimal, PrimalInfeasible, DualInfeasible, NumericalFailure };

struct ConeOptions {
    double feas_tol = 1e-8;
    double abs_tol = 1e-8;
    double rel_tol = 1e-8;
    int max_iter = 200;
    bool verbose = false;  // JSON line per iterate on stderr
};

struct ConeResult {
    ConeStatus status = ConeStatus::NumericalFailure;
    Eigen::VectorXd x, y, z, s;
    double pcost = 0.0, dcost = 0.0;
    double gap = 0.0;     // s'z after backscaling
    double pres = 0.0, dres = 0.0;
    int iters = 0;
    std::string note;
};

int svec_dim(int q);
Eigen::VectorXd svec_of(const Eigen::MatrixXd &S);
Eigen::MatrixXd smat_of(const Eigen::VectorXd &v, int q);

ConeResult solve_cone_lp(const Eigen::VectorXd &c, const Eigen::MatrixXd &G,
                         const Eigen::VectorXd &h, const ConeDims &dims,
                         const Eigen::MatrixXd &A, const Eigen::VectorXd &b,
                         const ConeOptions &opts = {});

// ---------------------------------------------------------------------------
// Hermitian modeling layer
//
// Variable blocks are complex Hermitian PSD matrices or free real scalars
// (stored as 1x1 blocks). Objective and constraint maps are supplied as
// affine functions of the block list and compiled to the real cone form by
// probing them on an orthonormal Hermitian operator basis. Complex blocks in
// matrix inequalities are realified ([[Re,-Im],[Im,Re]]), doubling the side.
// ---------------------------------------------------------------------------

enum class BlockKind { PsdHermitian, FreeScalar };
enum class Sense { Min, Max };
enum class SdpStatus { Optimal, Infeasible, Unbounded, NumericalFailure };

using BlockValues = std::vector<CMatrix>;
// Lambdas passed as maps must declare an explicit `-> CMatrix` return type;
// letting the compiler deduce an Eigen expression type leaves it referencing
// temporaries that die at the return.
using LinMapFn = std::function<CMatrix(const BlockValues &)>;
using ObjectiveFn = std::function<double(const BlockValues &)>;

struct SdpOptions {
    double gap_tol = 1e-8;
    double feas_tol = 1e-8;
    int max_iter = 200;
    bool verbose = false;
};

class SdpProblem {
  public:
    // Returns the block index.
    int add_psd_block(const std::string &name, int side);
    int add_scalar_block(const std::string &name);

    void set_objective(Sense sense, ObjectiveFn f);

    // map(blocks) == rhs (both sides Hermitian, map affine).
    void add_eq(LinMapFn map, CMatrix rhs);
    // map(blocks) <= rhs in PSD order. Side-1 outputs become orthant rows.
    void add_leq(LinMapFn map, CMatrix rhs);

    struct Block {
        std::string name;
        int side;
        BlockKind kind;
    };
    struct Constraint {
        LinMapFn map;
        CMatrix rhs;
    };

    const std::vector<Block> &blocks() const { return blocks_; }
    const std::vector<Constraint> &equalities() const { return eqs_; }
    const std::vector<Constraint> &inequalities() const { return leqs_; }
    Sense sense() const { return sense_; }
    const ObjectiveFn &objective() const { return obj_; }

  private:
    std::vector<Block> blocks_;
    std::vector<Constraint> eqs_, leqs_;
    Sense sense_ = Sense::Min;
    ObjectiveFn obj_;
};

struct SdpSolution {
    SdpStatus status = SdpStatus::NumericalFailure;
    double objective = 0.0;       // in the problem's sense
    double dual_objective = 0.0;  // matching bound from the cone dual
    double gap = 0.0;             // |objective - dual_objective|
    std::vector<CMatrix> blocks;  // primal block values (scalars as 1x1)
    int iterations = 0;
    std::string note;
};

SdpSolution solve_sdp(const SdpProblem &problem, const SdpOptions &opts = {});

}  // namespace neq

#endif
