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

#include "neq/sdp.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>

namespace neq {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kGammaStep = 0.99;
constexpr double kSigmaMin = 1e-4;
constexpr double kSigmaMax = 1.0;
constexpr double kStepMin = 1e-7;
constexpr double kSafeguard = 500.0;

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct Lay {
    int l = 0;
    std::vector<int> q;
    std::vector<int> off;  // svec offsets of the PSD blocks in the cone vector
    int m = 0;             // total cone vector length
    double nu = 0.0;       // cone degree

    explicit Lay(const ConeDims &dims) {
        l = dims.l;
        q = dims.q;
        int pos = l;
        for (int qi : q) {
            off.push_back(pos);
            pos += svec_dim(qi);
        }
        m = pos;
        nu = l;
        for (int qi : q) nu += qi;
    }
};

struct Scal {
    Eigen::ArrayXd wl;     // orthant scaling, w_i = sqrt(s_i/z_i)
    Eigen::ArrayXd lam_l;  // orthant scaled point sqrt(s_i z_i)
    std::vector<MatrixXd> R, Rti, T, Tinv;
    std::vector<VectorXd> lam_q;
    VectorXd lambda;  // scaled point, full svec layout

    void set_identity(const Lay &lay) {
        wl = Eigen::ArrayXd::Ones(lay.l);
        lam_l = Eigen::ArrayXd::Ones(lay.l);
        R.clear();
        Rti.clear();
        T.clear();
        Tinv.clear();
        lam_q.clear();
        for (int qi : lay.q) {
            R.push_back(MatrixXd::Identity(qi, qi));
            Rti.push_back(MatrixXd::Identity(qi, qi));
            T.push_back(MatrixXd::Identity(qi, qi));
            Tinv.push_back(MatrixXd::Identity(qi, qi));
            lam_q.push_back(VectorXd::Ones(qi));
        }
        lambda = VectorXd::Zero(lay.m);
    }
};

VectorXd cone_e(const Lay &lay) {
    VectorXd e = VectorXd::Zero(lay.m);
    e.head(lay.l).setOnes();
    for (size_t b = 0; b < lay.q.size(); ++b)
        e.segment(lay.off[b], svec_dim(lay.q[b])) = svec_of(MatrixXd::Identity(lay.q[b], lay.q[b]));
    return e;
}

// Smallest "eigenvalue" of a cone vector (orthant entries and PSD spectra).
double cone_min_eig(const Lay &lay, const VectorXd &v) {
    double m = std::numeric_limits<double>::infinity();
    if (lay.l > 0) m = std::min(m, v.head(lay.l).minCoeff());
    for (size_t b = 0; b < lay.q.size(); ++b) {
        MatrixXd S = smat_of(v.segment(lay.off[b], svec_dim(lay.q[b])), lay.q[b]);
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(S, Eigen::EigenvaluesOnly);
        m = std::min(m, es.eigenvalues().minCoeff());
    }
    return m;
}

VectorXd bring_to_cone(const Lay &lay, const VectorXd &v, const VectorXd &e) {
    // Shift unless comfortably interior; a starting point on (or barely off)
    // the boundary degenerates the first scaling matrix.
    const double margin = 1e-3 * std::max(1.0, v.lpNorm<Eigen::Infinity>());
    double a = -cone_min_eig(lay, v);
    if (a < -margin) return v;
    return v + (1.0 + margin + a) * e;
}

bool update_scaling(const Lay &lay, const VectorXd &s, const VectorXd &z, Scal &sc) {
    if (lay.l > 0) {
        auto sl = s.head(lay.l).array(), zl = z.head(lay.l).array();
        if (sl.minCoeff() <= 0.0 || zl.minCoeff() <= 0.0) return false;
        sc.wl = (sl / zl).sqrt();
        sc.lam_l = (sl * zl).sqrt();
    } else {
        sc.wl.resize(0);
        sc.lam_l.resize(0);
    }
    sc.R.assign(lay.q.size(), MatrixXd());
    sc.Rti.assign(lay.q.size(), MatrixXd());
    sc.T.assign(lay.q.size(), MatrixXd());
    sc.Tinv.assign(lay.q.size(), MatrixXd());
    sc.lam_q.assign(lay.q.size(), VectorXd());
    sc.lambda = VectorXd::Zero(lay.m);
    if (lay.l > 0) sc.lambda.head(lay.l) = sc.lam_l.matrix();
    for (size_t b = 0; b < lay.q.size(); ++b) {
        const int qi = lay.q[b];
        MatrixXd S = smat_of(s.segment(lay.off[b], svec_dim(qi)), qi);
        MatrixXd Z = smat_of(z.segment(lay.off[b], svec_dim(qi)), qi);
        Eigen::LLT<MatrixXd> cs(S), cz(Z);
        if (cs.info() != Eigen::Success || cz.info() != Eigen::Success) return false;
        MatrixXd Ls = cs.matrixL();
        MatrixXd Lz = cz.matrixL();
        Eigen::JacobiSVD<MatrixXd> svd(Lz.transpose() * Ls,
                                       Eigen::ComputeFullU | Eigen::ComputeFullV);
        VectorXd sig = svd.singularValues();
        if (sig.minCoeff() <= 0.0 || !sig.allFinite()) return false;
        VectorXd isq = sig.array().rsqrt().matrix();
        sc.R[b] = Ls * svd.matrixV() * isq.asDiagonal();
        sc.Rti[b] = Lz * svd.matrixU() * isq.asDiagonal();
        sc.T[b] = sc.R[b] * sc.R[b].transpose();
        sc.Tinv[b] = sc.Rti[b] * sc.Rti[b].transpose();
        sc.lam_q[b] = sig;
        MatrixXd L = sig.asDiagonal();
        sc.lambda.segment(lay.off[b], svec_dim(qi)) = svec_of(L);
    }
    return true;
}

enum class ScaleOp { W, Wt, WmT, H, Hinv };

// Applies one of W, W', W^{-T}, W'W, (W'W)^{-1} to a cone vector.
VectorXd apply_scale(const Lay &lay, const Scal &sc, ScaleOp op, const VectorXd &v) {
    VectorXd out(lay.m);
    if (lay.l > 0) {
        switch (op) {
            case ScaleOp::W:
            case ScaleOp::Wt: out.head(lay.l) = (v.head(lay.l).array() * sc.wl).matrix(); break;
            case ScaleOp::WmT: out.head(lay.l) = (v.head(lay.l).array() / sc.wl).matrix(); break;
            case ScaleOp::H: out.head(lay.l) = (v.head(lay.l).array() * sc.wl * sc.wl).matrix(); break;
            case ScaleOp::Hinv:
                out.head(lay.l) = (v.head(lay.l).array() / (sc.wl * sc.wl)).matrix();
                break;
        }
    }
    for (size_t b = 0; b < lay.q.size(); ++b) {
        const int qi = lay.q[b];
        MatrixXd V = smat_of(v.segment(lay.off[b], svec_dim(qi)), qi);
        MatrixXd Y;
        switch (op) {
            case ScaleOp::W: Y = sc.R[b].transpose() * V * sc.R[b]; break;
            case ScaleOp::Wt: Y = sc.R[b] * V * sc.R[b].transpose(); break;
            case ScaleOp::WmT: Y = sc.Rti[b].transpose() * V * sc.Rti[b]; break;
            case ScaleOp::H: Y = sc.T[b] * V * sc.T[b]; break;
            case ScaleOp::Hinv: Y = sc.Tinv[b] * V * sc.Tinv[b]; break;
        }
        out.segment(lay.off[b], svec_dim(qi)) = svec_of(Y);
    }
    return out;
}

// Jordan product u o v.
VectorXd jprod(const Lay &lay, const VectorXd &u, const VectorXd &v) {
    VectorXd out(lay.m);
    if (lay.l > 0) out.head(lay.l) = u.head(lay.l).cwiseProduct(v.head(lay.l));
    for (size_t b = 0; b < lay.q.size(); ++b) {
        const int qi = lay.q[b];
        MatrixXd U = smat_of(u.segment(lay.off[b], svec_dim(qi)), qi);
        MatrixXd V = smat_of(v.segment(lay.off[b], svec_dim(qi)), qi);
        out.segment(lay.off[b], svec_dim(qi)) = svec_of(0.5 * (U * V + V * U));
    }
    return out;
}

// Solves lambda o x = w for x, with lambda the (diagonal) scaled point.
VectorXd jdiv_lambda(const Lay &lay, const Scal &sc, const VectorXd &w) {
    VectorXd out(lay.m);
    if (lay.l > 0) out.head(lay.l) = (w.head(lay.l).array() / sc.lam_l).matrix();
    for (size_t b = 0; b < lay.q.size(); ++b) {
        const int qi = lay.q[b];
        MatrixXd W = smat_of(w.segment(lay.off[b], svec_dim(qi)), qi);
        const VectorXd &lam = sc.lam_q[b];
        for (int i = 0; i < qi; ++i)
            for (int j = 0; j < qi; ++j) W(i, j) *= 2.0 / (lam(i) + lam(j));
        out.segment(lay.off[b], svec_dim(qi)) = svec_of(W);
    }
    return out;
}

// Largest step a with lambda + a*d staying in the cone, for both scaled
// directions, plus positivity of tau and kappa. Capped at `cap`.
double line_search(const Lay &lay, const Scal &sc, const VectorXd &dsW, const VectorXd &dzW,
                   double tau, double dtau, double kap, double dkap, double cap) {
    double bound = cap;
    auto upd = [&bound](double mn) {
        if (mn < 0.0) bound = std::min(bound, -1.0 / mn);
    };
    if (lay.l > 0) {
        upd((dsW.head(lay.l).array() / sc.lam_l).minCoeff());
        upd((dzW.head(lay.l).array() / sc.lam_l).minCoeff());
    }
    for (size_t b = 0; b < lay.q.size(); ++b) {
        const int qi = lay.q[b];
        Eigen::ArrayXd isq = sc.lam_q[b].array().rsqrt();
        for (const VectorXd *dir : {&dsW, &dzW}) {
            MatrixXd D = smat_of(dir->segment(lay.off[b], svec_dim(qi)), qi);
            for (int i = 0; i < qi; ++i)
                for (int j = 0; j < qi; ++j) D(i, j) *= isq(i) * isq(j);
            Eigen::SelfAdjointEigenSolver<MatrixXd> es(D, Eigen::EigenvaluesOnly);
            upd(es.eigenvalues().minCoeff());
        }
    }
    if (dtau < 0.0) bound = std::min(bound, -tau / dtau);
    if (dkap < 0.0) bound = std::min(bound, -kap / dkap);
    return bound;
}

// Dense KKT system
//   [ 0   A'  G'  ] [dx]   [bx]
//   [ A   0   0   ] [dy] = [by]
//   [ G   0  -W'W ] [dz]   [bz]
// via the Schur complement M = G'(W'W)^{-1}G, LU factorization, and iterative
// refinement against the unregularized system.
class Kkt {
  public:
    Kkt(const MatrixXd &G, const MatrixXd &A, const Lay &lay)
        : G_(G), A_(A), lay_(lay), n_(static_cast<int>(G.cols())), p_(static_cast<int>(A.rows())) {
        data_scale_ = std::max(1.0, G.cwiseAbs().maxCoeff());
        if (p_ > 0) data_scale_ = std::max(data_scale_, A.cwiseAbs().maxCoeff());
        colmats_.resize(lay.q.size());
        for (size_t b = 0; b < lay.q.size(); ++b) {
            colmats_[b].reserve(n_);
            for (int j = 0; j < n_; ++j)
                colmats_[b].push_back(
                    smat_of(G.col(j).segment(lay.off[b], svec_dim(lay.q[b])), lay.q[b]));
        }
    }

    bool factor(const Scal &sc) {
        sc_ = &sc;
        MatrixXd M = MatrixXd::Zero(n_, n_);
        if (lay_.l > 0) {
            Eigen::ArrayXd hinv = 1.0 / (sc.wl * sc.wl);
            M.noalias() = G_.topRows(lay_.l).transpose() *
                          (G_.topRows(lay_.l).array().colwise() * hinv).matrix();
        }
        for (size_t b = 0; b < lay_.q.size(); ++b) {
            const int qi = lay_.q[b];
            MatrixXd Ysv(svec_dim(qi), n_);
            for (int j = 0; j < n_; ++j) {
                MatrixXd Y = sc.Tinv[b] * colmats_[b][j] * sc.Tinv[b];
                Ysv.col(j) = svec_of(Y);
            }
            M.noalias() += G_.middleRows(lay_.off[b], svec_dim(qi)).transpose() * Ysv;
        }
        M = 0.5 * (M + M.transpose());
        // Static regularization. The absolute floor sits at the data scale;
        // the relative term keeps pivots of weakly-determined directions above
        // the LU's precision once the barrier Hessian inflates M near the
        // boundary.
        const double mscale = std::max(data_scale_, M.diagonal().cwiseAbs().maxCoeff());
        const double delta = std::max(1e-9 * data_scale_, 1e-14 * mscale);
        MatrixXd K2 = MatrixXd::Zero(n_ + p_, n_ + p_);
        K2.topLeftCorner(n_, n_) = M;
        K2.topLeftCorner(n_, n_).diagonal().array() += delta;
        if (p_ > 0) {
            K2.topRightCorner(n_, p_) = A_.transpose();
            K2.bottomLeftCorner(p_, n_) = A_;
            K2.bottomRightCorner(p_, p_).diagonal().array() -= delta;
        }
        lu_.compute(K2);
        return K2.allFinite();
    }

    void solve(const VectorXd &bx, const VectorXd &by, const VectorXd &bz, VectorXd &dx,
               VectorXd &dy, VectorXd &dz) const {
        direct(bx, by, bz, dx, dy, dz);
        const double rhs_scale =
            1.0 + std::max({bx.lpNorm<Eigen::Infinity>(),
                            p_ > 0 ? by.lpNorm<Eigen::Infinity>() : 0.0,
                            bz.lpNorm<Eigen::Infinity>()});
        double resid_prev = std::numeric_limits<double>::infinity();
        for (int it = 0; it < 10; ++it) {
            VectorXd ex = bx - G_.transpose() * dz;
            if (p_ > 0) ex.noalias() -= A_.transpose() * dy;
            VectorXd ey = p_ > 0 ? VectorXd(by - A_ * dx) : VectorXd(0);
            VectorXd ez = bz - G_ * dx + apply_scale(lay_, *sc_, ScaleOp::H, dz);
            double resid = std::max({ex.lpNorm<Eigen::Infinity>(),
                                     p_ > 0 ? ey.lpNorm<Eigen::Infinity>() : 0.0,
                                     ez.lpNorm<Eigen::Infinity>()});
            if (!std::isfinite(resid) || resid <= 1e-13 * rhs_scale ||
                resid >= 0.9 * resid_prev)
                break;
            resid_prev = resid;
            VectorXd cx, cy, cz;
            direct(ex, ey, ez, cx, cy, cz);
            if (!cx.allFinite() || !cy.allFinite() || !cz.allFinite()) break;
            dx += cx;
            dy += cy;
            dz += cz;
        }
    }

  private:
    void direct(const VectorXd &bx, const VectorXd &by, const VectorXd &bz, VectorXd &dx,
                VectorXd &dy, VectorXd &dz) const {
        VectorXd hb = apply_scale(lay_, *sc_, ScaleOp::Hinv, bz);
        VectorXd rhs(n_ + p_);
        rhs.head(n_) = bx + G_.transpose() * hb;
        if (p_ > 0) rhs.tail(p_) = by;
        VectorXd sol = lu_.solve(rhs);
        dx = sol.head(n_);
        dy = sol.tail(p_);
        dz = apply_scale(lay_, *sc_, ScaleOp::Hinv, G_ * dx - bz);
    }

    const MatrixXd &G_;
    const MatrixXd &A_;
    const Lay &lay_;
    int n_, p_;
    std::vector<std::vector<MatrixXd>> colmats_;
    Eigen::PartialPivLU<MatrixXd> lu_;
    const Scal *sc_ = nullptr;
    double data_scale_ = 1.0;
};

struct Stats {
    double pcost = 0, dcost = 0, gap = 0, pres = 0, dres = 0;
    std::optional<double> relgap, pinfres, dinfres;
    double cx = 0, by = 0, hz = 0;
    double tau = 1, kap = 1;
};

struct Snapshot {
    VectorXd x, y, z, s;
    Stats st;
    double score = std::numeric_limits<double>::infinity();
};

}  // namespace

int svec_dim(int q) { return q * (q + 1) / 2; }

Eigen::VectorXd svec_of(const Eigen::MatrixXd &S) {
    const int q = static_cast<int>(S.rows());
    Eigen::VectorXd v(svec_dim(q));
    int idx = 0;
    for (int c = 0; c < q; ++c) {
        v(idx++) = S(c, c);
        for (int r = c + 1; r < q; ++r) v(idx++) = 0.5 * kSqrt2 * (S(r, c) + S(c, r));
    }
    return v;
}

Eigen::MatrixXd smat_of(const Eigen::VectorXd &v, int q) {
    Eigen::MatrixXd S(q, q);
    int idx = 0;
    for (int c = 0; c < q; ++c) {
        S(c, c) = v(idx++);
        for (int r = c + 1; r < q; ++r) {
            double val = v(idx++) / kSqrt2;
            S(r, c) = val;
            S(c, r) = val;
        }
    }
    return S;
}

ConeResult solve_cone_lp(const VectorXd &c, const MatrixXd &G, const VectorXd &h,
                         const ConeDims &dims, const MatrixXd &A, const VectorXd &b,
                         const ConeOptions &opts) {
    const int n = static_cast<int>(c.size());
    const int p = static_cast<int>(A.rows());
    Lay lay(dims);
    if (G.rows() != lay.m || G.cols() != n || h.size() != lay.m)
        throw InvalidDimensions("solve_cone_lp: G/h shape mismatch");
    if (p > 0 && (A.cols() != n || b.size() != p))
        throw InvalidDimensions("solve_cone_lp: A/b shape mismatch");
    if (lay.m == 0) throw InvalidDimensions("solve_cone_lp: empty cone");

    const VectorXd e = cone_e(lay);
    Kkt kkt(G, A, lay);
    Scal sc;
    sc.set_identity(lay);
    kkt.factor(sc);

    VectorXd x(n), y(p), z(lay.m), s(lay.m);
    {
        VectorXd dx1, dy1, dz1, dx2, dy2, dz2;
        kkt.solve(VectorXd::Zero(n), b, h, dx1, dy1, dz1);
        x = dx1;
        s = bring_to_cone(lay, -dz1, e);
        kkt.solve(-c, VectorXd::Zero(p), VectorXd::Zero(lay.m), dx2, dy2, dz2);
        y = dy2;
        z = bring_to_cone(lay, dz2, e);
    }
    double tau = 1.0, kap = 1.0;

    const double resx0 = std::max(1.0, c.norm());
    const double resy0 = std::max(1.0, b.norm());
    const double resz0 = std::max(1.0, h.norm());

    ConeResult res;
    Snapshot best;
    double pres_prev = std::numeric_limits<double>::max();
    int tiny_steps = 0;

    auto snapshot_if_better = [&](const Stats &st) {
        double score = std::max(st.pres, st.dres) +
                       (st.relgap ? std::min(*st.relgap, 1.0) : 1.0);
        if (score < best.score) {
            best.x = x;
            best.y = y;
            best.z = z;
            best.s = s;
            best.st = st;
            best.score = score;
        }
    };

    // Exit decision at given tolerances; returns status if a terminal state is
    // detected. Mirrors the standard HSDE exit tests.
    auto check_exit = [&](const Stats &st, double feastol, double abstol,
                          double reltol) -> std::optional<ConeStatus> {
        const bool gap_ok = st.gap < abstol || (st.relgap && *st.relgap < reltol);
        const bool duality_ok =
            std::abs(st.pcost - st.dcost) <= abstol * (1.0 + std::abs(st.pcost));
        if ((-st.cx > 0.0 || -st.by - st.hz >= -abstol) && st.pres < feastol &&
            st.dres < feastol && gap_ok && duality_ok)
            return ConeStatus::Optimal;
        if (st.dinfres && *st.dinfres < feastol && st.tau < st.kap)
            return ConeStatus::DualInfeasible;
        if ((st.pinfres && *st.pinfres < feastol && st.tau < st.kap) ||
            (st.tau < feastol && st.kap < feastol && st.pinfres && *st.pinfres < feastol))
            return ConeStatus::PrimalInfeasible;
        return std::nullopt;
    };

    auto finalize = [&](ConeStatus status, const Stats &st, int iters, const std::string &note) {
        res.status = status;
        res.iters = iters;
        res.note = note;
        res.pcost = st.pcost;
        res.dcost = st.dcost;
        res.pres = st.pres;
        res.dres = st.dres;
        const double t = st.tau;
        res.x = x / t;
        res.y = y / t;
        res.z = z / t;
        res.s = s / t;
        res.gap = res.s.dot(res.z);
        if (status == ConeStatus::PrimalInfeasible) {
            const double scale = -(st.by + st.hz);
            if (scale > 0) {
                res.y /= scale / t;
                res.z /= scale / t;
            }
            res.note = "primal infeasibility certificate: A'y+G'z~0, z in K*, b'y+h'z=-1";
        } else if (status == ConeStatus::DualInfeasible) {
            const double scale = -st.cx;
            if (scale > 0) {
                res.x /= scale / t;
                res.s /= scale / t;
            }
            res.note = "dual infeasibility certificate: Ax~0, Gx+s~0, s in K, c'x=-1";
        }
        return res;
    };

    auto restore_best_and_finish = [&](int iters, const std::string &why) {
        if (best.score < std::numeric_limits<double>::infinity()) {
            x = best.x;
            y = best.y;
            z = best.z;
            s = best.s;
            auto st = best.st;
            if (auto ex = check_exit(st, opts.feas_tol, opts.abs_tol, opts.rel_tol))
                return finalize(*ex, st, iters, why);
            // One relaxation notch before giving up, for endgame KKT breakdown
            // at an already near-optimal iterate. Only the optimal verdict is
            // accepted here; infeasibility certificates stay at full strength.
            if (check_exit(st, 10.0 * opts.feas_tol, 10.0 * opts.abs_tol,
                           10.0 * opts.rel_tol) == ConeStatus::Optimal)
                return finalize(ConeStatus::Optimal, st, iters, "reduced accuracy: " + why);
            return finalize(ConeStatus::NumericalFailure, st, iters, why);
        }
        Stats st;
        st.tau = tau;
        st.kap = kap;
        return finalize(ConeStatus::NumericalFailure, st, iters, why);
    };

    VectorXd rhs1x = -c;
    VectorXd dx1(n), dy1(p), dz1(lay.m), dx2(n), dy2(p), dz2(lay.m);

    for (int iter = 0; iter <= opts.max_iter; ++iter) {
        // Residuals.
        VectorXd rx = -(G.transpose() * z);
        if (p > 0) rx.noalias() -= A.transpose() * y;
        const double hresx = rx.norm();
        rx -= tau * c;
        VectorXd ry = p > 0 ? VectorXd(A * x) : VectorXd(0);
        const double hresy = p > 0 ? ry.norm() : 0.0;
        if (p > 0) ry -= tau * b;
        VectorXd rz = s + G * x;
        const double hresz = rz.norm();
        rz -= tau * h;
        Stats st;
        st.cx = c.dot(x);
        st.by = p > 0 ? b.dot(y) : 0.0;
        st.hz = h.dot(z);
        const double rt = kap + st.cx + st.by + st.hz;
        const double nx = x.norm(), ny = y.norm(), nz = z.norm(), ns = s.norm();

        st.tau = tau;
        st.kap = kap;
        st.gap = s.dot(z);
        const double mu = (st.gap + kap * tau) / (lay.nu + 1.0);
        st.pcost = st.cx / tau;
        st.dcost = -(st.hz + st.by) / tau;
        if (st.pcost < 0.0)
            st.relgap = st.gap / (-st.pcost);
        else if (st.dcost > 0.0)
            st.relgap = st.gap / st.dcost;
        const double nry = p > 0 ? ry.norm() / std::max(resy0 + nx, 1.0) : 0.0;
        const double nrz = rz.norm() / std::max(resz0 + nx + ns, 1.0);
        st.pres = std::max(nry, nrz) / tau;
        st.dres = rx.norm() / std::max(resx0 + ny + nz, 1.0) / tau;
        if ((st.hz + st.by) / std::max(ny + nz, 1.0) < -opts.rel_tol)
            st.pinfres = hresx / std::max(ny + nz, 1.0);
        if (st.cx / std::max(nx, 1.0) < -opts.rel_tol)
            st.dinfres = std::max(hresy / std::max(nx, 1.0), hresz / std::max(nx + ns, 1.0));

        if (opts.verbose)
            std::fprintf(stderr,
                         "{\"iter\":%d,\"pcost\":%.9e,\"dcost\":%.9e,\"gap\":%.3e,"
                         "\"pres\":%.3e,\"dres\":%.3e,\"mu\":%.3e,\"tau\":%.3e,\"kap\":%.3e}\n",
                         iter, st.pcost, st.dcost, st.gap, st.pres, st.dres, mu, tau, kap);

        if (!std::isfinite(st.gap) || !std::isfinite(st.pres) || !std::isfinite(st.dres) ||
            !std::isfinite(mu))
            return restore_best_and_finish(iter, "non-finite iterate");

        if (auto ex = check_exit(st, opts.feas_tol, opts.abs_tol, opts.rel_tol))
            return finalize(*ex, st, iter, "");

        const bool pres_blowup = st.pres > kSafeguard * std::max(pres_prev, 1e-12) &&
                                 st.pres > 100.0 * opts.feas_tol;
        if (iter > 0 && (pres_blowup || st.gap < 0.0))
            return restore_best_and_finish(iter, "progress safeguard triggered");
        pres_prev = st.pres;
        snapshot_if_better(st);

        if (iter == opts.max_iter)
            return restore_best_and_finish(iter, "iteration limit reached");

        if (!update_scaling(lay, s, z, sc))
            return restore_best_and_finish(iter, "scaling update failed (boundary iterate)");
        if (!kkt.factor(sc))
            return restore_best_and_finish(iter, "KKT factorization failed");

        kkt.solve(rhs1x, b, h, dx1, dy1, dz1);
        const double dtau_denom =
            kap / tau - c.dot(dx1) - (p > 0 ? b.dot(dy1) : 0.0) - h.dot(dz1);

        // Affine direction.
        kkt.solve(rx, -ry, s - rz, dx2, dy2, dz2);
        const double dtauaff =
            (rt - kap + c.dot(dx2) + (p > 0 ? b.dot(dy2) : 0.0) + h.dot(dz2)) / dtau_denom;
        VectorXd dzaff = dz2 + dtauaff * dz1;
        VectorXd W_dzaff = apply_scale(lay, sc, ScaleOp::W, dzaff);
        VectorXd dsaff_by_W = -W_dzaff - sc.lambda;
        const double dkapaff = -kap - (kap / tau) * dtauaff;
        const double alpha_aff =
            line_search(lay, sc, dsaff_by_W, W_dzaff, tau, dtauaff, kap, dkapaff, 1.0);

        const double sigma =
            std::clamp(std::pow(1.0 - alpha_aff, 3.0), kSigmaMin, kSigmaMax);

        // Combined direction.
        VectorXd ds_comb = jprod(lay, sc.lambda, sc.lambda) + jprod(lay, dsaff_by_W, W_dzaff);
        ds_comb -= sigma * mu * e;
        VectorXd lam_div_ds = jdiv_lambda(lay, sc, ds_comb);
        VectorXd bz2 =
            -(1.0 - sigma) * rz + apply_scale(lay, sc, ScaleOp::Wt, lam_div_ds);
        kkt.solve((1.0 - sigma) * rx, -(1.0 - sigma) * ry, bz2, dx2, dy2, dz2);
        const double bkap = kap * tau + dkapaff * dtauaff - sigma * mu;
        const double dtau = ((1.0 - sigma) * rt - bkap / tau + c.dot(dx2) +
                             (p > 0 ? b.dot(dy2) : 0.0) + h.dot(dz2)) /
                            dtau_denom;
        dx2 += dtau * dx1;
        if (p > 0) dy2 += dtau * dy1;
        dz2 += dtau * dz1;
        VectorXd W_dz = apply_scale(lay, sc, ScaleOp::W, dz2);
        VectorXd ds_by_W = -(lam_div_ds + W_dz);
        const double dkap = -(bkap + kap * dtau) / tau;

        if (!dx2.allFinite() || !dz2.allFinite() || (p > 0 && !dy2.allFinite()) ||
            !ds_by_W.allFinite() || !std::isfinite(dtau) || !std::isfinite(dkap))
            return restore_best_and_finish(iter, "non-finite search direction");

        double alpha =
            line_search(lay, sc, ds_by_W, W_dz, tau, dtau, kap, dkap, 1.0) * kGammaStep;
        if (alpha <= kStepMin) {
            if (++tiny_steps >= 2)
                return restore_best_and_finish(iter, "step size collapsed");
        } else {
            tiny_steps = 0;
        }

        VectorXd ds = apply_scale(lay, sc, ScaleOp::Wt, ds_by_W);
        x += alpha * dx2;
        if (p > 0) y += alpha * dy2;
        z += alpha * dz2;
        s += alpha * ds;
        kap += alpha * dkap;
        tau += alpha * dtau;
        if (tau <= 0.0 || kap <= 0.0)
            return restore_best_and_finish(iter, "tau or kappa left the positive ray");
    }
    // Unreachable: loop exits through finalize paths.
    return res;
}

// ---------------------------------------------------------------------------
// Hermitian modeling layer
// ---------------------------------------------------------------------------

namespace {

// Orthonormal Hermitian basis, fixed enumeration: diagonal units first, then
// for each pair i<j (row-major) the symmetric and antisymmetric elements.
CMatrix herm_basis_elem(int m, int k) {
    CMatrix H = CMatrix::Zero(m, m);
    if (k < m) {
        H(k, k) = 1.0;
        return H;
    }
    int t = k - m;
    const int pair = t / 2;
    const bool anti = (t % 2) == 1;
    int idx = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++idx)
            if (idx == pair) {
                const double r = 1.0 / kSqrt2;
                if (!anti) {
                    H(i, j) = r;
                    H(j, i) = r;
                } else {
                    H(i, j) = cx(0.0, r);
                    H(j, i) = cx(0.0, -r);
                }
                return H;
            }
    throw InvalidDimensions("herm_basis_elem: index out of range");
}

Eigen::MatrixXd realify(const CMatrix &H) {
    const int m = static_cast<int>(H.rows());
    Eigen::MatrixXd R(2 * m, 2 * m);
    R.topLeftCorner(m, m) = H.real();
    R.bottomRightCorner(m, m) = H.real();
    R.topRightCorner(m, m) = -H.imag();
    R.bottomLeftCorner(m, m) = H.imag();
    return R;
}

double herm_inner(const CMatrix &a, const CMatrix &b) {
    return (a.adjoint() * b).trace().real();
}

}  // namespace

int SdpProblem::add_psd_block(const std::string &name, int side) {
    if (side <= 0) throw InvalidDimensions("add_psd_block: side must be positive");
    blocks_.push_back({name, side, BlockKind::PsdHermitian});
    return static_cast<int>(blocks_.size()) - 1;
}

int SdpProblem::add_scalar_block(const std::string &name) {
    blocks_.push_back({name, 1, BlockKind::FreeScalar});
    return static_cast<int>(blocks_.size()) - 1;
}

void SdpProblem::set_objective(Sense sense, ObjectiveFn f) {
    sense_ = sense;
    obj_ = std::move(f);
}

void SdpProblem::add_eq(LinMapFn map, CMatrix rhs) {
    if (!is_hermitian(rhs)) throw NotHermitian("add_eq: right-hand side not Hermitian");
    eqs_.push_back({std::move(map), std::move(rhs)});
}

void SdpProblem::add_leq(LinMapFn map, CMatrix rhs) {
    if (!is_hermitian(rhs)) throw NotHermitian("add_leq: right-hand side not Hermitian");
    leqs_.push_back({std::move(map), std::move(rhs)});
}

SdpSolution solve_sdp(const SdpProblem &problem, const SdpOptions &opts) {
    const auto &blocks = problem.blocks();
    if (blocks.empty()) throw InvalidDimensions("solve_sdp: no variable blocks");
    if (!problem.objective()) throw Error("solve_sdp: objective not set");

    // Coordinate layout over blocks.
    std::vector<int> coord_off(blocks.size()), coord_dim(blocks.size());
    int n = 0;
    for (size_t bidx = 0; bidx < blocks.size(); ++bidx) {
        coord_off[bidx] = n;
        coord_dim[bidx] =
            blocks[bidx].kind == BlockKind::PsdHermitian ? blocks[bidx].side * blocks[bidx].side
                                                         : 1;
        n += coord_dim[bidx];
    }

    auto zero_blocks = [&]() {
        BlockValues v;
        for (const auto &bl : blocks) v.push_back(CMatrix::Zero(bl.side, bl.side));
        return v;
    };
    auto coord_blocks = [&](int j) {
        BlockValues v = zero_blocks();
        for (size_t bidx = 0; bidx < blocks.size(); ++bidx)
            if (j >= coord_off[bidx] && j < coord_off[bidx] + coord_dim[bidx]) {
                if (blocks[bidx].kind == BlockKind::PsdHermitian)
                    v[bidx] = herm_basis_elem(blocks[bidx].side, j - coord_off[bidx]);
                else
                    v[bidx](0, 0) = 1.0;
            }
        return v;
    };

    // Objective probing (affine allowed; the constant shifts the reported value).
    const BlockValues zval = zero_blocks();
    const double obj0 = problem.objective()(zval);
    VectorXd cvec(n);
    for (int j = 0; j < n; ++j) cvec(j) = problem.objective()(coord_blocks(j)) - obj0;
    const bool maximize = problem.sense() == Sense::Max;
    if (maximize) cvec = -cvec;

    // Probe constraint maps once, cache the coefficient matrices.
    struct Compiled {
        CMatrix rhs_eff;
        std::vector<CMatrix> coeff;  // per coordinate
        int side;
    };
    auto compile = [&](const SdpProblem::Constraint &con, const char *what) {
        Compiled cc;
        CMatrix at0 = con.map(zval);
        cc.side = static_cast<int>(at0.rows());
        if (at0.rows() != at0.cols() || con.rhs.rows() != at0.rows())
            throw InvalidDimensions(std::string(what) + ": output/rhs side mismatch");
        cc.rhs_eff = con.rhs - at0;
        cc.coeff.reserve(n);
        for (int j = 0; j < n; ++j) {
            CMatrix Mj = con.map(coord_blocks(j)) - at0;
            if (!is_hermitian(Mj, 1e-10))
                throw NotHermitian(std::string(what) + ": map is not Hermiticity-preserving");
            cc.coeff.push_back(std::move(Mj));
        }
        return cc;
    };
    std::vector<Compiled> eqs, leqs;
    for (const auto &e : problem.equalities()) eqs.push_back(compile(e, "add_eq"));
    for (const auto &e : problem.inequalities()) leqs.push_back(compile(e, "add_leq"));

    // Equality rows: projections onto the Hermitian basis of the output side.
    int p = 0;
    for (const auto &e : eqs) p += e.side * e.side;
    MatrixXd A(p, n);
    VectorXd b(p);
    {
        int row = 0;
        for (const auto &e : eqs) {
            const int mo = e.side;
            for (int k = 0; k < mo * mo; ++k, ++row) {
                CMatrix Hk = herm_basis_elem(mo, k);
                for (int j = 0; j < n; ++j) A(row, j) = herm_inner(Hk, e.coeff[j]);
                b(row) = herm_inner(Hk, e.rhs_eff);
            }
        }
    }

    // Cone rows: orthant (side-1 inequalities), PSD variable cones, matrix
    // inequalities, realified.
    ConeDims dims;
    std::vector<const Compiled *> scalar_ineqs, matrix_ineqs;
    for (const auto &e : leqs) (e.side == 1 ? scalar_ineqs : matrix_ineqs).push_back(&e);
    dims.l = static_cast<int>(scalar_ineqs.size());
    std::vector<int> psd_var_blocks;
    for (size_t bidx = 0; bidx < blocks.size(); ++bidx)
        if (blocks[bidx].kind == BlockKind::PsdHermitian) {
            psd_var_blocks.push_back(static_cast<int>(bidx));
            dims.q.push_back(2 * blocks[bidx].side);
        }
    for (const auto *e : matrix_ineqs) dims.q.push_back(2 * e->side);

    int mtot = dims.l;
    for (int qi : dims.q) mtot += svec_dim(qi);
    MatrixXd G = MatrixXd::Zero(mtot, n);
    VectorXd h = VectorXd::Zero(mtot);
    {
        int row = 0;
        for (const auto *e : scalar_ineqs) {
            for (int j = 0; j < n; ++j) G(row, j) = e->coeff[j](0, 0).real();
            h(row) = e->rhs_eff(0, 0).real();
            ++row;
        }
        for (int bidx : psd_var_blocks) {
            const int side = blocks[bidx].side;
            const int sd = svec_dim(2 * side);
            for (int k = 0; k < side * side; ++k)
                G.col(coord_off[bidx] + k).segment(row, sd) =
                    -svec_of(realify(herm_basis_elem(side, k)));
            row += sd;
        }
        for (const auto *e : matrix_ineqs) {
            const int sd = svec_dim(2 * e->side);
            for (int j = 0; j < n; ++j) G.col(j).segment(row, sd) = svec_of(realify(e->coeff[j]));
            h.segment(row, sd) = svec_of(realify(e->rhs_eff));
            row += sd;
        }
    }

    ConeOptions copts;
    copts.feas_tol = opts.feas_tol;
    copts.abs_tol = opts.gap_tol;
    copts.rel_tol = opts.gap_tol;
    copts.max_iter = opts.max_iter;
    copts.verbose = opts.verbose;
    ConeResult cr = solve_cone_lp(cvec, G, h, dims, A, b, copts);

    SdpSolution sol;
    sol.iterations = cr.iters;
    sol.note = cr.note;
    switch (cr.status) {
        case ConeStatus::Optimal: sol.status = SdpStatus::Optimal; break;
        case ConeStatus::PrimalInfeasible: sol.status = SdpStatus::Infeasible; break;
        case ConeStatus::DualInfeasible: sol.status = SdpStatus::Unbounded; break;
        case ConeStatus::NumericalFailure: sol.status = SdpStatus::NumericalFailure; break;
    }
    const double flip = maximize ? -1.0 : 1.0;
    sol.objective = flip * cr.pcost + obj0;
    sol.dual_objective = flip * cr.dcost + obj0;
    sol.gap = std::abs(cr.pcost - cr.dcost);
    for (size_t bidx = 0; bidx < blocks.size(); ++bidx) {
        CMatrix X = CMatrix::Zero(blocks[bidx].side, blocks[bidx].side);
        for (int k = 0; k < coord_dim[bidx]; ++k)
            X += cr.x(coord_off[bidx] + k) * herm_basis_elem(blocks[bidx].side, k);
        sol.blocks.push_back(std::move(X));
    }
    return sol;
}

}  // namespace neq
