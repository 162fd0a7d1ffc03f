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

#include "neq/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace neq {

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

CMatrix dagger(const CMatrix &m) { return m.adjoint(); }

CMatrix hermitize(const CMatrix &m) { return 0.5 * (m + m.adjoint()); }

bool is_hermitian(const CMatrix &m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

bool is_psd(const CMatrix &m, double tol) {
    if (!is_hermitian(m, tol)) return false;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(m));
    return es.eigenvalues().minCoeff() >= -tol * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
}

void check_finite(const CMatrix &m) {
    if (!m.allFinite()) throw Error("matrix contains NaN or Inf entries");
}

CMatrix identity(int d) { return CMatrix::Identity(d, d); }

CMatrix basis_proj(int i, int d) {
    CMatrix out = CMatrix::Zero(d, d);
    out(i, i) = 1.0;
    return out;
}

CMatrix ket_bra(int i, int j, int d) {
    CMatrix out = CMatrix::Zero(d, d);
    out(i, j) = 1.0;
    return out;
}

CMatrix proj(const CVector &psi) {
    CMatrix out = psi * psi.adjoint();
    return out;
}

static void check_square(const CMatrix &m, int d, const char *op) {
    if (m.rows() != m.cols() || m.rows() != d)
        throw InvalidDimensions(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " + std::to_string(d) + "x" +
                                std::to_string(d));
}

CMatrix partial_trace(const CMatrix &m, BipartiteDims dims, Sys which) {
    const int dA = dims.d_A, dB = dims.d_B;
    check_square(m, dA * dB, "partial_trace");
    if (which == Sys::A) {
        CMatrix out = CMatrix::Zero(dB, dB);
        for (int b = 0; b < dB; ++b)
            for (int bp = 0; bp < dB; ++bp)
                for (int a = 0; a < dA; ++a) out(b, bp) += m(a * dB + b, a * dB + bp);
        return out;
    }
    CMatrix out = CMatrix::Zero(dA, dA);
    for (int a = 0; a < dA; ++a)
        for (int ap = 0; ap < dA; ++ap)
            for (int b = 0; b < dB; ++b) out(a, ap) += m(a * dB + b, ap * dB + b);
    return out;
}

CMatrix partial_transpose(const CMatrix &m, BipartiteDims dims, Sys which) {
    const int dA = dims.d_A, dB = dims.d_B;
    check_square(m, dA * dB, "partial_transpose");
    CMatrix out(dA * dB, dA * dB);
    for (int a = 0; a < dA; ++a)
        for (int b = 0; b < dB; ++b)
            for (int ap = 0; ap < dA; ++ap)
                for (int bp = 0; bp < dB; ++bp) {
                    if (which == Sys::A)
                        out(a * dB + b, ap * dB + bp) = m(ap * dB + b, a * dB + bp);
                    else
                        out(a * dB + b, ap * dB + bp) = m(a * dB + bp, ap * dB + b);
                }
    return out;
}

CMatrix swap_sides(const CMatrix &m, BipartiteDims dims) {
    const int dA = dims.d_A, dB = dims.d_B;
    check_square(m, dA * dB, "swap_sides");
    CMatrix out(dB * dA, dB * dA);
    for (int a = 0; a < dA; ++a)
        for (int b = 0; b < dB; ++b)
            for (int ap = 0; ap < dA; ++ap)
                for (int bp = 0; bp < dB; ++bp)
                    out(b * dA + a, bp * dA + ap) = m(a * dB + b, ap * dB + bp);
    return out;
}

namespace {

std::vector<long> strides_of(const std::vector<int> &dims) {
    std::vector<long> s(dims.size());
    long acc = 1;
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        s[k] = acc;
        acc *= dims[k];
    }
    return s;
}

}  // namespace

CMatrix partial_trace_multi(const CMatrix &m, const std::vector<int> &dims,
                            const std::vector<int> &systems) {
    long total = 1;
    for (int d : dims) total *= d;
    check_square(m, static_cast<int>(total), "partial_trace_multi");
    std::vector<bool> traced(dims.size(), false);
    for (int s : systems) {
        if (s < 0 || s >= static_cast<int>(dims.size()))
            throw InvalidDimensions("partial_trace_multi: bad system index");
        traced[s] = true;
    }
    std::vector<int> kept;
    for (size_t k = 0; k < dims.size(); ++k)
        if (!traced[k]) kept.push_back(static_cast<int>(k));
    auto st = strides_of(dims);
    long dk = 1, dt = 1;
    for (size_t k = 0; k < dims.size(); ++k) (traced[k] ? dt : dk) *= dims[k];

    // Map a (kept-index, traced-index) pair to the full row index.
    auto full_index = [&](long ik, long it) {
        long idx = 0;
        long rk = ik, rt = it;
        for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
            if (traced[k]) {
                idx += (rt % dims[k]) * st[k];
                rt /= dims[k];
            } else {
                idx += (rk % dims[k]) * st[k];
                rk /= dims[k];
            }
        }
        return idx;
    };

    CMatrix out = CMatrix::Zero(dk, dk);
    for (long i = 0; i < dk; ++i)
        for (long j = 0; j < dk; ++j) {
            cx acc = 0.0;
            for (long t = 0; t < dt; ++t) acc += m(full_index(i, t), full_index(j, t));
            out(i, j) = acc;
        }
    return out;
}

CMatrix partial_transpose_multi(const CMatrix &m, const std::vector<int> &dims,
                                const std::vector<int> &systems) {
    long total = 1;
    for (int d : dims) total *= d;
    check_square(m, static_cast<int>(total), "partial_transpose_multi");
    std::vector<bool> flip(dims.size(), false);
    for (int s : systems) {
        if (s < 0 || s >= static_cast<int>(dims.size()))
            throw InvalidDimensions("partial_transpose_multi: bad system index");
        flip[s] = true;
    }
    auto st = strides_of(dims);
    CMatrix out(total, total);
    std::vector<int> ri(dims.size()), ci(dims.size());
    for (long r = 0; r < total; ++r) {
        long rr = r;
        for (size_t k = 0; k < dims.size(); ++k) {
            ri[k] = static_cast<int>(rr / st[k]);
            rr %= st[k];
        }
        for (long c = 0; c < total; ++c) {
            long cc = c;
            for (size_t k = 0; k < dims.size(); ++k) {
                ci[k] = static_cast<int>(cc / st[k]);
                cc %= st[k];
            }
            long sr = 0, sc = 0;
            for (size_t k = 0; k < dims.size(); ++k) {
                int a = ri[k], b = ci[k];
                if (flip[k]) std::swap(a, b);
                sr += a * st[k];
                sc += b * st[k];
            }
            out(r, c) = m(sr, sc);
        }
    }
    return out;
}

EigH eig_herm(const CMatrix &m) {
    if (m.rows() != m.cols()) throw InvalidDimensions("eig_herm: matrix not square");
    check_finite(m);
    if (!is_hermitian(m))
        throw NotHermitian("eig_herm: matrix is not Hermitian within tolerance");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitize(m));
    if (es.info() != Eigen::Success) throw Error("eig_herm: eigensolver failed");
    return EigH{es.eigenvalues(), es.eigenvectors()};
}

CMatrix func_on_support(const CMatrix &m, const std::function<double(double)> &f, double tol) {
    EigH e = eig_herm(m);
    const double lam_max = e.values.cwiseAbs().maxCoeff();
    const double cut = tol * lam_max;
    RealVec fv = RealVec::Zero(e.values.size());
    for (int i = 0; i < e.values.size(); ++i) {
        double lam = e.values(i);
        if (lam < -cut)
            throw NotPsd("func_on_support: negative eigenvalue " + std::to_string(lam));
        fv(i) = (lam > cut) ? f(lam) : 0.0;
    }
    CMatrix out = e.vectors * fv.asDiagonal() * e.vectors.adjoint();
    return hermitize(out);
}

CMatrix sqrt_psd(const CMatrix &m) {
    return func_on_support(m, [](double x) { return std::sqrt(x); });
}

CMatrix inv_sqrt_on_support(const CMatrix &m) {
    return func_on_support(m, [](double x) { return 1.0 / std::sqrt(x); });
}

CMatrix support_projector(const CMatrix &m) {
    return func_on_support(m, [](double) { return 1.0; });
}

double spectral_norm(const CMatrix &m) {
    EigH e = eig_herm(m);
    return e.values.cwiseAbs().maxCoeff();
}

double trace_norm(const CMatrix &m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    return svd.singularValues().sum();
}

double lambda_max(const CMatrix &m) { return eig_herm(m).values.maxCoeff(); }

double lambda_min(const CMatrix &m) { return eig_herm(m).values.minCoeff(); }

nlohmann::json mat_to_json(const CMatrix &m) {
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json rrow = nlohmann::json::array(), irow = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) {
            rrow.push_back(m(i, j).real());
            irow.push_back(m(i, j).imag());
        }
        re.push_back(rrow);
        im.push_back(irow);
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

CMatrix mat_from_json(const nlohmann::json &j) {
    try {
        int rows = j.at("rows").get<int>();
        int cols = j.at("cols").get<int>();
        if (rows <= 0 || cols <= 0) throw ParseError("matrix JSON: nonpositive dimensions");
        const auto &re = j.at("re");
        const auto &im = j.at("im");
        if (static_cast<int>(re.size()) != rows || static_cast<int>(im.size()) != rows)
            throw ParseError("matrix JSON: row count mismatch");
        CMatrix out(rows, cols);
        for (int i = 0; i < rows; ++i) {
            if (static_cast<int>(re[i].size()) != cols || static_cast<int>(im[i].size()) != cols)
                throw ParseError("matrix JSON: column count mismatch");
            for (int jj = 0; jj < cols; ++jj)
                out(i, jj) = cx(re[i][jj].get<double>(), im[i][jj].get<double>());
        }
        check_finite(out);
        return out;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("matrix JSON: ") + e.what());
    }
}

CMatrix random_ginibre(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix out(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out(i, j) = cx(g(rng), g(rng));
    return out;
}

CMatrix random_hermitian(int d, std::mt19937_64 &rng) {
    return hermitize(random_ginibre(d, rng));
}

CMatrix random_psd(int d, std::mt19937_64 &rng) {
    CMatrix g = random_ginibre(d, rng);
    return g * g.adjoint();
}

CMatrix random_density(int d, std::mt19937_64 &rng) {
    CMatrix p = random_psd(d, rng);
    return p / p.trace().real();
}

CVector haar_ket(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVector v(d);
    for (int i = 0; i < d; ++i) v(i) = cx(g(rng), g(rng));
    v.normalize();
    return v;
}

}  // namespace neq
