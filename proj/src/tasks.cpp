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

#include "neq/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "neq/errors.hpp"

namespace neq {

namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double out = 1.0;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return std::round(out);
}

double multinom(int k, const std::vector<int> &n) {
    double out = 1.0;
    int rem = k;
    for (int nx : n) {
        out *= binom(rem, nx);
        rem -= nx;
    }
    return out;
}

std::map<std::vector<int>, int> occ_index(const std::vector<std::vector<int>> &occ) {
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < static_cast<int>(occ.size()); ++i) idx[occ[i]] = i;
    return idx;
}

// Pure-state performance operator rho^T (x) sigma from kets.
CMatrix pure_perf_op(const CVector &in, const CVector &out) {
    return kron(proj(in.conjugate()), proj(out));
}

CVector basis_ket(int i, int d) {
    CVector v = CVector::Zero(d);
    v(i) = 1.0;
    return v;
}

CVector equator_ket(int j, int k, double theta, int d) {
    CVector v = CVector::Zero(d);
    v(j) = 1.0 / std::sqrt(2.0);
    v(k) = std::polar(1.0 / std::sqrt(2.0), theta);
    return v;
}

// Qubit-style pure samples: basis states plus `samples` phases on each
// two-level equator. For d = 2 this is the basis + equator family whose
// worst case provably matches the full one (phase-covariant reduction).
std::vector<CVector> sample_states(int d, int samples) {
    std::vector<CVector> states;
    for (int x = 0; x < d; ++x) states.push_back(basis_ket(x, d));
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k)
            for (int t = 0; t < samples; ++t)
                states.push_back(equator_ket(j, k, 2.0 * std::numbers::pi * t / samples, d));
    return states;
}

void validate_task(const Task &t) {
    const int dA = t.dims.d_A, dB = t.dims.d_B;
    if (t.gamma_A.rows() != dA || t.gamma_B.rows() != dB)
        throw InvalidDimensions(t.label + ": reference dimension mismatch");
    const CMatrix &pi = t.input_projector;
    if (pi.rows() != dA) throw InvalidDimensions(t.label + ": projector dimension mismatch");
    if ((pi * pi - pi).cwiseAbs().maxCoeff() > 1e-12)
        throw InvalidProjector(t.label + ": input projector is not idempotent");
    if ((pi * t.gamma_A - t.gamma_A * pi).cwiseAbs().maxCoeff() > 1e-12)
        throw InvalidProjector(t.label + ": input projector does not commute with Gamma_A");
    CMatrix out_of_pi = identity(dA) - pi;
    auto check_op = [&](const CMatrix &om) {
        if (om.rows() != static_cast<long>(dA) * dB)
            throw InvalidDimensions(t.label + ": performance operator side mismatch");
        if (lambda_min(om) < -1e-12 * std::max(1.0, lambda_max(om)))
            throw NotPsd(t.label + ": performance operator is not PSD");
        CMatrix marg = partial_trace(om, t.dims, Sys::B);
        if ((out_of_pi * marg).trace().real() > kSupportTol * std::max(1.0, marg.trace().real()))
            throw SupportError(t.label + ": performance operator leaves the input projector");
    };
    if (t.perf_ops.empty() && !t.covariant_average) throw Error(t.label + ": empty task");
    for (const CMatrix &om : t.perf_ops) check_op(om);
    if (t.covariant_average) check_op(*t.covariant_average);
}

}  // namespace

int sym_dim(int k, int d) { return static_cast<int>(binom(k + d - 1, d - 1)); }

std::vector<std::vector<int>> occupations(int k, int d) {
    if (k < 0 || d < 1) throw OutOfRange("occupations: need k >= 0, d >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d, 0);
    // First coordinate descending, recursing on the tail.
    std::function<void(int, int)> fill = [&](int pos, int rem) {
        if (pos == d - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int n = rem; n >= 0; --n) {
            cur[pos] = n;
            fill(pos + 1, rem - n);
        }
    };
    fill(0, k);
    return out;
}

CVector sym_product_state(const CVector &psi, int k) {
    const int d = static_cast<int>(psi.size());
    auto occ = occupations(k, d);
    CVector out(occ.size());
    for (int i = 0; i < static_cast<int>(occ.size()); ++i) {
        cx amp = std::sqrt(multinom(k, occ[i]));
        for (int x = 0; x < d; ++x)
            for (int r = 0; r < occ[i][x]; ++r) amp *= psi(x);
        out(i) = amp;
    }
    return out;
}

CMatrix sym_split_isometry(int n1, int n2, int d) {
    auto occ_m = occupations(n1 + n2, d);
    auto occ_a = occupations(n1, d);
    auto occ_b = occupations(n2, d);
    auto idx_m = occ_index(occ_m);
    const int db = static_cast<int>(occ_b.size());
    CMatrix s = CMatrix::Zero(static_cast<long>(occ_a.size()) * db, occ_m.size());
    const double norm = binom(n1 + n2, n1);
    for (int ia = 0; ia < static_cast<int>(occ_a.size()); ++ia)
        for (int ib = 0; ib < db; ++ib) {
            std::vector<int> m(d);
            for (int x = 0; x < d; ++x) m[x] = occ_a[ia][x] + occ_b[ib][x];
            double w = 1.0;
            for (int x = 0; x < d; ++x) w *= binom(m[x], occ_a[ia][x]);
            s(ia * db + ib, idx_m.at(m)) = std::sqrt(w / norm);
        }
    return s;
}

std::vector<double> sym_energies(const Hamiltonian &h_single, int k) {
    auto occ = occupations(k, h_single.dim());
    std::vector<double> e(occ.size());
    for (int i = 0; i < static_cast<int>(occ.size()); ++i) {
        double acc = 0.0;
        for (int x = 0; x < h_single.dim(); ++x) acc += occ[i][x] * h_single.energies[x];
        e[i] = acc;
    }
    return e;
}

CMatrix sym_gibbs_projected(const Hamiltonian &h_single, double beta, int k) {
    auto occ = occupations(k, h_single.dim());
    GibbsContext one = make_context(beta, h_single, h_single);
    CMatrix g = CMatrix::Zero(occ.size(), occ.size());
    for (int i = 0; i < static_cast<int>(occ.size()); ++i) {
        double w = 1.0;
        for (int x = 0; x < h_single.dim(); ++x)
            for (int r = 0; r < occ[i][x]; ++r) w *= one.g_A(x);
        g(i, i) = w;
    }
    return g;
}

Task classical_task(const std::vector<int> &f, const GibbsContext &ctx) {
    const int dA = ctx.d_A(), dB = ctx.d_B();
    if (static_cast<int>(f.size()) != dA)
        throw InvalidDimensions("classical_task: table size must equal d_A");
    std::ostringstream label;
    label << "classical;table=";
    for (int x = 0; x < dA; ++x) {
        if (f[x] < 0 || f[x] >= dB)
            throw InvalidFunction("classical_task: f(" + std::to_string(x) + ") outside d_B");
        label << (x ? "," : "") << f[x];
    }
    Task t;
    t.label = label.str();
    t.dims = ctx.dims();
    t.ctx = ctx;
    for (int x = 0; x < dA; ++x)
        t.perf_ops.push_back(kron(basis_proj(x, dA), basis_proj(f[x], dB)));
    t.input_projector = identity(dA);
    t.gamma_A = ctx.gamma_A();
    t.gamma_B = ctx.gamma_B();
    t.diagonal = true;
    t.eb_exact = true;  // the ideal M_f is measure-and-prepare
    validate_task(t);
    return t;
}

Task erasure_task(int d, const GibbsContext &ctx) {
    if (d < 2) throw OutOfRange("erasure_task: need d >= 2");
    if (ctx.d_A() != d) throw InvalidDimensions("erasure_task: context d_A mismatch");
    Task t;
    t.label = "erasure;d=" + std::to_string(d);
    t.dims = ctx.dims();
    t.ctx = ctx;
    // Basis family. Worst case over all pure inputs reduces to it: a diagonal
    // phase twirl on A leaves the cost constraints invariant and makes
    // <0|M(psi)|0> an average of the basis values.
    for (int x = 0; x < d; ++x)
        t.perf_ops.push_back(kron(basis_proj(x, d), basis_proj(0, ctx.d_B())));
    t.input_projector = identity(d);
    t.gamma_A = ctx.gamma_A();
    t.gamma_B = ctx.gamma_B();
    t.diagonal = true;
    t.eb_exact = true;  // the achieving channel is a constant preparation
    if (ctx.h_A.degenerate()) {
        CMatrix avg = kron(identity(d) / static_cast<double>(d), basis_proj(0, ctx.d_B()));
        t.covariant_average = avg;
    }
    validate_task(t);
    return t;
}

Task storage_task(int d, const GibbsContext &ctx, int equator_samples) {
    if (d < 2) throw OutOfRange("storage_task: need d >= 2");
    if (equator_samples < 3) throw OutOfRange("storage_task: need equator_samples >= 3");
    if (ctx.d_A() != d || ctx.d_B() != d)
        throw InvalidDimensions("storage_task: context must be d x d");
    Task t;
    t.label = "storage;d=" + std::to_string(d) + ";samples=" + std::to_string(equator_samples);
    t.dims = ctx.dims();
    t.ctx = ctx;
    for (const CVector &psi : sample_states(d, equator_samples))
        t.perf_ops.push_back(pure_perf_op(psi, psi));
    t.input_projector = identity(d);
    t.gamma_A = ctx.gamma_A();
    t.gamma_B = ctx.gamma_B();
    if (ctx.h_A.degenerate() && ctx.h_B.degenerate()) {
        CMatrix swap_op = CMatrix::Zero(d * d, d * d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) swap_op(b * d + a, a * d + b) = 1.0;
        CMatrix p_plus = (identity(d * d) + swap_op) / 2.0;
        // Schur average of psi^T (x) psi.
        t.covariant_average =
            partial_transpose(p_plus, {d, d}, Sys::A) * (2.0 / (d * (d + 1.0)));
    }
    t.bounds_only = d > 2;  // beyond qubits no finite reduction is proven
    t.eb_exact = d == 2;
    validate_task(t);
    return t;
}

Task transposition_task(int d, const GibbsContext &ctx, int equator_samples) {
    Task t = storage_task(d, ctx, equator_samples);
    t.label = "transpose;d=" + std::to_string(d) + ";samples=" + std::to_string(equator_samples);
    for (CMatrix &om : t.perf_ops) om = partial_transpose(om, t.dims, Sys::B);
    if (t.covariant_average)
        t.covariant_average = partial_transpose(*t.covariant_average, t.dims, Sys::B);
    validate_task(t);
    return t;
}

Task cloning_task(const CloningSpec &spec, const GibbsContext &ctx, CloningVariant variant) {
    if (spec.n < 1 || spec.m < spec.n || spec.d < 2)
        throw OutOfRange("cloning_task: need 1 <= n <= m, d >= 2");
    if (ctx.d_A() != spec.d) throw InvalidDimensions("cloning_task: context d_A mismatch");
    const int d_in = sym_dim(spec.n, spec.d);
    const int d_out = sym_dim(spec.m, spec.d);
    if (d_in * d_out > 64) throw TooLarge("cloning_task: Choi side exceeds 64");

    Task t;
    t.dims = {d_in, d_out};
    t.ctx = ctx;
    t.input_projector = identity(d_in);
    t.gamma_A = sym_gibbs_projected(ctx.h_A, ctx.beta, spec.n);
    t.gamma_B = sym_gibbs_projected(ctx.h_A, ctx.beta, spec.m);
    std::string params = ";n=" + std::to_string(spec.n) + ";m=" + std::to_string(spec.m) +
                         ";d=" + std::to_string(spec.d);

    if (variant == CloningVariant::Classical) {
        t.label = "cloning-classical" + params;
        auto occ_in = occ_index(occupations(spec.n, spec.d));
        auto occ_out = occ_index(occupations(spec.m, spec.d));
        for (int x = 0; x < spec.d; ++x) {
            std::vector<int> na(spec.d, 0), nb(spec.d, 0);
            na[x] = spec.n;
            nb[x] = spec.m;
            t.perf_ops.push_back(
                kron(basis_proj(occ_in.at(na), d_in), basis_proj(occ_out.at(nb), d_out)));
        }
        t.diagonal = true;
        t.eb_exact = true;
        validate_task(t);
        return t;
    }

    t.label = "cloning" + params;
    if (ctx.h_A.degenerate()) {
        // Haar average of (psi^n)^T (x) psi^m: the joint symmetric projector
        // compressed into Sym^n (x) Sym^m, partially transposed on the input.
        CMatrix s = sym_split_isometry(spec.n, spec.m, spec.d);
        CMatrix joint = s * dagger(s);
        t.covariant_average =
            partial_transpose(joint, t.dims, Sys::A) / sym_dim(spec.n + spec.m, spec.d);
        t.perf_ops.push_back(*t.covariant_average);
        t.eb_exact = true;
    } else {
        // Finite sample family only; the full-group twirl does not preserve
        // the Gibbs constraints, so SDP values are bounds.
        for (const CVector &psi : sample_states(spec.d, 8))
            t.perf_ops.push_back(
                pure_perf_op(sym_product_state(psi, spec.n), sym_product_state(psi, spec.m)));
        t.bounds_only = true;
    }
    validate_task(t);
    return t;
}

Task derived_task(const Task &t, DerivedKind kind) {
    Task out = t;
    if (kind == DerivedKind::Transposed) {
        out.label = "T(" + t.label + ")";
        for (CMatrix &om : out.perf_ops) om = transpose_perf_op(om, t.dims);
        if (out.covariant_average)
            out.covariant_average = transpose_perf_op(*out.covariant_average, t.dims);
        validate_task(out);
        return out;
    }
    out.label = "rev(" + t.label + ")";
    out.dims = {t.dims.d_B, t.dims.d_A};
    out.ctx = t.ctx.swapped();
    out.gamma_A = t.gamma_B;
    out.gamma_B = t.gamma_A;
    out.input_projector = identity(t.dims.d_B);
    for (CMatrix &om : out.perf_ops) om = time_reverse_with(om, t.gamma_A, t.gamma_B, t.dims);
    if (out.covariant_average)
        out.covariant_average = time_reverse_with(*out.covariant_average, t.gamma_A, t.gamma_B, t.dims);
    validate_task(out);
    return out;
}

nlohmann::json task_to_json(const Task &t) {
    nlohmann::json j;
    j["label"] = t.label;
    j["dims"] = {{"d_A", t.dims.d_A}, {"d_B", t.dims.d_B}};
    j["ctx"] = context_to_json(t.ctx);
    j["perf_ops"] = nlohmann::json::array();
    for (const CMatrix &om : t.perf_ops) j["perf_ops"].push_back(mat_to_json(om));
    j["input_projector"] = mat_to_json(t.input_projector);
    j["covariant_average"] =
        t.covariant_average ? mat_to_json(*t.covariant_average) : nlohmann::json();
    j["gamma_A"] = mat_to_json(t.gamma_A);
    j["gamma_B"] = mat_to_json(t.gamma_B);
    j["diagonal"] = t.diagonal;
    j["bounds_only"] = t.bounds_only;
    j["eb_exact"] = t.eb_exact;
    return j;
}

Task task_from_json(const nlohmann::json &j) {
    Task t;
    t.label = j.at("label").get<std::string>();
    t.dims = {j.at("dims").at("d_A").get<int>(), j.at("dims").at("d_B").get<int>()};
    t.ctx = context_from_json(j.at("ctx"));
    for (const auto &jm : j.at("perf_ops")) t.perf_ops.push_back(mat_from_json(jm));
    t.input_projector = mat_from_json(j.at("input_projector"));
    if (!j.at("covariant_average").is_null())
        t.covariant_average = mat_from_json(j.at("covariant_average"));
    t.gamma_A = j.contains("gamma_A") ? mat_from_json(j.at("gamma_A")) : t.ctx.gamma_A();
    t.gamma_B = j.contains("gamma_B") ? mat_from_json(j.at("gamma_B")) : t.ctx.gamma_B();
    t.diagonal = j.value("diagonal", false);
    t.bounds_only = j.value("bounds_only", false);
    t.eb_exact = j.value("eb_exact", false);
    validate_task(t);
    return t;
}

Task task_from_uri(const std::string &uri, const GibbsContext &ctx) {
    const std::string prefix = "builtin:";
    if (uri.rfind(prefix, 0) != 0)
        throw ParseError("task_from_uri: expected a builtin: URI, got \"" + uri + "\"");
    std::istringstream ss(uri.substr(prefix.size()));
    std::string name;
    std::getline(ss, name, ';');
    std::map<std::string, std::string> kv;
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("task_from_uri: malformed parameter \"" + item + "\"");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    auto get_int = [&](const std::string &key, int fallback) {
        auto it = kv.find(key);
        if (it == kv.end()) {
            if (fallback < 0) throw ParseError("task_from_uri: missing parameter " + key);
            return fallback;
        }
        try {
            return std::stoi(it->second);
        } catch (const std::exception &) {
            throw ParseError("task_from_uri: bad integer for " + key);
        }
    };

    if (name == "cloning")
        return cloning_task({get_int("n", 1), get_int("m", 2), get_int("d", 2)}, ctx,
                            CloningVariant::Quantum);
    if (name == "erasure") return erasure_task(get_int("d", 2), ctx);
    if (name == "storage") return storage_task(get_int("d", 2), ctx, get_int("samples", 8));
    if (name == "transpose")
        return transposition_task(get_int("d", 2), ctx, get_int("samples", 8));
    if (name == "classical") {
        auto it = kv.find("table");
        if (it == kv.end()) throw ParseError("task_from_uri: classical needs table=");
        std::vector<int> f;
        std::istringstream ts(it->second);
        std::string tok;
        while (std::getline(ts, tok, ',')) {
            try {
                f.push_back(std::stoi(tok));
            } catch (const std::exception &) {
                throw ParseError("task_from_uri: bad table entry \"" + tok + "\"");
            }
        }
        return classical_task(f, ctx);
    }
    throw ParseError("task_from_uri: unknown builtin task \"" + name + "\"");
}

}  // namespace neq
