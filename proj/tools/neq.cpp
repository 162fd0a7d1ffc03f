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

// Command line front end. Exit codes: 0 success, 2 infeasible query,
// 3 numerical failure, 4 bad input.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "neq/cost.hpp"
#include "neq/errors.hpp"
#include "neq/quantum.hpp"
#include "neq/tasks.hpp"
#include "neq/verify.hpp"

namespace {

using namespace neq;

// ---------------------------------------------------------------------------
// Context and task loading.
// ---------------------------------------------------------------------------

struct CtxOpts {
    double beta = 1.0;
    bool degenerate = false;
    std::string energies, energies_b;
};

void add_ctx_opts(CLI::App *cmd, CtxOpts &o) {
    cmd->add_option("--beta", o.beta, "Inverse temperature (k = 1)")
        ->capture_default_str();
    cmd->add_flag("--degenerate", o.degenerate,
                  "Fully degenerate Hamiltonians on both sides");
    cmd->add_option("--energies", o.energies,
                    "Input-side energies, comma separated ascending "
                    "(default: ladder 0,1,...)");
    cmd->add_option("--energies-b", o.energies_b,
                    "Output-side energies when they differ from the input side");
}

std::vector<double> parse_doubles(const std::string &s) {
    std::vector<double> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception &) {
            throw ParseError("bad number \"" + tok + "\" in energy list");
        }
    }
    if (out.empty()) throw ParseError("empty energy list");
    return out;
}

Hamiltonian side_hamiltonian(int d, const CtxOpts &o, const std::string &estr,
                             const char *flag) {
    if (o.degenerate) return degenerate_hamiltonian(d);
    if (!estr.empty()) {
        auto e = parse_doubles(estr);
        if (static_cast<int>(e.size()) != d)
            throw ParseError(std::string(flag) + " needs exactly " +
                             std::to_string(d) + " values");
        return make_hamiltonian(std::move(e));
    }
    std::vector<double> ladder(d);
    std::iota(ladder.begin(), ladder.end(), 0.0);
    return make_hamiltonian(std::move(ladder));
}

GibbsContext context_for(int d_A, int d_B, const CtxOpts &o) {
    Hamiltonian h_A = side_hamiltonian(d_A, o, o.energies, "--energies");
    const std::string &eb = !o.energies_b.empty()
                                ? o.energies_b
                                : (d_B == d_A ? o.energies : std::string());
    Hamiltonian h_B = side_hamiltonian(d_B, o, eb, "--energies-b");
    return make_context(o.beta, std::move(h_A), std::move(h_B));
}

nlohmann::json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string &path, const nlohmann::json &j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << "\n";
}

struct UriParts {
    std::string name;
    std::map<std::string, std::string> kv;
};

UriParts split_uri(const std::string &uri) {
    UriParts u;
    std::istringstream ss(uri.substr(std::string("builtin:").size()));
    std::getline(ss, u.name, ';');
    std::string item;
    while (std::getline(ss, item, ';')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("malformed task parameter \"" + item + "\"");
        u.kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return u;
}

int uri_int(const UriParts &u, const std::string &key, int fallback) {
    auto it = u.kv.find(key);
    if (it == u.kv.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (const std::exception &) {
        throw ParseError("bad integer for " + key + " in task URI");
    }
}

// Builtin URIs carry the dimensions; beta and energies come from the context
// flags. Anything else is read as a task JSON file with the context embedded.
Task load_task(const std::string &spec, const CtxOpts &o, bool ctx_flags_used) {
    if (spec.rfind("builtin:", 0) != 0) {
        if (ctx_flags_used)
            std::cerr << "note: context flags ignored, " << spec
                      << " embeds its own context\n";
        return task_from_json(read_json_file(spec));
    }
    UriParts u = split_uri(spec);
    if (u.name == "classical") {
        auto it = u.kv.find("table");
        if (it == u.kv.end()) throw ParseError("classical task needs table=");
        int d_A = 0, top = 0;
        std::istringstream ts(it->second);
        std::string tok;
        while (std::getline(ts, tok, ',')) {
            try {
                top = std::max(top, std::stoi(tok));
            } catch (const std::exception &) {
                throw ParseError("bad table entry \"" + tok + "\"");
            }
            ++d_A;
        }
        const int d_B = !o.energies_b.empty()
                            ? static_cast<int>(parse_doubles(o.energies_b).size())
                            : top + 1;
        return task_from_uri(spec, context_for(d_A, d_B, o));
    }
    const int d = uri_int(u, "d", 2);
    return task_from_uri(spec, context_for(d, d, o));
}

// ---------------------------------------------------------------------------
// Output helpers.
// ---------------------------------------------------------------------------

const char *method_name(CostMethod m) {
    switch (m) {
        case CostMethod::ClosedForm: return "closed_form";
        case CostMethod::Sdp: return "sdp";
        case CostMethod::BoundOnly: return "bound_only";
    }
    return "?";
}

const char *status_name(CostStatus s) {
    switch (s) {
        case CostStatus::Ok: return "ok";
        case CostStatus::Clamped: return "clamped";
        case CostStatus::Infeasible: return "infeasible";
    }
    return "?";
}

const char *variant_name(CurveVariant v) {
    switch (v) {
        case CurveVariant::Quantum: return "quantum";
        case CurveVariant::Classical: return "classical";
        case CurveVariant::Eb: return "eb";
    }
    return "?";
}

nlohmann::json report_json(const CostReport &r) {
    nlohmann::json j{{"value_bits", r.value_bits},
                     {"method", method_name(r.method)},
                     {"status", status_name(r.status)},
                     {"note", r.note}};
    j["solver_gap"] = r.solver_gap ? nlohmann::json(*r.solver_gap)
                                   : nlohmann::json();
    return j;
}

// Prints the one-line summary and maps Infeasible to exit code 2.
int print_report(const char *what, const CostReport &r, const char *unit) {
    std::printf("%s = %.9f%s  [%s, %s]%s%s\n", what, r.value_bits, unit,
                method_name(r.method), status_name(r.status),
                r.note.empty() ? "" : "  ", r.note.c_str());
    return r.status == CostStatus::Infeasible ? 2 : 0;
}

void maybe_write_witness(const CostReport &r, const std::string &path) {
    if (path.empty()) return;
    if (!r.witness) {
        std::cerr << "note: no witness channel attached, " << path
                  << " not written\n";
        return;
    }
    write_json_file(path,
                    nlohmann::json{{"dims", {r.witness->dims.d_A, r.witness->dims.d_B}},
                                   {"choi", mat_to_json(r.witness->choi)}});
}

std::string curve_csv(const std::vector<TradeoffCurve> &curves) {
    // Solver wiggle below the 6-decimal resolution would otherwise print as
    // "-0.000000".
    auto snap = [](double v) { return std::fabs(v) < 5e-7 ? 0.0 : v; };
    std::string out = "fidelity,cost_bits,lower_bound_bits,variant,status\n";
    char row[160];
    for (const auto &c : curves)
        for (const auto &p : c.points) {
            std::snprintf(row, sizeof row, "%.6f,%.6f,%.6f,%s,%s\n",
                          snap(p.fidelity), snap(p.cost_bits),
                          snap(p.lower_bound_bits), variant_name(c.variant),
                          status_name(p.status));
            out += row;
        }
    return out;
}

nlohmann::json curve_json(const std::string &label,
                          const std::vector<TradeoffCurve> &curves) {
    nlohmann::json jc = nlohmann::json::array();
    for (const auto &c : curves) {
        nlohmann::json pts = nlohmann::json::array();
        for (const auto &p : c.points)
            pts.push_back({{"fidelity", p.fidelity},
                           {"cost_bits", p.cost_bits},
                           {"lower_bound_bits", p.lower_bound_bits},
                           {"status", status_name(p.status)}});
        jc.push_back({{"variant", variant_name(c.variant)},
                      {"kappa", c.kappa},
                      {"f_min", c.f_min},
                      {"f_max", c.f_max},
                      {"c_min", c.c_min},
                      {"note", c.note},
                      {"points", std::move(pts)}});
    }
    return nlohmann::json{{"task", label}, {"curves", std::move(jc)}};
}

void emit_text(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + out_path);
    out << text;
}

std::vector<CurveVariant> parse_variants(const std::string &csv) {
    std::vector<CurveVariant> out;
    std::istringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "quantum")
            out.push_back(CurveVariant::Quantum);
        else if (tok == "classical")
            out.push_back(CurveVariant::Classical);
        else if (tok == "eb")
            out.push_back(CurveVariant::Eb);
        else
            throw ParseError("unknown variant \"" + tok +
                             "\" (expected quantum, classical, eb)");
    }
    if (out.empty()) throw ParseError("no variants requested");
    return out;
}

// ---------------------------------------------------------------------------
// Plot emission.
// ---------------------------------------------------------------------------

struct PlotSeries {
    std::string title;
    std::vector<std::pair<double, double>> xy;
};

std::vector<PlotSeries> plot_series(const std::vector<TradeoffCurve> &curves,
                                    const std::string &prefix) {
    std::vector<PlotSeries> out;
    for (const auto &c : curves) {
        PlotSeries s;
        s.title = prefix + variant_name(c.variant);
        for (const auto &p : c.points)
            if (std::isfinite(p.cost_bits)) s.xy.emplace_back(p.fidelity, p.cost_bits);
        if (!s.xy.empty()) out.push_back(std::move(s));
    }
    return out;
}

struct GnuplotInput {
    std::string csv;
    // (variant column value, legend title)
    std::vector<std::pair<std::string, std::string>> series;
};

void write_gnuplot(const std::string &path, const std::string &title,
                   const std::vector<GnuplotInput> &inputs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << "set datafile separator ','\n"
        << "set xlabel 'fidelity F'\n"
        << "set ylabel 'cost [bits]'\n"
        << "set title '" << title << "'\n"
        << "set key left top\n"
        << "set grid\n"
        << "plot \\\n";
    bool first = true;
    for (const auto &in : inputs)
        for (const auto &[variant, legend] : in.series) {
            if (!first) out << ", \\\n";
            first = false;
            out << "  '" << in.csv << "' using 1:(strcol(4) eq '" << variant
                << "' ? $2 : 1/0) with linespoints title '" << legend << "'";
        }
    out << "\n";
}

void write_svg(const std::string &path, const std::vector<PlotSeries> &series) {
    double xmin = inf(), xmax = -inf(), ymin = inf(), ymax = -inf();
    for (const auto &s : series)
        for (auto [x, y] : s.xy) {
            xmin = std::min(xmin, x), xmax = std::max(xmax, x);
            ymin = std::min(ymin, y), ymax = std::max(ymax, y);
        }
    if (!(xmin <= xmax)) throw ParseError("no finite points to plot");
    if (xmax - xmin < 1e-12) xmin -= 0.5, xmax += 0.5;
    if (ymax - ymin < 1e-12) ymin -= 0.5, ymax += 0.5;
    const double w = 640, h = 440, ml = 70, mr = 20, mt = 20, mb = 50;
    auto X = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto Y = [&](double y) { return h - mb - (y - ymin) / (ymax - ymin) * (h - mt - mb); };
    static const char *colors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                   "#9467bd", "#8c564b", "#e377c2"};
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    char buf[256];
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='"
        << h << "' viewBox='0 0 " << w << " " << h << "'>\n"
        << "<rect width='100%' height='100%' fill='white'/>\n";
    std::snprintf(buf, sizeof buf,
                  "<line x1='%.1f' y1='%.1f' x2='%.1f' y2='%.1f' stroke='black'/>\n",
                  ml, h - mb, w - mr, h - mb);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<line x1='%.1f' y1='%.1f' x2='%.1f' y2='%.1f' stroke='black'/>\n",
                  ml, mt, ml, h - mb);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x='%.1f' y='%.1f' font-size='12' text-anchor='middle'>%.3f</text>\n",
                  ml, h - mb + 16, xmin);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x='%.1f' y='%.1f' font-size='12' text-anchor='middle'>%.3f</text>\n",
                  w - mr, h - mb + 16, xmax);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x='%.1f' y='%.1f' font-size='12' text-anchor='end'>%.3f</text>\n",
                  ml - 6, h - mb + 4, ymin);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x='%.1f' y='%.1f' font-size='12' text-anchor='end'>%.3f</text>\n",
                  ml - 6, mt + 4, ymax);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x='%.1f' y='%.1f' font-size='13' text-anchor='middle'>fidelity F</text>\n",
                  (ml + w - mr) / 2, h - 12);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<text x='16' y='%.1f' font-size='13' text-anchor='middle' "
                  "transform='rotate(-90 16 %.1f)'>cost [bits]</text>\n",
                  (mt + h - mb) / 2, (mt + h - mb) / 2);
    out << buf;
    for (size_t i = 0; i < series.size(); ++i) {
        const char *color = colors[i % 6];
        out << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
        for (auto [x, y] : series[i].xy) {
            std::snprintf(buf, sizeof buf, "%.1f,%.1f ", X(x), Y(y));
            out << buf;
        }
        out << "'/>\n";
        for (auto [x, y] : series[i].xy) {
            std::snprintf(buf, sizeof buf,
                          "<circle cx='%.1f' cy='%.1f' r='2.5' fill='%s'/>\n", X(x),
                          Y(y), color);
            out << buf;
        }
        std::snprintf(buf, sizeof buf,
                      "<text x='%.1f' y='%.1f' font-size='12' fill='%s'>%s</text>\n",
                      ml + 10, mt + 16 + 16 * static_cast<double>(i), color,
                      series[i].title.c_str());
        out << buf;
    }
    out << "</svg>\n";
}

// ---------------------------------------------------------------------------
// Subcommand handlers.
// ---------------------------------------------------------------------------

struct TaskArgs {
    std::string task;
    CtxOpts ctx;
    CLI::App *cmd = nullptr;

    bool ctx_flags_used() const {
        return cmd->count("--beta") || cmd->count("--degenerate") ||
               cmd->count("--energies") || cmd->count("--energies-b");
    }
    Task load() const { return load_task(task, ctx, ctx_flags_used()); }
};

CLI::App *add_task_cmd(CLI::App &app, const char *name, const char *desc,
                       TaskArgs &a) {
    CLI::App *cmd = app.add_subcommand(name, desc);
    cmd->add_option("--task", a.task,
                    "builtin:name;key=val URI or task JSON file")
        ->required();
    add_ctx_opts(cmd, a.ctx);
    a.cmd = cmd;
    return cmd;
}

int run_kappa(const TaskArgs &a, const std::string &json_path,
              const std::string &witness_path) {
    CostReport r = reverse_entropy(a.load());
    if (!json_path.empty()) write_json_file(json_path, report_json(r));
    maybe_write_witness(r, witness_path);
    return print_report("kappa", r, " bits");
}

int run_cost(const TaskArgs &a, double fidelity, const std::string &json_path,
             const std::string &witness_path) {
    CostReport r = cost_of_accuracy(a.load(), fidelity);
    if (!json_path.empty()) write_json_file(json_path, report_json(r));
    maybe_write_witness(r, witness_path);
    return print_report("cost", r, " bits");
}

int run_accuracy(const TaskArgs &a, double cost_bits,
                 const std::string &json_path) {
    CostReport r = accuracy_of_cost(a.load(), cost_bits);
    if (!json_path.empty()) write_json_file(json_path, report_json(r));
    return print_report("accuracy", r, "");
}

int run_curve(const TaskArgs &a, int points, const std::string &variants,
              int jobs, const std::string &out, const std::string &format,
              const std::string &plot) {
    if (plot != "none" && out.empty())
        throw ParseError("--plot needs --out to name the data file");
    if (plot == "gnuplot" && format != "csv")
        throw ParseError("--plot gnuplot reads the csv output");
    Task t = a.load();
    auto curves = scan_curve(t, points, parse_variants(variants), jobs);
    if (format == "json")
        emit_text(curve_json(t.label, curves).dump(2) + "\n", out);
    else
        emit_text(curve_csv(curves), out);
    // With the data on stdout the summaries move to stderr.
    FILE *log = out.empty() ? stderr : stdout;
    for (const auto &c : curves)
        std::fprintf(log, "%s: kappa = %.9f bits, F in [%.9f, %.9f], %zu points%s%s\n",
                     variant_name(c.variant), c.kappa, c.f_min, c.f_max,
                     c.points.size(), c.note.empty() ? "" : ", ", c.note.c_str());
    if (plot != "none") {
        std::string base = out;
        if (auto dot = base.rfind('.'); dot != std::string::npos && dot > 0)
            base.resize(dot);
        if (plot == "gnuplot") {
            GnuplotInput in{out, {}};
            for (const auto &c : curves)
                in.series.emplace_back(variant_name(c.variant), variant_name(c.variant));
            write_gnuplot(base + ".gp", t.label, {in});
            std::printf("wrote %s\n", (base + ".gp").c_str());
        } else {
            write_svg(base + ".svg", plot_series(curves, ""));
            std::printf("wrote %s\n", (base + ".svg").c_str());
        }
    }
    return 0;
}

int run_verify(const std::string &suite, double tol, int jobs,
               const std::string &report_path) {
    verify::VerifyOptions opts;
    opts.tol = tol;
    opts.jobs = jobs;
    std::vector<verify::CheckResult> results;
    if (suite == "all")
        results = verify::run_all(opts);
    else
        results.push_back(verify::run_check(suite, opts));
    int passed = 0;
    for (const auto &r : results) {
        std::printf("[%s] %-20s %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    r.detail.c_str());
        passed += r.pass;
    }
    std::printf("%d/%zu checks passed\n", passed, results.size());
    if (!report_path.empty()) {
        nlohmann::json j = verify::report_to_json(results);
        j["tol"] = tol;
        write_json_file(report_path, j);
    }
    return passed == static_cast<int>(results.size()) ? 0 : 1;
}

int run_figure(int id, const std::string &dir, int points, int jobs,
               const std::string &plot) {
    if (id != 2 && id != 3) throw ParseError("--id must be 2 or 3");
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    GibbsContext ctx =
        make_context(1.0, degenerate_hamiltonian(2), degenerate_hamiltonian(2));

    struct FigureData {
        std::string path;
        std::string legend_prefix;
        std::vector<TradeoffCurve> curves;
    };
    std::vector<FigureData> data;
    if (id == 2) {
        for (int m : {2, 3, 4}) {
            Task t = cloning_task({1, m, 2}, ctx, CloningVariant::Quantum);
            data.push_back({dir + "/fig2_1to" + std::to_string(m) + ".csv",
                            "1->" + std::to_string(m) + " ",
                            scan_curve(t, points,
                                       {CurveVariant::Quantum, CurveVariant::Classical},
                                       jobs)});
        }
    } else {
        Task t = cloning_task({1, 2, 2}, ctx, CloningVariant::Quantum);
        data.push_back({dir + "/fig3.csv", "",
                        scan_curve(t, points,
                                   {CurveVariant::Quantum, CurveVariant::Eb}, jobs)});
    }

    int rows = 0;
    double min_margin = inf();
    for (const auto &f : data) {
        emit_text(curve_csv(f.curves), f.path);
        for (const auto &c : f.curves)
            for (const auto &p : c.points) {
                ++rows;
                min_margin = std::min(min_margin, p.cost_bits - p.lower_bound_bits);
            }
        std::printf("wrote %s\n", f.path.c_str());
    }
    if (!(min_margin >= -1e-6)) {
        std::fprintf(stderr, "error: cost dips %.3e bits below kappa + log2 F\n",
                     -min_margin);
        return 3;
    }
    std::printf("figure %d: %d rows, cost >= kappa + log2 F on every row "
                "(min margin %.3e bits)\n",
                id, rows, min_margin);

    const std::string base = dir + "/fig" + std::to_string(id);
    if (plot == "gnuplot") {
        std::vector<GnuplotInput> inputs;
        for (const auto &f : data) {
            GnuplotInput in{f.path, {}};
            for (const auto &c : f.curves)
                in.series.emplace_back(variant_name(c.variant),
                                       f.legend_prefix + variant_name(c.variant));
            inputs.push_back(std::move(in));
        }
        write_gnuplot(base + ".gp", "figure " + std::to_string(id), inputs);
        std::printf("wrote %s\n", (base + ".gp").c_str());
    } else if (plot == "svg") {
        std::vector<PlotSeries> series;
        for (const auto &f : data)
            for (auto &s : plot_series(f.curves, f.legend_prefix))
                series.push_back(std::move(s));
        write_svg(base + ".svg", series);
        std::printf("wrote %s\n", (base + ".svg").c_str());
    }
    return 0;
}

int run_channel_cost(const std::string &channel_path, const TaskArgs &a,
                     const std::string &projector_path,
                     const std::string &json_path) {
    nlohmann::json cj = read_json_file(channel_path);
    if (!cj.contains("dims") || !cj.contains("choi"))
        throw ParseError(channel_path + ": expected {\"dims\":[d_A,d_B],\"choi\":...}");
    BipartiteDims dims{cj["dims"].at(0).get<int>(), cj["dims"].at(1).get<int>()};
    ChoiChannel ch = make_channel(mat_from_json(cj["choi"]), dims);

    CostReport r;
    if (!a.task.empty()) {
        Task t = a.load();
        r = channel_cost(ch, t);
        std::printf("accuracy = %.9f\n", task_accuracy(t, ch));
    } else {
        CMatrix pi = projector_path.empty()
                         ? CMatrix(CMatrix::Identity(dims.d_A, dims.d_A))
                         : mat_from_json(read_json_file(projector_path));
        r = channel_cost(ch, pi, context_for(dims.d_A, dims.d_B, a.ctx));
    }
    if (!json_path.empty()) write_json_file(json_path, report_json(r));
    return print_report("cost", r, " bits");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Minimum nonequilibrium cost (clean qubits) of quantum "
                 "information processing tasks"};
    app.require_subcommand(1);
    int rc = 0;

    TaskArgs kappa_args;
    std::string kappa_json, kappa_witness;
    CLI::App *kappa = add_task_cmd(
        app, "kappa", "Reverse entropy kappa = -log2 F_max^rev of a task",
        kappa_args);
    kappa->add_option("--json", kappa_json, "Write the full-precision report here");
    kappa->add_option("--witness", kappa_witness,
                      "Write the optimal reverse channel (Choi JSON)");
    kappa->callback([&] { rc = run_kappa(kappa_args, kappa_json, kappa_witness); });

    TaskArgs cost_args;
    double cost_fidelity = 0.0;
    std::string cost_json, cost_witness;
    CLI::App *cost = add_task_cmd(
        app, "cost", "Minimum cost in bits to reach a target accuracy", cost_args);
    cost->add_option("--fidelity", cost_fidelity, "Target worst-case accuracy F")
        ->required();
    cost->add_option("--json", cost_json, "Write the full-precision report here");
    cost->add_option("--witness", cost_witness,
                     "Write the optimal channel (Choi JSON)");
    cost->callback(
        [&] { rc = run_cost(cost_args, cost_fidelity, cost_json, cost_witness); });

    TaskArgs acc_args;
    double acc_cost = 0.0;
    std::string acc_json;
    CLI::App *acc = add_task_cmd(
        app, "accuracy", "Best accuracy reachable at a given cost", acc_args);
    acc->add_option("--cost", acc_cost, "Cost budget in bits")->required();
    acc->add_option("--json", acc_json, "Write the full-precision report here");
    acc->callback([&] { rc = run_accuracy(acc_args, acc_cost, acc_json); });

    TaskArgs curve_args;
    int curve_points = 25, curve_jobs = 1;
    std::string curve_variants = "quantum", curve_out, curve_format = "csv",
                curve_plot = "none";
    CLI::App *curve = add_task_cmd(
        app, "curve", "Cost-vs-fidelity tradeoff curve over [F_min, F_max]",
        curve_args);
    curve->add_option("--points", curve_points, "Grid size over [F_min, F_max]")
        ->capture_default_str()
        ->check(CLI::Range(2, 10000));
    curve->add_option("--variants", curve_variants,
                      "Comma separated: quantum, classical, eb")
        ->capture_default_str();
    curve->add_option("--jobs", curve_jobs, "Concurrent point solves")
        ->capture_default_str()
        ->check(CLI::Range(1, 256));
    curve->add_option("--out", curve_out, "Output file (default: stdout)");
    curve->add_option("--format", curve_format, "csv or json")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    curve->add_option("--plot", curve_plot, "none, gnuplot or svg")
        ->capture_default_str()
        ->check(CLI::IsMember({"none", "gnuplot", "svg"}));
    curve->callback([&] {
        rc = run_curve(curve_args, curve_points, curve_variants, curve_jobs,
                       curve_out, curve_format, curve_plot);
    });

    std::string verify_suite = "all", verify_report;
    double verify_tol = 1e-6;
    int verify_jobs = 1;
    CLI::App *verify_cmd = app.add_subcommand(
        "verify", "Cross-check closed forms, SDPs and constructions");
    verify_cmd->add_option("--suite", verify_suite, "all or one check id")
        ->capture_default_str();
    verify_cmd->add_option("--tol", verify_tol, "Tolerance for generic checks")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--jobs", verify_jobs, "Concurrent curve solves")
        ->capture_default_str()
        ->check(CLI::Range(1, 256));
    verify_cmd->add_option("--report", verify_report, "Write a JSON report here");
    verify_cmd->callback(
        [&] { rc = run_verify(verify_suite, verify_tol, verify_jobs, verify_report); });

    int figure_id = 0, figure_points = 25, figure_jobs = 1;
    std::string figure_dir = ".", figure_plot = "none";
    CLI::App *figure = app.add_subcommand(
        "figure", "Regenerate the degenerate-qubit cloning figure datasets");
    figure->add_option("--id", figure_id, "2 (1->m boundary lines) or 3 (eb gap)")
        ->required();
    figure->add_option("--dir", figure_dir, "Output directory")
        ->capture_default_str();
    figure->add_option("--points", figure_points, "Grid size per curve")
        ->capture_default_str()
        ->check(CLI::Range(2, 10000));
    figure->add_option("--jobs", figure_jobs, "Concurrent point solves")
        ->capture_default_str()
        ->check(CLI::Range(1, 256));
    figure->add_option("--plot", figure_plot, "none, gnuplot or svg")
        ->capture_default_str()
        ->check(CLI::IsMember({"none", "gnuplot", "svg"}));
    figure->callback([&] {
        rc = run_figure(figure_id, figure_dir, figure_points, figure_jobs,
                        figure_plot);
    });

    TaskArgs cc_args;
    std::string cc_channel, cc_projector, cc_json;
    CLI::App *cc = app.add_subcommand(
        "channel-cost", "Cost of a given channel (Choi JSON) against a task or "
                        "a projector + context");
    cc->add_option("--channel", cc_channel, "Channel file {\"dims\":[d_A,d_B],\"choi\":...}")
        ->required();
    cc->add_option("--task", cc_args.task,
                   "Optional task URI/file; its reference operators replace the "
                   "bare projector");
    add_ctx_opts(cc, cc_args.ctx);
    cc->add_option("--projector", cc_projector,
                   "Input projector JSON (default: identity on A)");
    cc->add_option("--json", cc_json, "Write the full-precision report here");
    cc_args.cmd = cc;
    cc->callback([&] { rc = run_channel_cost(cc_channel, cc_args, cc_projector, cc_json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;
    } catch (const neq::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        const bool numerical = dynamic_cast<const neq::SolverFailure *>(&e) ||
                               dynamic_cast<const neq::ConstructionFailed *>(&e);
        return numerical ? 3 : 4;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return rc;
}
