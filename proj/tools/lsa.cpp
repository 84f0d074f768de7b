#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lsa/lsa.hpp"

// exit codes: 0 all requested properties hold, 1 a property fails (reports
// still emitted), 2 input or format error, 3 numeric fallback or a solver
// branch left unfinished

using namespace lsa;
using nlohmann::json;

namespace {

struct Options {
    std::string input;
    std::vector<std::string> params;
    bool emit_json = false;
    bool numeric = false;
    double eps = -1.0;
    bool verbose = false;
    std::string seed;
    std::string kind = "l";
    std::string dot;
    std::string emit;
    size_t dim = 0;
};

std::map<std::string, std::string> param_map(const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> m;
    for (const auto& kv : kvs) {
        auto pos = kv.find('=');
        if (pos == std::string::npos)
            throw BadParameters("expected key=value, got '" + kv + "'");
        m[kv.substr(0, pos)] = kv.substr(pos + 1);
    }
    return m;
}

Vec parse_vec(const std::string& text) {
    Vec v;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        while (!part.empty() && part.front() == ' ') part.erase(part.begin());
        while (!part.empty() && part.back() == ' ') part.pop_back();
        v.push_back(Scalar::parse(part));
    }
    if (v.empty()) throw BadParameters("empty coefficient list");
    return v;
}

std::optional<Vec> seed_of(const Options& o) {
    if (o.seed.empty()) return std::nullopt;
    return parse_vec(o.seed);
}

Algebra load_input(const Options& o) {
    Algebra A = [&] {
        if (std::filesystem::exists(o.input)) return load_algebra(o.input);
        if (o.input.find('.') == std::string::npos)
            return catalog(o.input, param_map(o.params));
        throw BadParameters("no such file: " + o.input);
    }();
    if (o.numeric) A = to_numeric(A);
    if (o.eps >= 0.0) A.set_eps(o.eps);
    return A;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

json report_json(const PropertyReport& rep) {
    json a = json::array();
    for (const auto& c : rep.checks) {
        json e = {{"property", c.property}, {"ok", c.ok}};
        if (!c.witness.empty()) e["witness"] = c.witness;
        if (c.degenerate_note) e["degenerate"] = true;
        a.push_back(e);
    }
    return a;
}

void print_report(const PropertyReport& rep) {
    for (const auto& c : rep.checks) {
        std::cout << "  " << c.property << ": " << (c.ok ? "ok" : "FAIL");
        if (!c.witness.empty()) std::cout << " (" << c.witness << ")";
        if (c.degenerate_note) std::cout << " [degenerate parallelogram]";
        std::cout << "\n";
    }
}

int cmd_check(const Options& o) {
    Algebra A = load_input(o);
    auto w = left_symmetry_witness(A);
    bool jac = check_jacobi(A);
    bool lrep = check_left_representation(A);
    bool lri = check_left_right_identity(A);
    // completeness criteria presuppose left symmetry; skip them when it fails
    CompletenessReport comp;
    if (w.ok) comp = A.is_exact() ? check_all_criteria(A) : is_complete(A);
    bool ok = w.ok && comp.verdict;

    if (o.emit_json) {
        json j = {{"name", A.name()},
                  {"dim", A.dim()},
                  {"left_symmetric", w.ok},
                  {"jacobi", jac},
                  {"left_representation", lrep},
                  {"left_right_identity", lri},
                  {"complete", w.ok ? json(comp.verdict) : json()}};
        if (!w.ok)
            j["witness_triple"] = {A.labels()[w.i], A.labels()[w.j], A.labels()[w.k]};
        if (comp.nilpotent_all) j["nilpotent_all"] = *comp.nilpotent_all;
        if (comp.det_identically_one) j["det_identically_one"] = *comp.det_identically_one;
        if (comp.nonvanishing_sampled) j["nonvanishing_sampled"] = *comp.nonvanishing_sampled;
        if (!comp.witness.empty()) j["completeness_witness"] = comp.witness;
        std::cout << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }

    std::cout << A.name() << " (dim " << A.dim() << ")\n";
    std::cout << "left-symmetric: " << yn(w.ok) << "\n";
    if (!w.ok)
        std::cout << "  witness triple: (" << A.labels()[w.i] << ", " << A.labels()[w.j]
                  << ", " << A.labels()[w.k] << ")\n";
    std::cout << "jacobi: " << yn(jac) << "\n";
    std::cout << "left representation identity: " << yn(lrep) << "\n";
    std::cout << "left-right identity: " << yn(lri) << "\n";
    if (!w.ok)
        std::cout << "complete: not evaluated (not left-symmetric)\n";
    else
        std::cout << "complete: " << yn(comp.verdict) << "\n";
    if (comp.nilpotent_all)
        std::cout << "  R(x) nilpotent for all x: " << yn(*comp.nilpotent_all) << "\n";
    if (comp.det_identically_one)
        std::cout << "  det(I+R(x)) = 1: " << yn(*comp.det_identically_one) << "\n";
    if (comp.nonvanishing_sampled)
        std::cout << "  det(I+R(x)) != 0 on sample grid: " << yn(*comp.nonvanishing_sampled)
                  << "\n";
    if (!comp.witness.empty()) std::cout << "  witness: " << comp.witness << "\n";
    return ok ? 0 : 1;
}

int cmd_decompose(const Options& o) {
    Algebra A = load_input(o);
    auto [h, word] = make_canonical(A, seed_of(o));
    auto dec = root_decomposition(A, h, Rep::L);

    if (o.emit_json) {
        json j = {{"name", A.name()}, {"cartan_dim", h.dim()}, {"canonical", true}};
        json basis = json::array();
        for (size_t i = 0; i < h.dim(); ++i) basis.push_back(vec_json(h.basis_vector(i)));
        j["cartan_basis"] = basis;
        json parts = json::array();
        for (const auto& p : dec.parts)
            parts.push_back({{"root", vec_json(p.root)}, {"dim", p.space.dim()}});
        j["root_parts"] = parts;
        json factors = json::array();
        for (const auto& f : word.factors) factors.push_back(vec_json(f));
        j["transport_word"] = factors;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << A.name() << ": canonical cartan subalgebra of dim " << h.dim() << "\n";
    for (size_t i = 0; i < h.dim(); ++i)
        std::cout << "  h" << i << " = " << vec_str(h.basis_vector(i)) << "\n";
    std::cout << "root parts:\n";
    for (const auto& p : dec.parts)
        std::cout << "  root " << vec_str(p.root) << "  dim " << p.space.dim() << "\n";
    std::cout << "transport word: " << word.factors.size() << " factor(s)\n";
    if (o.verbose)
        for (const auto& f : word.factors) std::cout << "  exp L" << vec_str(f) << "\n";
    return 0;
}

int cmd_graph(const Options& o) {
    if (o.kind != "l" && o.kind != "r") throw BadParameters("--kind must be l or r");
    Algebra A = load_input(o);
    auto [gl, gr] = left_right_graphs(A, seed_of(o));
    const RootGraph& g = o.kind == "r" ? gr : gl;
    auto rep = check_properties(g);
    auto srep = check_simple_properties(gl, gr, A);
    bool ok = rep.all_ok() && srep.all_ok();

    if (!o.dot.empty()) {
        std::ofstream out(o.dot);
        if (!out) throw BadParameters("cannot write " + o.dot);
        out << to_dot(g);
    }

    if (o.emit_json) {
        json j = {{"name", A.name()},
                  {"graph", graph_to_json(g)},
                  {"properties", report_json(rep)},
                  {"simple_properties", report_json(srep)}};
        std::cout << j.dump(2) << "\n";
        return ok ? 0 : 1;
    }

    std::cout << A.name() << ": " << to_string(g.kind) << " graph, "
              << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
    for (const auto& e : g.edges)
        std::cout << "  " << e.from.to_string() << " -> " << e.to.to_string() << "  [c = "
                  << e.c.to_string() << "]\n";
    std::cout << "properties:\n";
    print_report(rep);
    std::cout << "simplicity properties:\n";
    print_report(srep);
    return ok ? 0 : 1;
}

int cmd_simple(const Options& o) {
    Algebra A = load_input(o);
    auto rep = is_simple(A);
    if (o.emit_json) {
        json j = {{"name", A.name()}, {"simple", rep.simple}, {"exact", rep.exact}};
        if (rep.witness) j["witness_ideal_dim"] = rep.witness->dim();
        std::cout << j.dump(2) << "\n";
        return rep.simple ? 0 : 1;
    }
    std::cout << A.name() << ": simple: " << yn(rep.simple)
              << (rep.exact ? " (structural)" : " (sampled generators)") << "\n";
    if (rep.witness)
        std::cout << "  proper ideal of dim " << rep.witness->dim() << "\n";
    return rep.simple ? 0 : 1;
}

std::string safe_filename(std::string s) {
    for (char& ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '-' && ch != '_')
            ch = '_';
    return s;
}

int cmd_classify(const Options& o) {
    if (o.dim == 0) throw BadParameters("--dim is required");
    auto report = classify(o.dim);

    if (!o.dot.empty()) {
        std::filesystem::create_directories(o.dot);
        for (const auto& fam : report.families) {
            if (fam.representatives.empty()) continue;
            try {
                auto [gl, gr] = left_right_graphs(fam.representatives.front());
                (void)gr;
                std::ofstream out(std::filesystem::path(o.dot) /
                                  (safe_filename(fam.label) + ".dot"));
                out << to_dot(gl);
            } catch (const Error&) {
                // families without a graph presentation are skipped
            }
        }
    }

    bool solver_ok = true;
    for (const auto& fam : report.families) solver_ok = solver_ok && fam.solver_complete;

    if (o.emit_json) {
        std::cout << classification_to_json(report).dump(2) << "\n";
    } else {
        std::cout << "classification in dimension " << report.dim << "\n";
        if (report.enumeration_only)
            std::cout << "NOTE: enumeration only, no completeness-of-list claim\n";
        std::cout << "candidates: " << report.candidate_count
                  << " (discarded: " << report.discarded_candidates << ")\n";
        for (const auto& fam : report.families) {
            std::cout << "family " << fam.label << "\n";
            if (!fam.parameters.empty()) {
                std::cout << "  parameters:";
                for (const auto& p : fam.parameters) std::cout << " " << p;
                std::cout << "\n";
            }
            for (const auto& c : fam.constraints) std::cout << "  constraint: " << c << "\n";
            if (fam.projective_line) {
                std::cout << "  projective line with " << fam.points.size() << " strata\n";
                for (const auto& d : fam.distinguished)
                    std::cout << "    " << d << "\n";
            }
            std::cout << "  representatives:";
            for (const auto& rep : fam.representatives) std::cout << " " << rep.name();
            std::cout << "\n  verified: " << yn(fam.verified)
                      << "  solver: " << (fam.solver_complete ? "complete" : "INCOMPLETE")
                      << "\n";
        }
    }
    if (!solver_ok) return 3;
    return report.all_verified() ? 0 : 1;
}

int cmd_catalog(const Options& o) {
    Algebra A = catalog(o.input, param_map(o.params));
    if (!o.emit.empty()) {
        save_algebra(A, o.emit);
        std::cout << "wrote " << A.name() << " (dim " << A.dim() << ") to " << o.emit
                  << "\n";
    } else {
        std::cout << algebra_to_string(A) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"left-symmetric algebra toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c, bool with_input) {
        if (with_input)
            c->add_option("input", o.input, "algebra file or catalog name")->required();
        c->add_flag("--json", o.emit_json, "machine-readable output");
        c->add_flag("--numeric", o.numeric, "convert scalars to doubles first");
        c->add_option("--eps", o.eps, "comparison tolerance for numeric mode");
        c->add_flag("--verbose", o.verbose, "more detail");
        c->add_option("--param", o.params, "catalog parameter key=value");
    };

    auto* check = app.add_subcommand("check", "identity and completeness report");
    add_common(check, true);

    auto* dec = app.add_subcommand("decompose", "canonical root decomposition");
    add_common(dec, true);
    dec->add_option("--seed", o.seed, "cartan seed coefficients, comma separated");

    auto* graph = app.add_subcommand("graph", "root graphs and their properties");
    add_common(graph, true);
    graph->add_option("--kind", o.kind, "l (left) or r (right)");
    graph->add_option("--dot", o.dot, "write DOT to this path");
    graph->add_option("--seed", o.seed, "cartan seed coefficients, comma separated");

    auto* simple = app.add_subcommand("simple", "simplicity verdict");
    add_common(simple, true);

    auto* cls = app.add_subcommand("classify", "classify by dimension");
    cls->add_option("--dim", o.dim, "dimension to classify")->required();
    cls->add_flag("--json", o.emit_json, "machine-readable output");
    cls->add_option("--dot", o.dot, "directory for per-family DOT files");

    auto* cat = app.add_subcommand("catalog", "emit a catalog algebra");
    cat->add_option("name", o.input, "catalog name")->required();
    cat->add_option("--param", o.params, "catalog parameter key=value");
    cat->add_option("--emit", o.emit, "write the algebra to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check(o);
        if (app.got_subcommand(dec)) return cmd_decompose(o);
        if (app.got_subcommand(graph)) return cmd_graph(o);
        if (app.got_subcommand(simple)) return cmd_simple(o);
        if (app.got_subcommand(cls)) return cmd_classify(o);
        if (app.got_subcommand(cat)) return cmd_catalog(o);
        return 2;
    } catch (const NumericFallback& e) {
        std::cerr << "numeric fallback: " << e.what() << "\n" << e.detail << "\n";
        return 3;
    } catch (const SolverIncomplete& e) {
        std::cerr << "solver incomplete: " << e.what() << "\n";
        return 3;
    } catch (const BadParameters& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SeedNotRegular& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TemplateExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "property failure: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
