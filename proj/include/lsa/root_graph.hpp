#pragma once

// root graphs of a one-dimensional canonical decomposition: construction,
// left/right duality, and the structural property checkers

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsa/decomposition.hpp"

namespace lsa {

enum class GraphKind { left, right };

inline std::string to_string(GraphKind k) { return k == GraphKind::left ? "left" : "right"; }

struct GraphEdge {
    Scalar from, to;
    Scalar c;  // the structure constant behind the edge
};

struct RootGraph {
    GraphKind kind = GraphKind::left;
    std::vector<Scalar> vertices;  // sorted by (re, im), unique
    std::vector<GraphEdge> edges;  // sorted by (from, to)
    bool exact = true;
    double eps = kDefaultEps;

    bool same_value(const Scalar& a, const Scalar& b) const {
        return exact ? a == b : a.approx_equal(b, eps);
    }
    bool has_vertex(const Scalar& v) const {
        for (const auto& u : vertices)
            if (same_value(u, v)) return true;
        return false;
    }
    const GraphEdge* find_edge(const Scalar& from, const Scalar& to) const {
        for (const auto& e : edges)
            if (same_value(e.from, from) && same_value(e.to, to)) return &e;
        return nullptr;
    }
    bool has_edge(const Scalar& from, const Scalar& to) const { return find_edge(from, to); }

    // c_{alpha,beta}, read back from the edge encoding of the kind
    Scalar product_coeff(const Scalar& alpha, const Scalar& beta) const {
        const GraphEdge* e = kind == GraphKind::left ? find_edge(beta, alpha + beta)
                                                     : find_edge(alpha, alpha + beta);
        return e ? e->c : Scalar();
    }
};

namespace detail {

inline void sort_graph(RootGraph& g) {
    std::sort(g.vertices.begin(), g.vertices.end());
    g.vertices.erase(std::unique(g.vertices.begin(), g.vertices.end(),
                                 [&](const Scalar& a, const Scalar& b) { return g.same_value(a, b); }),
                     g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
        if (a.from < b.from) return true;
        if (b.from < a.from) return false;
        return a.to < b.to;
    });
}

}  // namespace detail

// hand-built graph (counterexamples, fixtures); endpoints must be vertices
inline RootGraph make_graph(GraphKind kind, std::vector<Scalar> vertices,
                            std::vector<GraphEdge> edges) {
    RootGraph g;
    g.kind = kind;
    g.vertices = std::move(vertices);
    g.edges = std::move(edges);
    detail::sort_graph(g);
    for (const auto& e : g.edges)
        if (!g.has_vertex(e.from) || !g.has_vertex(e.to))
            throw BadParameters("edge endpoint " + e.from.to_string() + " -> " +
                                e.to.to_string() + " is not a vertex");
    return g;
}

// graph of the canonical decomposition; vertices are the roots, and the edge
// (lambda, mu) is present iff c_{mu-lambda,lambda} != 0 (left) resp.
// c_{lambda,mu-lambda} != 0 (right)
inline RootGraph build_graph(const Algebra& A, const RootDecomposition& dec, GraphKind kind) {
    for (const auto& p : dec.parts)
        if (p.space.dim() != 1)
            throw NotOneDimensional("root space of dimension " + std::to_string(p.space.dim()));
    if (!is_canonical(A, dec.cartan)) throw NotCanonical("decomposition is not canonical");

    size_t m = dec.parts.size();
    std::vector<Scalar> roots(m);
    std::vector<Vec> basis(m);
    for (size_t i = 0; i < m; ++i) {
        roots[i] = dec.parts[i].root.at(0);
        basis[i] = dec.parts[i].space.basis_vector(0);
    }
    RootGraph g;
    g.kind = kind;
    g.exact = A.is_exact();
    g.eps = A.eps();
    g.vertices = roots;

    auto index_of = [&](const Scalar& v) -> std::optional<size_t> {
        for (size_t i = 0; i < m; ++i)
            if (g.same_value(roots[i], v)) return i;
        return std::nullopt;
    };

    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            Vec w = A.multiply(basis[a], basis[b]);
            Scalar c;
            if (auto t = index_of(roots[a] + roots[b])) {
                auto coords = Subspace::span_of(basis[*t], A.eps()).coordinates_of(w, A.eps());
                if (!coords) throw Error("product left its graded component");
                c = (*coords)[0];
            } else if (!vec_is_zero(w, A.eps())) {
                throw Error("product outside the root lattice is nonzero");
            }
            bool zero = g.exact ? c.is_zero() : c.is_zero(A.eps());
            if (roots[a].is_zero() && !zero && !g.same_value(c, roots[b]))
                throw Error("zero-root action is not c_{0,lambda} = lambda");
            if (roots[b].is_zero() && !zero)
                throw Error("R(e_0) != 0; the algebra cannot be complete");
            if (zero) continue;
            if (kind == GraphKind::left)
                g.edges.push_back({roots[b], roots[a] + roots[b], c});
            else
                g.edges.push_back({roots[a], roots[a] + roots[b], c});
        }
    detail::sort_graph(g);
    return g;
}

// canonicalize and build both graphs in one pass
inline std::pair<RootGraph, RootGraph> left_right_graphs(const Algebra& A,
                                                         std::optional<Vec> seed = std::nullopt) {
    auto [h, w] = make_canonical(A, std::move(seed));
    auto dec = root_decomposition(A, h, Rep::L);
    return {build_graph(A, dec, GraphKind::left), build_graph(A, dec, GraphKind::right)};
}

// move the tail of each edge to 0 and keep the head: (lambda, mu) becomes
// (mu - lambda, mu) and the kind flips; an involution
inline RootGraph dual_graph(const RootGraph& g) {
    RootGraph d;
    d.kind = g.kind == GraphKind::left ? GraphKind::right : GraphKind::left;
    d.exact = g.exact;
    d.eps = g.eps;
    d.vertices = g.vertices;
    for (const auto& e : g.edges) {
        GraphEdge t{e.to - e.from, e.to, e.c};
        if (!d.has_vertex(t.from)) d.vertices.push_back(t.from);
        d.edges.push_back(t);
    }
    detail::sort_graph(d);
    return d;
}

struct PropertyCheck {
    std::string property;
    bool ok = true;
    std::string witness;          // offending vertex / edge / path
    bool degenerate_note = false; // l6 accepted a degenerate parallelogram
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
    const PropertyCheck& check(const std::string& name) const {
        for (const auto& c : checks)
            if (c.property == name) return c;
        throw BadParameters("no such property: " + name);
    }
};

namespace detail {

inline std::string edge_str(const Scalar& a, const Scalar& b) {
    return a.to_string() + " -> " + b.to_string();
}

// directed cycle search ignoring loops; returns a cycle description
inline std::optional<std::string> find_cycle(const RootGraph& g) {
    size_t n = g.vertices.size();
    std::vector<std::vector<size_t>> adj(n);
    auto idx = [&](const Scalar& v) {
        for (size_t i = 0; i < n; ++i)
            if (g.same_value(g.vertices[i], v)) return i;
        return n;
    };
    for (const auto& e : g.edges) {
        size_t a = idx(e.from), b = idx(e.to);
        if (a != b) adj[a].push_back(b);
    }
    std::vector<int> color(n, 0);
    std::vector<size_t> stack;
    std::optional<std::string> found;
    std::function<bool(size_t)> dfs = [&](size_t v) {
        color[v] = 1;
        stack.push_back(v);
        for (size_t w : adj[v]) {
            if (color[w] == 1) {
                std::string s;
                auto it = std::find(stack.begin(), stack.end(), w);
                for (; it != stack.end(); ++it) s += g.vertices[*it].to_string() + " -> ";
                found = s + g.vertices[w].to_string();
                return true;
            }
            if (color[w] == 0 && dfs(w)) return true;
        }
        color[v] = 2;
        stack.pop_back();
        return false;
    };
    for (size_t v = 0; v < n; ++v)
        if (color[v] == 0 && dfs(v)) break;
    return found;
}

}  // namespace detail

inline PropertyReport check_properties(const RootGraph& g) {
    PropertyReport rep;
    auto add = [&rep](const std::string& name) -> PropertyCheck& {
        rep.checks.push_back({name, true, "", false});
        return rep.checks.back();
    };
    auto nonzero = [&](const Scalar& c) { return g.exact ? !c.is_zero() : !c.is_zero(g.eps); };

    if (g.kind == GraphKind::left) {
        auto& l1 = add("l1");
        for (const auto& v : g.vertices)
            if (!v.is_zero() && !g.has_edge(v, v)) {
                l1.ok = false;
                l1.witness = "no loop at " + v.to_string();
                break;
            }
        auto& l2 = add("l2");
        for (const auto& e : g.edges)
            if (!g.has_vertex(e.to - e.from)) {
                l2.ok = false;
                l2.witness = detail::edge_str(e.from, e.to) + " without vertex " +
                             (e.to - e.from).to_string();
                break;
            }
        auto& l3 = add("l3");
        for (const auto& e : g.edges)
            if (e.from.is_zero()) {
                l3.ok = false;
                l3.witness = detail::edge_str(e.from, e.to);
                break;
            }
        auto& l4 = add("l4");
        for (const auto& e : g.edges) {
            if (!e.to.is_zero() || e.from.is_zero()) continue;
            Scalar neg = Scalar() - e.from;
            if (!g.has_vertex(neg) || !g.has_edge(neg, Scalar())) {
                l4.ok = false;
                l4.witness = e.from.to_string() + " -> 0 without " + neg.to_string() + " -> 0";
                break;
            }
        }
        auto& l5 = add("l5");
        if (auto cyc = detail::find_cycle(g)) {
            l5.ok = false;
            l5.witness = *cyc;
        }
        auto& l6 = add("l6");
        for (const auto& e1 : g.edges) {
            if (g.same_value(e1.from, e1.to)) continue;
            for (const auto& e2 : g.edges) {
                if (g.same_value(e2.from, e2.to) || !g.same_value(e2.from, e1.to)) continue;
                const Scalar &lambda = e1.from, &mu = e1.to, &nu = e2.to;
                // e_{nu-mu}(e_{mu-lambda} e_lambda) expands into the
                // commutator "triangle" plus the swapped "parallelogram"
                Scalar tri = (g.product_coeff(nu - mu, mu - lambda) -
                              g.product_coeff(mu - lambda, nu - mu)) *
                             g.product_coeff(nu - lambda, lambda);
                bool para = nonzero(g.product_coeff(nu - mu, lambda)) &&
                            nonzero(g.product_coeff(mu - lambda, nu - mu + lambda));
                if (nonzero(tri) || para) {
                    if (!nonzero(tri) && g.same_value(mu - lambda, nu - mu))
                        l6.degenerate_note = true;
                    continue;
                }
                l6.ok = false;
                l6.witness = "consecutive " + detail::edge_str(lambda, mu) + ", " +
                             detail::edge_str(mu, nu) + " complete no triangle or parallelogram";
                break;
            }
            if (!l6.ok) break;
        }
    } else {
        auto& r1 = add("r1");
        for (const auto& v : g.vertices)
            if (!v.is_zero() && !g.has_edge(Scalar(), v)) {
                r1.ok = false;
                r1.witness = "0 not joined to " + v.to_string();
                break;
            }
        auto& r2 = add("r2");
        for (const auto& e : g.edges)
            if (!g.has_vertex(e.to - e.from)) {
                r2.ok = false;
                r2.witness = detail::edge_str(e.from, e.to) + " without vertex " +
                             (e.to - e.from).to_string();
                break;
            }
        auto& r3 = add("r3");
        for (const auto& e : g.edges)
            if (g.same_value(e.from, e.to)) {
                r3.ok = false;
                r3.witness = "loop at " + e.from.to_string();
                break;
            }
        auto& r4 = add("r4");
        for (const auto& e : g.edges) {
            if (!e.to.is_zero() || e.from.is_zero()) continue;
            Scalar neg = Scalar() - e.from;
            if (!g.has_vertex(neg) || !g.has_edge(neg, Scalar())) {
                r4.ok = false;
                r4.witness = e.from.to_string() + " -> 0 without " + neg.to_string() + " -> 0";
                break;
            }
        }
        // Tr(R_lambda^2 R_{-2lambda}) = 0 forbids a single closed path
        // mu -> mu-2lambda -> mu-lambda -> mu
        auto& r5 = add("r5");
        std::vector<Scalar> lambdas;
        for (const auto& mu : g.vertices)
            for (const auto& w : g.vertices) {
                Scalar lam = mu - w;
                if (lam.is_zero()) continue;
                bool seen = false;
                for (const auto& l : lambdas)
                    if (g.same_value(l, lam)) seen = true;
                if (!seen) lambdas.push_back(lam);
            }
        for (const auto& lam : lambdas) {
            size_t count = 0;
            Scalar first_mu;
            for (const auto& mu : g.vertices) {
                Scalar a = mu - lam - lam, b = mu - lam;
                if (!g.has_vertex(a) || !g.has_vertex(b)) continue;
                if (g.has_edge(mu, a) && g.has_edge(a, b) && g.has_edge(b, mu)) {
                    if (count == 0) first_mu = mu;
                    ++count;
                }
            }
            if (count == 1) {
                r5.ok = false;
                r5.witness = "single path for mu = " + first_mu.to_string() +
                             ", lambda = " + lam.to_string();
                break;
            }
        }
    }
    return rep;
}

// simplicity consequences on the pair of graphs
inline PropertyReport check_simple_properties(const RootGraph& gl, const RootGraph& gr) {
    if (gl.kind != GraphKind::left || gr.kind != GraphKind::right)
        throw BadParameters("expected a left and a right graph");
    PropertyReport rep;

    PropertyCheck s1{"s1", true, "", false};
    for (const auto& v : gl.vertices) {
        bool parallel = false;
        for (const auto& e : gl.edges)
            if (gl.same_value(e.to - e.from, v)) parallel = true;
        bool outgoing = false;
        for (const auto& e : gr.edges)
            if (gr.same_value(e.from, v)) outgoing = true;
        if (!parallel || !outgoing) {
            s1.ok = false;
            s1.witness = (parallel ? "no out-edge at " : "no edge parallel to 0 -> ") +
                         v.to_string();
            break;
        }
    }
    rep.checks.push_back(s1);

    PropertyCheck s2{"s2", true, "", false};
    {
        // reachability towards 0 in the union of the two edge sets
        std::vector<Scalar> verts = gl.vertices;
        for (const auto& v : gr.vertices)
            if (!gl.has_vertex(v)) verts.push_back(v);
        std::sort(verts.begin(), verts.end());
        for (const auto& start : verts) {
            std::vector<Scalar> frontier{start}, seen{start};
            bool reached = start.is_zero();
            while (!frontier.empty() && !reached) {
                Scalar v = frontier.back();
                frontier.pop_back();
                for (const auto* graph : {&gl, &gr})
                    for (const auto& e : graph->edges) {
                        if (!graph->same_value(e.from, v)) continue;
                        bool visited = false;
                        for (const auto& s : seen)
                            if (gl.same_value(s, e.to)) visited = true;
                        if (visited) continue;
                        seen.push_back(e.to);
                        frontier.push_back(e.to);
                        if (e.to.is_zero()) reached = true;
                    }
            }
            if (!reached) {
                s2.ok = false;
                s2.witness = "0 unreachable from " + start.to_string();
                break;
            }
        }
    }
    rep.checks.push_back(s2);

    PropertyCheck s3{"s3", true, "", false};
    {
        bool found = false;
        for (const auto& v : gl.vertices) {
            if (v.is_zero()) continue;
            Scalar neg = Scalar() - v;
            if (gl.has_edge(v, Scalar()) && gl.has_edge(neg, Scalar()) &&
                gr.has_edge(v, Scalar()) && gr.has_edge(neg, Scalar())) {
                found = true;
                break;
            }
        }
        if (!found) {
            s3.ok = false;
            s3.witness = "no symmetric pair with edges to 0 in both graphs";
        }
    }
    rep.checks.push_back(s3);
    return rep;
}

// both graphs must come from A's canonical decomposition; comparisons run
// under A's tolerance regime
inline PropertyReport check_simple_properties(const RootGraph& gl, const RootGraph& gr,
                                              const Algebra& A) {
    RootGraph l = gl, r = gr;
    l.exact = r.exact = A.is_exact();
    l.eps = r.eps = A.eps();
    return check_simple_properties(l, r);
}

inline std::string to_dot(const RootGraph& g) {
    std::ostringstream out;
    out << "digraph root_graph_" << to_string(g.kind) << " {\n";
    out << "  rankdir=LR;\n";
    for (const auto& v : g.vertices) out << "  \"" << v.to_string() << "\";\n";
    for (const auto& e : g.edges)
        out << "  \"" << e.from.to_string() << "\" -> \"" << e.to.to_string() << "\";\n";
    out << "}\n";
    return out.str();
}

inline nlohmann::json graph_to_json(const RootGraph& g) {
    nlohmann::json j;
    j["kind"] = to_string(g.kind);
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices) j["vertices"].push_back(v.to_string());
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"from", e.from.to_string()},
                              {"to", e.to.to_string()},
                              {"c", e.c.to_string()}});
    return j;
}

}  // namespace lsa
