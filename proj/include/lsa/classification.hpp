#pragma once
// low-dimensional classification: enumerate admissible root graphs over small
// vertex templates, solve for the structure constants on each surviving
// support, and assemble verified families

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lsa/catalog.hpp"
#include "lsa/completeness.hpp"
#include "lsa/ideals.hpp"
#include "lsa/mpoly.hpp"
#include "lsa/root_graph.hpp"

namespace lsa {

// ---------------------------------------------------------------------------
// vertex values a + b*lambda, so one template can carry a free parameter

struct LinearForm {
    Scalar a, b;

    LinearForm() = default;
    LinearForm(Scalar ca, Scalar cb) : a(std::move(ca)), b(std::move(cb)) {}
    static LinearForm constant(long v) { return {Scalar::integer(v), Scalar()}; }
    static LinearForm constant(const Scalar& v) { return {v, Scalar()}; }
    static LinearForm lambda(long coeff = 1) { return {Scalar(), Scalar::integer(coeff)}; }

    bool symbolic() const { return !b.is_zero(); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    Scalar eval(const Scalar& lam) const { return a + b * lam; }

    std::string to_string() const {
        std::string s;
        if (!a.is_zero() || b.is_zero()) s = a.to_string();
        if (!b.is_zero()) {
            std::string t;
            if (b == Scalar::integer(1)) t = "lambda";
            else if (b == Scalar::integer(-1)) t = "-lambda";
            else t = b.to_string() + "*lambda";
            if (s.empty()) s = t;
            else s += (t[0] == '-') ? t : "+" + t;
        }
        return s;
    }

    friend LinearForm operator+(const LinearForm& x, const LinearForm& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend LinearForm operator-(const LinearForm& x, const LinearForm& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend bool operator==(const LinearForm& x, const LinearForm& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const LinearForm& x, const LinearForm& y) { return !(x == y); }
    friend bool operator<(const LinearForm& x, const LinearForm& y) {
        if (!(x.a == y.a)) return x.a < y.a;
        return x.b < y.b;
    }
};

// a candidate support: vertex set plus the non-loop left edges; loops at the
// nonzero vertices are always present and carry the vertex value
struct GraphCandidate {
    std::vector<LinearForm> vertices;
    std::vector<std::pair<LinearForm, LinearForm>> edges;
    std::vector<Scalar> probes;  // faithful parameter samples when symbolic
    PropertyReport left_report, right_report, simple_report;

    bool symbolic() const {
        return std::any_of(vertices.begin(), vertices.end(),
                           [](const LinearForm& f) { return f.symbolic(); });
    }

    RootGraph instantiate(const Scalar& lam) const {
        std::vector<Scalar> vs;
        vs.reserve(vertices.size());
        for (const auto& f : vertices) vs.push_back(f.eval(lam));
        std::vector<GraphEdge> es;
        for (const auto& v : vs)
            if (!v.is_zero()) es.push_back({v, v, v});
        for (const auto& [f, t] : edges)
            es.push_back({f.eval(lam), t.eval(lam), Scalar::integer(1)});
        return make_graph(GraphKind::left, vs, es);
    }

    std::string key() const {
        std::string s = "{";
        for (size_t i = 0; i < vertices.size(); ++i)
            s += (i ? "," : "") + vertices[i].to_string();
        s += " | ";
        for (size_t i = 0; i < edges.size(); ++i)
            s += (i ? ", " : "") + edges[i].first.to_string() + "->" + edges[i].second.to_string();
        return s + "}";
    }
};

namespace detail {

inline bool form_in(const std::vector<LinearForm>& fs, const LinearForm& f) {
    return std::find(fs.begin(), fs.end(), f) != fs.end();
}

inline bool value_in(const std::vector<Scalar>& vs, const Scalar& v) {
    return std::any_of(vs.begin(), vs.end(), [&](const Scalar& w) { return w == v; });
}

// a concrete lambda is a faithful sample of a template when it keeps the
// coincidence pattern: distinct forms stay distinct and sums and differences
// of vertices land in the template exactly when the forms do
inline bool faithful_sample(const std::vector<LinearForm>& forms, const Scalar& lam) {
    std::vector<Scalar> vals;
    vals.reserve(forms.size());
    for (const auto& f : forms) vals.push_back(f.eval(lam));
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t j = i + 1; j < vals.size(); ++j)
            if (vals[i] == vals[j]) return false;
    for (size_t i = 0; i < forms.size(); ++i)
        for (size_t j = 0; j < forms.size(); ++j) {
            if (form_in(forms, forms[i] + forms[j]) != value_in(vals, vals[i] + vals[j]))
                return false;
            if (form_in(forms, forms[i] - forms[j]) != value_in(vals, vals[i] - vals[j]))
                return false;
        }
    return true;
}

inline std::vector<Scalar> find_probes(const std::vector<LinearForm>& forms, size_t want = 3) {
    std::vector<Scalar> out;
    for (long k = 2; k <= 60 && out.size() < want; ++k) {
        Scalar lam = Scalar::integer(k);
        if (faithful_sample(forms, lam)) out.push_back(lam);
    }
    if (out.size() < want)
        throw TemplateExhausted("no faithful parameter samples for a symbolic template");
    return out;
}

// the coefficient-level consecutive-edge condition, evaluated with unknown
// constants: keep a support when each consecutive pair could still produce a
// triangle or a parallelogram for some choice of nonzero constants
inline bool l6_possible(const RootGraph& g) {
    for (const auto& e1 : g.edges) {
        if (g.same_value(e1.from, e1.to)) continue;
        for (const auto& e2 : g.edges) {
            if (g.same_value(e2.from, e2.to) || !g.same_value(e2.from, e1.to)) continue;
            Scalar la = e1.from, mu = e1.to, nu = e2.to;
            Scalar dmu = mu - la, dnu = nu - mu;
            bool tri = false;
            // equal steps make the bracket factor vanish identically
            if (!g.same_value(dmu, dnu))
                tri = g.has_edge(la, nu) &&
                      (g.has_edge(dmu, nu - la) || g.has_edge(dnu, nu - la));
            bool para = g.has_edge(la, dnu + la) && g.has_edge(dnu + la, nu);
            if (!tri && !para) return false;
        }
    }
    return true;
}

inline bool candidate_admissible(const RootGraph& g) {
    for (const auto& c : check_properties(g).checks)
        if (c.property != "l6" && !c.ok) return false;
    if (!l6_possible(g)) return false;
    RootGraph gr = dual_graph(g);
    for (const auto& c : check_properties(gr).checks)
        if (!c.ok) return false;
    for (const auto& c : check_simple_properties(g, gr).checks)
        if (!c.ok) return false;
    return true;
}

inline std::string presentation_key(std::vector<Scalar> vs,
                                    std::vector<std::pair<Scalar, Scalar>> es) {
    std::sort(vs.begin(), vs.end());
    std::sort(es.begin(), es.end(), [](const auto& x, const auto& y) {
        if (!(x.first == y.first)) return x.first < y.first;
        return x.second < y.second;
    });
    std::string s;
    for (const auto& v : vs) s += v.to_string() + ",";
    s += "|";
    for (const auto& [f, t] : es) s += f.to_string() + ">" + t.to_string() + ";";
    return s;
}

// canonical presentation under root dilation: dividing every root by a fixed
// nonzero scalar is realized by rescaling the zero-root basis vector, so
// dilated supports describe the same algebras; normalize to presentations
// containing 1 with no vertex inside the unit circle and take the smallest
inline std::string canonical_key(const GraphCandidate& cand) {
    if (cand.symbolic()) return cand.key();
    std::vector<Scalar> vs;
    for (const auto& f : cand.vertices) vs.push_back(f.a);
    std::vector<std::pair<Scalar, Scalar>> es;
    for (const auto& [f, t] : cand.edges) es.emplace_back(f.a, t.a);
    std::optional<std::string> best;
    for (const auto& c : vs) {
        if (c.is_zero()) continue;
        std::vector<Scalar> sv;
        bool ok = false;
        for (const auto& v : vs) {
            Scalar w = v / c;
            if (w == Scalar::integer(1)) ok = true;
            if (!w.is_zero() && w.abs() < 1.0 - 1e-9) {
                ok = false;
                break;
            }
            sv.push_back(w);
        }
        if (!ok || sv.size() != vs.size()) continue;
        std::vector<std::pair<Scalar, Scalar>> se;
        for (const auto& [f, t] : es) se.emplace_back(f / c, t / c);
        std::string k = presentation_key(sv, se);
        if (!best || k < *best) best = k;
    }
    return best ? *best : presentation_key(vs, es);
}

// does the concrete candidate arise from the symbolic family at some
// parameter value read off its own vertices?
inline bool instance_of_symbolic(const GraphCandidate& sym, const GraphCandidate& conc) {
    if (sym.vertices.size() != conc.vertices.size()) return false;
    RootGraph gc = conc.instantiate(Scalar());
    for (const auto& f : conc.vertices) {
        if (f.a.is_zero()) continue;
        if (!faithful_sample(sym.vertices, f.a)) continue;
        RootGraph gs = sym.instantiate(f.a);
        if (gs.vertices.size() != gc.vertices.size() || gs.edges.size() != gc.edges.size())
            continue;
        bool same = true;
        for (size_t i = 0; i < gs.vertices.size() && same; ++i)
            same = gs.vertices[i] == gc.vertices[i];
        for (size_t i = 0; i < gs.edges.size() && same; ++i)
            same = gs.edges[i].from == gc.edges[i].from && gs.edges[i].to == gc.edges[i].to;
        if (same) return true;
    }
    return false;
}

}  // namespace detail

// the stock templates: an arithmetic progression -1, 0, 1, ..., dim-2 and,
// for dimension 5, the symmetric shape {0, +-1, +-lambda} with one symbolic
// pair plus small Gaussian specializations of it
inline std::vector<std::vector<LinearForm>> default_vertex_templates(size_t dim) {
    std::vector<std::vector<LinearForm>> out;
    std::vector<LinearForm> prog;
    for (long k = -1; k <= static_cast<long>(dim) - 2; ++k)
        prog.push_back(LinearForm::constant(k));
    out.push_back(prog);
    if (dim == 5) {
        std::vector<LinearForm> sym = {LinearForm::lambda(-1), LinearForm::constant(-1),
                                       LinearForm::constant(0), LinearForm::constant(1),
                                       LinearForm::lambda(1)};
        std::sort(sym.begin(), sym.end());
        out.push_back(sym);
        std::vector<Scalar> specials = {Scalar::integer(2), Scalar::integer(3),
                                        Scalar::gaussian(0, 1), Scalar::gaussian(1, 1),
                                        Scalar::gaussian(0, 2)};
        for (const auto& g : specials) {
            std::vector<LinearForm> t = {LinearForm::constant(Scalar() - g),
                                         LinearForm::constant(-1), LinearForm::constant(0),
                                         LinearForm::constant(1), LinearForm::constant(g)};
            std::sort(t.begin(), t.end());
            out.push_back(t);
        }
    }
    return out;
}

// enumerate supports over the matching templates and keep those no structural
// property can reject; coefficients stay unknown at this stage
inline std::vector<GraphCandidate> enumerate_graphs(
    size_t dim, const std::vector<std::vector<LinearForm>>& templates) {
    if (dim < 2 || dim > 6)
        throw BadParameters("graph enumeration covers dimensions 2 through 6");
    std::vector<GraphCandidate> out;
    std::vector<std::string> seen;
    bool matched = false;
    for (const auto& tpl : templates) {
        if (tpl.size() != dim) continue;
        matched = true;
        std::vector<LinearForm> forms = tpl;
        std::sort(forms.begin(), forms.end());
        for (size_t i = 0; i + 1 < forms.size(); ++i)
            if (forms[i] == forms[i + 1])
                throw BadParameters("vertex template has repeated entries");
        if (!detail::form_in(forms, LinearForm::constant(0L)))
            throw BadParameters("vertex template must contain 0");
        bool sym = std::any_of(forms.begin(), forms.end(),
                               [](const LinearForm& f) { return f.symbolic(); });
        std::vector<Scalar> probes = sym ? detail::find_probes(forms) : std::vector<Scalar>{};

        std::vector<std::pair<LinearForm, LinearForm>> free_edges;
        for (const auto& f : forms) {
            if (f.is_zero()) continue;
            for (const auto& t : forms) {
                if (t == f) continue;
                if (detail::form_in(forms, t - f)) free_edges.emplace_back(f, t);
            }
        }
        std::sort(free_edges.begin(), free_edges.end(), [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
        if (free_edges.size() > 20)
            throw TemplateExhausted("free edge set too large to enumerate");

        for (size_t mask = 0; mask < (size_t{1} << free_edges.size()); ++mask) {
            GraphCandidate cand;
            cand.vertices = forms;
            cand.probes = probes;
            for (size_t i = 0; i < free_edges.size(); ++i)
                if (mask & (size_t{1} << i)) cand.edges.push_back(free_edges[i]);
            std::vector<Scalar> lams = sym ? probes : std::vector<Scalar>{Scalar()};
            bool ok = true;
            for (const auto& lam : lams) {
                RootGraph g = cand.instantiate(lam);
                if (!detail::candidate_admissible(g)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            RootGraph g = cand.instantiate(lams.front());
            cand.left_report = check_properties(g);
            RootGraph gr = dual_graph(g);
            cand.right_report = check_properties(gr);
            cand.simple_report = check_simple_properties(g, gr);
            std::string k = detail::canonical_key(cand);
            if (std::find(seen.begin(), seen.end(), k) != seen.end()) continue;
            seen.push_back(k);
            out.push_back(std::move(cand));
        }
    }
    if (!matched)
        throw TemplateExhausted("no vertex template of size " + std::to_string(dim));
    // concrete supports that a symbolic family already covers are duplicates
    std::vector<GraphCandidate> final_out;
    for (const auto& c : out) {
        bool dup = false;
        if (!c.symbolic())
            for (const auto& s : out)
                if (s.symbolic() && detail::instance_of_symbolic(s, c)) {
                    dup = true;
                    break;
                }
        if (!dup) final_out.push_back(c);
    }
    return final_out;
}

// ---------------------------------------------------------------------------
// structure-constant solver on a fixed support

// solution of the left-symmetry equations on a support: one unknown per
// non-loop edge, every unknown nonzero by construction; solved entries are
// polynomials in the remaining free unknowns
struct StructureSolution {
    std::vector<std::string> names;          // c(alpha,beta) label per support edge
    std::vector<std::optional<MPoly>> expr;  // nullopt marks a free parameter
    std::vector<size_t> gauge_fixed;         // pinned to 1 by diagonal rescaling
    std::vector<std::string> residual;       // equations the elimination could not finish
    bool complete = true;

    std::vector<size_t> free_indices() const {
        std::vector<size_t> f;
        for (size_t i = 0; i < expr.size(); ++i)
            if (!expr[i]) f.push_back(i);
        return f;
    }
};

namespace detail {

struct EdgeSystem {
    std::vector<Scalar> roots;
    std::vector<std::pair<Scalar, Scalar>> support;  // non-loop edges (from, to)

    size_t n() const { return support.size(); }
    bool is_root(const Scalar& v) const { return value_in(roots, v); }
    std::optional<size_t> edge_index(const Scalar& from, const Scalar& to) const {
        for (size_t i = 0; i < support.size(); ++i)
            if (support[i].first == from && support[i].second == to) return i;
        return std::nullopt;
    }

    // c_{alpha,beta} as a polynomial in the edge unknowns; the weight action
    // c_{0,beta} = beta and the vanishing of R(e_0) are built in
    MPoly cc(const Scalar& alpha, const Scalar& beta) const {
        size_t m = n();
        if (alpha.is_zero()) return MPoly::constant(m, beta);
        Scalar target = alpha + beta;
        if (beta.is_zero() || !is_root(target)) return MPoly(m);
        if (auto i = edge_index(beta, target)) return MPoly::var(m, *i);
        return MPoly(m);
    }
};

inline MPoly normalize_leading(const MPoly& p) {
    if (p.is_zero()) return p;
    Scalar lead = p.terms().begin()->second;
    return (Scalar::integer(1) / lead) * p;
}

// the associator-symmetry equations over the support; triples touching the
// zero root hold identically, so only nonzero alpha < beta and gamma appear
inline std::vector<MPoly> support_equations(const EdgeSystem& sys) {
    std::vector<Scalar> nz;
    for (const auto& r : sys.roots)
        if (!r.is_zero()) nz.push_back(r);
    std::vector<MPoly> eqs;
    for (size_t i = 0; i < nz.size(); ++i)
        for (size_t j = i + 1; j < nz.size(); ++j) {
            const Scalar &alpha = nz[i], &beta = nz[j];
            MPoly lead = sys.cc(alpha, beta) - sys.cc(beta, alpha);
            for (const auto& gamma : nz) {
                MPoly e = lead * sys.cc(alpha + beta, gamma) -
                          sys.cc(beta, gamma) * sys.cc(alpha, beta + gamma) +
                          sys.cc(alpha, gamma) * sys.cc(beta, alpha + gamma);
                if (e.is_zero()) continue;
                e = normalize_leading(e);
                if (std::find(eqs.begin(), eqs.end(), e) == eqs.end()) eqs.push_back(e);
            }
        }
    return eqs;
}

// incremental exact row reduction, for picking a maximal independent set of
// rescaling exponent vectors
struct ScalarRowBasis {
    std::vector<std::vector<Scalar>> rows;
    std::vector<size_t> pivots;

    bool try_add(std::vector<Scalar> r) {
        for (size_t k = 0; k < rows.size(); ++k) {
            Scalar f = r[pivots[k]];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < r.size(); ++j) r[j] = r[j] - f * rows[k][j];
        }
        size_t p = r.size();
        for (size_t j = 0; j < r.size(); ++j)
            if (!r[j].is_zero()) {
                p = j;
                break;
            }
        if (p == r.size()) return false;
        Scalar inv = Scalar::integer(1) / r[p];
        for (auto& x : r) x = inv * x;
        rows.push_back(std::move(r));
        pivots.push_back(p);
        return true;
    }
};

struct EliminationState {
    size_t m = 0;
    std::vector<std::optional<MPoly>> solved;
    std::vector<MPoly> eqs;
    bool dead = false;

    // strict support: an unknown forced to vanish kills the branch
    void assign(size_t v, const MPoly& e) {
        if (e.is_zero()) {
            dead = true;
            return;
        }
        solved[v] = e;
        for (auto& q : eqs) q = q.subst(v, e);
        for (auto& s : solved)
            if (s) s = s->subst(v, e);
    }
};

inline bool cleanup(EliminationState& st) {
    std::vector<MPoly> next;
    for (auto e : st.eqs) {
        if (e.is_zero()) continue;
        auto cm = e.content_monomial();
        if (std::any_of(cm.begin(), cm.end(), [](unsigned x) { return x != 0; }))
            e = e.divide_by_monomial(cm);  // unknowns are nonzero
        if (e.is_constant()) {
            st.dead = true;
            return false;
        }
        e = normalize_leading(e);
        if (std::find(next.begin(), next.end(), e) == next.end()) next.push_back(e);
    }
    st.eqs = std::move(next);
    return true;
}

inline bool try_linear_move(EliminationState& st) {
    for (size_t k = 0; k < st.eqs.size(); ++k)
        for (size_t v = 0; v < st.m; ++v) {
            if (st.solved[v] || !st.eqs[k].uses_var(v)) continue;
            auto parts = st.eqs[k].collect(v);
            if (parts.size() == 2 && parts[1].is_constant()) {
                MPoly rhs =
                    (Scalar::integer(-1) / parts[1].constant_value()) * parts[0];
                st.eqs.erase(st.eqs.begin() + static_cast<long>(k));
                st.assign(v, rhs);
                return true;
            }
        }
    return false;
}

inline bool try_binomial_move(EliminationState& st) {
    for (size_t k = 0; k < st.eqs.size(); ++k) {
        const auto& terms = st.eqs[k].terms();
        if (terms.size() != 2) continue;
        auto it = terms.begin();
        auto [e1, c1] = *it;
        auto [e2, c2] = *std::next(it);
        auto single = [](const MPoly::Expo& e) -> std::optional<size_t> {
            std::optional<size_t> v;
            for (size_t j = 0; j < e.size(); ++j) {
                if (e[j] == 0) continue;
                if (v || e[j] != 1) return std::nullopt;
                v = j;
            }
            return v;
        };
        for (int side = 0; side < 2; ++side) {
            const auto& ev = side ? e2 : e1;
            const auto& eo = side ? e1 : e2;
            const Scalar& cv = side ? c2 : c1;
            const Scalar& co = side ? c1 : c2;
            auto v = single(ev);
            if (!v || eo[*v] != 0) continue;
            MPoly rhs(st.m);
            rhs.add_term(eo, Scalar() - co / cv);
            st.eqs.erase(st.eqs.begin() + static_cast<long>(k));
            st.assign(*v, rhs);
            return true;
        }
    }
    return false;
}

struct ProbeSolve {
    bool dead = false;
    std::vector<std::optional<MPoly>> solved;
    std::vector<size_t> gauge;
    std::vector<MPoly> residual;

    friend bool operator==(const ProbeSolve& x, const ProbeSolve& y) {
        return x.dead == y.dead && x.solved == y.solved && x.gauge == y.gauge &&
               x.residual == y.residual;
    }
};

inline ProbeSolve eliminate(const EdgeSystem& sys) {
    ProbeSolve out;
    EliminationState st;
    st.m = sys.n();
    st.solved.assign(st.m, std::nullopt);
    st.eqs = support_equations(sys);

    // diagonal rescalings act on an unknown c_{alpha,beta} through the
    // exponent vector chi(alpha) + chi(beta) - chi(alpha+beta); pin a maximal
    // independent set to 1 without moving the isomorphism class
    std::vector<Scalar> nz;
    for (const auto& r : sys.roots)
        if (!r.is_zero()) nz.push_back(r);
    auto root_pos = [&](const Scalar& v) -> std::optional<size_t> {
        for (size_t i = 0; i < nz.size(); ++i)
            if (nz[i] == v) return i;
        return std::nullopt;
    };
    ScalarRowBasis basis;
    for (size_t i = 0; i < st.m && !st.dead; ++i) {
        Scalar alpha = sys.support[i].second - sys.support[i].first;
        Scalar beta = sys.support[i].first;
        std::vector<Scalar> row(nz.size(), Scalar());
        if (auto p = root_pos(alpha)) row[*p] = row[*p] + Scalar::integer(1);
        if (auto p = root_pos(beta)) row[*p] = row[*p] + Scalar::integer(1);
        if (auto p = root_pos(alpha + beta)) row[*p] = row[*p] - Scalar::integer(1);
        if (basis.try_add(row)) {
            st.assign(i, MPoly::constant(st.m, Scalar::integer(1)));
            out.gauge.push_back(i);
        }
    }

    while (!st.dead) {
        if (!cleanup(st)) break;
        if (try_linear_move(st)) continue;
        if (try_binomial_move(st)) continue;
        break;
    }
    out.dead = st.dead;
    out.solved = st.solved;
    out.residual = st.eqs;
    return out;
}

}  // namespace detail

// solve the left-symmetry equations on a candidate support; for a symbolic
// candidate the system is solved at each faithful sample, and the samples must
// agree (the equations have bounded degree in the parameter, so agreeing
// samples pin the family); an empty result means the support admits no
// structure constants
inline std::vector<StructureSolution> solve_structure_constants(const GraphCandidate& cand) {
    std::vector<Scalar> lams =
        cand.symbolic() ? cand.probes : std::vector<Scalar>{Scalar()};
    if (lams.empty()) throw BadParameters("symbolic candidate carries no parameter samples");

    std::optional<detail::ProbeSolve> agreed;
    bool mismatch = false;
    for (const auto& lam : lams) {
        detail::EdgeSystem sys;
        for (const auto& f : cand.vertices) sys.roots.push_back(f.eval(lam));
        for (const auto& [f, t] : cand.edges)
            sys.support.emplace_back(f.eval(lam), t.eval(lam));
        detail::ProbeSolve ps = detail::eliminate(sys);
        if (!agreed) agreed = std::move(ps);
        else if (!(ps == *agreed)) mismatch = true;
    }
    if (agreed->dead) return {};

    StructureSolution sol;
    for (const auto& [f, t] : cand.edges)
        sol.names.push_back("c(" + (t - f).to_string() + "," + f.to_string() + ")");
    sol.expr = agreed->solved;
    sol.gauge_fixed = agreed->gauge;
    for (const auto& r : agreed->residual) sol.residual.push_back(r.to_string(sol.names));
    if (mismatch)
        sol.residual.push_back("parameter samples disagree; branch left unsolved");
    sol.complete = agreed->residual.empty() && !mismatch;
    return {sol};
}

// plug values for the free unknowns into a solution; fails when any unknown
// lands on zero (the support is strict)
inline std::optional<std::vector<Scalar>> resolve_unknowns(
    const StructureSolution& sol, const std::vector<Scalar>& free_values) {
    auto frees = sol.free_indices();
    if (frees.size() != free_values.size())
        throw BadParameters("free value count does not match the solution");
    std::vector<Scalar> point(sol.expr.size(), Scalar());
    for (size_t j = 0; j < frees.size(); ++j) point[frees[j]] = free_values[j];
    std::vector<Scalar> values = point;
    for (size_t i = 0; i < sol.expr.size(); ++i)
        if (sol.expr[i]) values[i] = sol.expr[i]->eval(point);
    for (const auto& v : values)
        if (v.is_zero()) return std::nullopt;
    return values;
}

// deterministic search for a strict assignment of the free unknowns
inline std::optional<std::vector<Scalar>> default_unknown_values(const StructureSolution& sol) {
    static const std::vector<Scalar> pool = {
        Scalar::integer(1),  Scalar::integer(2),  Scalar::integer(3),
        Scalar::integer(-1), Scalar::rational(Rational(1, 2)), Scalar::integer(-2),
        Scalar::integer(4),  Scalar::integer(5),  Scalar::integer(-3)};
    size_t k = sol.free_indices().size();
    std::vector<Scalar> pick(k, Scalar());
    std::optional<std::vector<Scalar>> found;
    auto rec = [&](auto&& self, size_t depth) -> bool {
        if (depth == k) {
            found = resolve_unknowns(sol, pick);
            return found.has_value();
        }
        for (const auto& v : pool) {
            pick[depth] = v;
            if (self(self, depth + 1)) return true;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

// build the algebra on the candidate's roots with the given unknown values
inline Algebra realize(const GraphCandidate& cand, const Scalar& lam,
                       const std::vector<Scalar>& unknown_values,
                       const std::string& name = "solved") {
    std::vector<Scalar> roots;
    for (const auto& f : cand.vertices) roots.push_back(f.eval(lam));
    std::sort(roots.begin(), roots.end());
    Algebra A(name, roots.size());
    std::vector<std::string> labels;
    for (const auto& r : roots) labels.push_back(detail::root_label(r));
    A.set_labels(labels);
    auto idx = [&](const Scalar& v) -> size_t {
        for (size_t i = 0; i < roots.size(); ++i)
            if (roots[i] == v) return i;
        throw BadParameters("value outside the root set");
    };
    size_t z = idx(Scalar());
    for (size_t i = 0; i < roots.size(); ++i)
        if (!roots[i].is_zero()) A.set_c(z, i, i, roots[i]);
    for (size_t k = 0; k < cand.edges.size(); ++k) {
        Scalar f = cand.edges[k].first.eval(lam), t = cand.edges[k].second.eval(lam);
        A.set_c(idx(t - f), idx(f), idx(t), unknown_values.at(k));
    }
    return A;
}

// ---------------------------------------------------------------------------
// the lambda = 2 projective line

// isomorphism test for the coupled lambda = 2 family: triples are isomorphic
// exactly when they agree as projective points, with the zero triple alone in
// its class
inline bool iso_family5(const std::array<Scalar, 3>& t, const std::array<Scalar, 3>& u) {
    for (const auto& x : {t, u})
        if (!(x[0] + x[0] == x[1] + x[2]))
            throw BadParameters("family5_mod parameters need 2*alpha = beta + gamma");
    auto zero = [](const std::array<Scalar, 3>& x) {
        return x[0].is_zero() && x[1].is_zero() && x[2].is_zero();
    };
    if (zero(t) || zero(u)) return zero(t) && zero(u);
    return t[0] * u[1] == t[1] * u[0] && t[0] * u[2] == t[2] * u[0] &&
           t[1] * u[2] == t[2] * u[1];
}

// ---------------------------------------------------------------------------
// classification pipeline

struct VerificationFlags {
    bool left_symmetric = false;
    bool complete = false;
    bool canonical = false;
    bool simple = false;
    bool graph_properties = false;

    bool all_ok() const {
        return left_symmetric && complete && canonical && simple && graph_properties;
    }
};

inline VerificationFlags verify_classified(const Algebra& A) {
    VerificationFlags f;
    f.left_symmetric = is_left_symmetric(A);
    if (!f.left_symmetric) return f;
    f.complete = is_complete(A).verdict;
    if (!f.complete) return f;
    try {
        auto [gl, gr] = left_right_graphs(A);
        f.canonical = true;
        f.simple = is_simple(A).simple;
        f.graph_properties = check_properties(gl).all_ok() && check_properties(gr).all_ok() &&
                             check_simple_properties(gl, gr, A).all_ok();
    } catch (const Error&) {
    }
    return f;
}

struct ClassifiedFamily {
    std::string label;
    std::vector<std::string> parameters;
    std::vector<std::string> constraints;
    std::vector<Algebra> representatives;
    std::vector<std::array<Scalar, 3>> points;  // (alpha, beta, gamma) per representative
    std::vector<std::string> distinguished;
    bool projective_line = false;
    bool verified = false;
    bool solver_complete = true;
};

struct ClassificationReport {
    size_t dim = 0;
    bool enumeration_only = false;  // dimension 6: no completeness-of-list claim
    size_t candidate_count = 0;
    size_t discarded_candidates = 0;  // supports admitting no structure constants
    std::vector<ClassifiedFamily> families;

    bool all_verified() const {
        return std::all_of(families.begin(), families.end(), [](const ClassifiedFamily& f) {
            return f.verified && f.solver_complete;
        });
    }
};

namespace detail {

inline bool same_left_graph(const Algebra& x, const Algebra& y) {
    if (x.dim() != y.dim()) return false;
    try {
        RootGraph gx = left_right_graphs(x).first;
        RootGraph gy = left_right_graphs(y).first;
        if (gx.vertices.size() != gy.vertices.size() || gx.edges.size() != gy.edges.size())
            return false;
        for (size_t i = 0; i < gx.vertices.size(); ++i)
            if (!(gx.vertices[i] == gy.vertices[i])) return false;
        for (size_t i = 0; i < gx.edges.size(); ++i)
            if (!(gx.edges[i].from == gy.edges[i].from && gx.edges[i].to == gy.edges[i].to &&
                  gx.edges[i].c == gy.edges[i].c))
                return false;
        return true;
    } catch (const Error&) {
        return false;
    }
}

inline bool is_pm12_root_set(const GraphCandidate& cand) {
    if (cand.symbolic() || cand.vertices.size() != 5) return false;
    std::vector<Scalar> want = {Scalar::integer(-2), Scalar::integer(-1), Scalar(),
                                Scalar::integer(1), Scalar::integer(2)};
    for (const auto& w : want) {
        bool found = false;
        for (const auto& f : cand.vertices) found = found || f.a == w;
        if (!found) return false;
    }
    return true;
}

inline std::array<Scalar, 3> extract_triple(const GraphCandidate& cand,
                                            const std::vector<Scalar>& values) {
    // canonical presentations may carry the root relabeling v -> -v, which
    // moves the couplings to the mirrored edges with the same values
    std::array<Scalar, 3> t = {Scalar(), Scalar(), Scalar()};
    auto scan = [&](long s) {
        bool hit = false;
        for (size_t k = 0; k < cand.edges.size(); ++k) {
            const Scalar& f = cand.edges[k].first.a;
            const Scalar& to = cand.edges[k].second.a;
            if (f == Scalar::integer(-s) && to == Scalar::integer(s)) t[0] = values[k], hit = true;
            if (f == Scalar::integer(2 * s) && to == Scalar::integer(s)) t[1] = values[k], hit = true;
            if (f == Scalar::integer(-s) && to == Scalar::integer(-2 * s)) t[2] = values[k], hit = true;
        }
        return hit;
    };
    if (!scan(1)) scan(-1);
    return t;
}

inline std::string triple_str(const std::array<Scalar, 3>& t) {
    return "(" + t[0].to_string() + ", " + t[1].to_string() + ", " + t[2].to_string() + ")";
}

}  // namespace detail

inline ClassificationReport classify(size_t dim) {
    if (dim < 2 || dim > 6)
        throw BadParameters("classification covers dimensions 2 through 6");
    ClassificationReport report;
    report.dim = dim;
    report.enumeration_only = (dim == 6);
    auto cands = enumerate_graphs(dim, default_vertex_templates(dim));
    report.candidate_count = cands.size();

    struct LineRep {
        Algebra alg;
        std::array<Scalar, 3> point;
        bool has_free_parameter;
        VerificationFlags flags;
    };
    std::vector<LineRep> line;

    std::vector<std::pair<std::string, Algebra>> refs;
    if (dim == 3) refs.emplace_back("auslander3", auslander3());
    if (dim == 4) refs.emplace_back("simple4", simple4());
    if (dim >= 5) refs.emplace_back("series" + std::to_string(dim), series(dim));

    for (const auto& cand : cands) {
        auto sols = solve_structure_constants(cand);
        if (sols.empty()) {
            ++report.discarded_candidates;
            continue;
        }
        for (const auto& sol : sols) {
            if (!sol.complete) {
                ClassifiedFamily fam;
                fam.label = "unsolved" + cand.key();
                fam.solver_complete = false;
                fam.constraints = sol.residual;
                report.families.push_back(std::move(fam));
                continue;
            }
            auto values = default_unknown_values(sol);
            if (!values) {
                ClassifiedFamily fam;
                fam.label = "unsolved" + cand.key();
                fam.solver_complete = false;
                fam.constraints = {"no strict assignment of the free unknowns found"};
                report.families.push_back(std::move(fam));
                continue;
            }

            if (detail::is_pm12_root_set(cand)) {
                Algebra alg = realize(cand, Scalar(), *values);
                auto point = detail::extract_triple(cand, *values);
                alg.set_name("family5_mod" + detail::triple_str(point));
                LineRep r{std::move(alg), point, !sol.free_indices().empty(),
                          VerificationFlags{}};
                r.flags = verify_classified(r.alg);
                line.push_back(std::move(r));
                continue;
            }

            ClassifiedFamily fam;
            std::vector<Scalar> lams =
                cand.symbolic() ? cand.probes : std::vector<Scalar>{Scalar()};
            bool ok = true;
            for (const auto& lam : lams) {
                Algebra alg = realize(cand, lam, *values);
                ok = ok && verify_classified(alg).all_ok();
                fam.representatives.push_back(std::move(alg));
            }
            fam.verified = ok;
            if (cand.symbolic()) {
                bool matches = true;
                for (size_t i = 0; i < lams.size(); ++i)
                    matches = matches &&
                              detail::same_left_graph(fam.representatives[i], family5(lams[i]));
                if (matches) {
                    fam.label = "family5(lambda)";
                    fam.parameters = {"lambda"};
                    fam.constraints = {
                        "lambda outside {0, 1, -1}",
                        "lambda = 2 handled separately (coupled line)",
                        "lambda ~ -lambda ~ 1/lambda give the same algebra"};
                    for (size_t i = 0; i < lams.size(); ++i)
                        fam.representatives[i].set_name("family5(" + lams[i].to_string() + ")");
                } else {
                    fam.label = "unrecognized" + cand.key();
                }
            } else {
                fam.label = "unrecognized" + cand.key();
                for (const auto& [name, ref] : refs)
                    if (detail::same_left_graph(fam.representatives.front(), ref)) {
                        fam.label = name;
                        fam.representatives.front().set_name(name);
                        break;
                    }
            }
            report.families.push_back(std::move(fam));
        }
    }

    if (!line.empty()) {
        ClassifiedFamily fam;
        fam.label = "family5_mod";
        fam.projective_line = true;
        fam.parameters = {"(alpha : beta : gamma)"};
        fam.constraints = {"2*alpha = beta + gamma",
                           "triples proportional by a nonzero scalar are isomorphic",
                           "(0, 0, 0) is the uncoupled family5(2)"};
        fam.verified = true;
        for (const auto& r : line) {
            bool dup = false;
            for (const auto& p : fam.points) dup = dup || iso_family5(p, r.point);
            if (dup) continue;
            fam.points.push_back(r.point);
            fam.representatives.push_back(r.alg);
            fam.verified = fam.verified && r.flags.all_ok();
            const auto& t = r.point;
            bool az = t[0].is_zero(), bz = t[1].is_zero(), gz = t[2].is_zero();
            if (az && bz && gz)
                fam.distinguished.push_back("(0 : 0 : 0) plain family5(2)");
            else if (az)
                fam.distinguished.push_back("alpha = 0 at (0 : 1 : -1)");
            else if (bz)
                fam.distinguished.push_back("beta = 0 at (1 : 0 : 2)");
            else if (gz)
                fam.distinguished.push_back("gamma = 0 at (1 : 2 : 0)");
            else if (r.has_free_parameter)
                fam.constraints.push_back(
                    "generic stratum: free alpha with beta = 2*alpha - 1, gamma = 1");
        }
        report.families.push_back(std::move(fam));
    }

    std::sort(report.families.begin(), report.families.end(),
              [](const ClassifiedFamily& x, const ClassifiedFamily& y) {
                  return x.label < y.label;
              });
    return report;
}

inline nlohmann::json classification_to_json(const ClassificationReport& r) {
    nlohmann::json j;
    j["dim"] = r.dim;
    j["enumeration_only"] = r.enumeration_only;
    j["candidate_count"] = r.candidate_count;
    j["discarded_candidates"] = r.discarded_candidates;
    j["families"] = nlohmann::json::array();
    for (const auto& f : r.families) {
        nlohmann::json jf;
        jf["label"] = f.label;
        jf["parameters"] = f.parameters;
        jf["constraints"] = f.constraints;
        jf["projective_line"] = f.projective_line;
        jf["verified"] = f.verified;
        jf["solver_complete"] = f.solver_complete;
        jf["representatives"] = nlohmann::json::array();
        for (const auto& a : f.representatives) jf["representatives"].push_back(a.name());
        jf["distinguished"] = f.distinguished;
        jf["points"] = nlohmann::json::array();
        for (const auto& p : f.points) jf["points"].push_back(detail::triple_str(p));
        j["families"].push_back(std::move(jf));
    }
    return j;
}

}  // namespace lsa
