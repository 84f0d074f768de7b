#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <vector>

#include "lsa/catalog.hpp"
#include "lsa/ideals.hpp"
#include "lsa/root_graph.hpp"

using namespace lsa;

namespace {

Scalar sc(long n) { return Scalar::integer(n); }

GraphEdge ge(long from, long to, long c = 1) { return {sc(from), sc(to), sc(c)}; }

std::vector<Scalar> verts(std::initializer_list<long> xs) {
    std::vector<Scalar> v;
    for (long x : xs) v.push_back(sc(x));
    return v;
}

using EdgeSet = std::set<std::pair<std::string, std::string>>;

EdgeSet edge_set(const RootGraph& g) {
    EdgeSet s;
    for (const auto& e : g.edges) s.insert({e.from.to_string(), e.to.to_string()});
    return s;
}

EdgeSet edges(std::initializer_list<std::pair<const char*, const char*>> xs) {
    EdgeSet s;
    for (const auto& [a, b] : xs) s.insert({a, b});
    return s;
}

void check_only_fails(const PropertyReport& rep, const std::string& name) {
    for (const auto& c : rep.checks) {
        INFO(c.property << ": " << c.witness);
        if (c.property == name)
            CHECK_FALSE(c.ok);
        else
            CHECK(c.ok);
    }
}

}  // namespace

TEST_CASE("left and right graphs of the three-dimensional algebra") {
    auto [gl, gr] = left_right_graphs(auslander3());

    CHECK(gl.kind == GraphKind::left);
    REQUIRE(gl.vertices.size() == 3);
    CHECK(gl.vertices[0] == sc(-1));
    CHECK(gl.vertices[1] == sc(0));
    CHECK(gl.vertices[2] == sc(1));

    CHECK(edge_set(gl) ==
          edges({{"1", "0"}, {"-1", "0"}, {"1", "1"}, {"-1", "-1"}}));
    // loop coefficients are the root values themselves
    CHECK(gl.find_edge(sc(1), sc(1))->c == sc(1));
    CHECK(gl.find_edge(sc(-1), sc(-1))->c == sc(-1));
    CHECK(gl.find_edge(sc(1), sc(0))->c == sc(1));

    CHECK(gr.kind == GraphKind::right);
    CHECK(edge_set(gr) ==
          edges({{"-1", "0"}, {"1", "0"}, {"0", "1"}, {"0", "-1"}}));
    CHECK(gr.find_edge(sc(0), sc(-1))->c == sc(-1));
}

TEST_CASE("graphs of the four-dimensional algebra match the figures") {
    auto [gl, gr] = left_right_graphs(simple4());

    CHECK(edge_set(gl) == edges({{"-1", "0"},
                                 {"1", "0"},
                                 {"-1", "1"},
                                 {"2", "1"},
                                 {"-1", "-1"},
                                 {"1", "1"},
                                 {"2", "2"}}));
    CHECK(edge_set(gr) == edges({{"0", "-1"},
                                 {"0", "1"},
                                 {"0", "2"},
                                 {"-1", "0"},
                                 {"1", "0"},
                                 {"2", "1"},
                                 {"-1", "1"}}));
    // c_{-1,2} = 2 sits on the left edge 2 -> 1
    CHECK(gl.find_edge(sc(2), sc(1))->c == sc(2));
}

TEST_CASE("left graph of the dimension-five series member") {
    auto [gl, gr] = left_right_graphs(series(5));
    (void)gr;
    CHECK(edge_set(gl) == edges({{"-1", "0"},
                                 {"1", "0"},
                                 {"2", "1"},
                                 {"3", "2"},
                                 {"-1", "1"},
                                 {"-1", "2"},
                                 {"-1", "-1"},
                                 {"1", "1"},
                                 {"2", "2"},
                                 {"3", "3"}}));
}

TEST_CASE("duality exchanges the two graphs and is an involution") {
    auto [gl, gr] = left_right_graphs(auslander3());

    RootGraph d = dual_graph(gl);
    CHECK(d.kind == GraphKind::right);
    CHECK(edge_set(d) == edge_set(gr));
    for (const auto& e : d.edges)
        CHECK(gr.find_edge(e.from, e.to)->c == e.c);

    auto [gl4, gr4] = left_right_graphs(simple4());
    CHECK(edge_set(dual_graph(dual_graph(gl4))) == edge_set(gl4));
    CHECK(dual_graph(dual_graph(gl4)).kind == GraphKind::left);
    CHECK(edge_set(dual_graph(gl4)) == edge_set(gr4));
    CHECK(edge_set(dual_graph(gr4)) == edge_set(gl4));

    RootGraph empty = make_graph(GraphKind::left, {}, {});
    CHECK(dual_graph(empty).edges.empty());
    CHECK(dual_graph(empty).kind == GraphKind::right);

    // a dualized edge may introduce its displacement as a new vertex
    RootGraph g = make_graph(GraphKind::left, verts({0, 1, 3}), {ge(1, 3)});
    RootGraph dg = dual_graph(g);
    CHECK(dg.has_vertex(sc(2)));
    CHECK(dg.has_edge(sc(2), sc(3)));
}

TEST_CASE("build_graph rejects fat root spaces and non-canonical input") {
    Algebra Z = zero_algebra(2);
    auto dec = root_decomposition(Z, cartan_subalgebra(Z), Rep::L);
    CHECK_THROWS_AS(build_graph(Z, dec, GraphKind::left), NotOneDimensional);

    Algebra A = auslander3();
    Subspace bad = Subspace::span_of({Scalar(), Scalar::integer(1), Scalar::integer(1)});
    auto bdec = root_decomposition(A, bad, Rep::L);
    CHECK_THROWS_AS(build_graph(A, bdec, GraphKind::left), NotCanonical);
}

TEST_CASE("property suites pass on every simple catalog algebra") {
    for (const auto& entry : standard_catalog()) {
        if (!entry.simple) continue;
        INFO(entry.name);
        auto [gl, gr] = left_right_graphs(entry.algebra);
        auto repl = check_properties(gl);
        for (const auto& c : repl.checks) {
            INFO(c.property << ": " << c.witness);
            CHECK(c.ok);
        }
        auto repr = check_properties(gr);
        for (const auto& c : repr.checks) {
            INFO(c.property << ": " << c.witness);
            CHECK(c.ok);
        }
        auto reps = check_simple_properties(gl, gr, entry.algebra);
        for (const auto& c : reps.checks) {
            INFO(c.property << ": " << c.witness);
            CHECK(c.ok);
        }
    }
}

TEST_CASE("simplicity properties fail on non-simple algebras") {
    // triangular 2-dim algebra: e0 e1 = e1, complete but with ideal span(e1)
    Algebra T("triangular2", 2);
    T.set_c(0, 1, 1, Scalar::integer(1));
    REQUIRE(is_left_symmetric(T));
    REQUIRE(is_complete(T).verdict);
    REQUIRE_FALSE(is_simple(T).simple);

    auto [gl, gr] = left_right_graphs(T);
    CHECK(edge_set(gl) == edges({{"1", "1"}}));
    CHECK(edge_set(gr) == edges({{"0", "1"}}));
    CHECK(check_properties(gl).all_ok());
    CHECK(check_properties(gr).all_ok());

    auto rep = check_simple_properties(gl, gr, T);
    CHECK_FALSE(rep.all_ok());
    CHECK_FALSE(rep.check("s1").ok);  // no displacement-1 edge on the left
    CHECK_FALSE(rep.check("s2").ok);  // 0 unreachable from 1
    CHECK_FALSE(rep.check("s3").ok);  // no symmetric pair at all

    // fat root spaces of the zero algebras already violate the dim-1 hypothesis
    for (const auto& entry : standard_catalog()) {
        if (entry.simple) continue;
        INFO(entry.name);
        auto dec = root_decomposition(entry.algebra, cartan_subalgebra(entry.algebra), Rep::L);
        CHECK_THROWS_AS(build_graph(entry.algebra, dec, GraphKind::left), NotOneDimensional);
    }
}

TEST_CASE("r5 path counting") {
    auto [gl4, gr4] = left_right_graphs(simple4());
    (void)gl4;
    // two closed paths for lambda = -1: mu = 0 via 0 -> 2 -> 1 -> 0 and
    // mu = -1 via -1 -> 1 -> 0 -> -1
    CHECK(gr4.has_edge(sc(0), sc(2)));
    CHECK(gr4.has_edge(sc(2), sc(1)));
    CHECK(gr4.has_edge(sc(1), sc(0)));
    CHECK(gr4.has_edge(sc(-1), sc(1)));
    CHECK(gr4.has_edge(sc(0), sc(-1)));
    CHECK(check_properties(gr4).check("r5").ok);

    // keeping only the first path must trip the parity argument
    RootGraph single = make_graph(
        GraphKind::right, verts({-1, 0, 1, 2}),
        {ge(0, 1), ge(0, 2), ge(0, -1), ge(1, 0), ge(-1, 0), ge(2, 1)});
    auto rep = check_properties(single);
    check_only_fails(rep, "r5");
    CHECK(rep.check("r5").witness == "single path for mu = 0, lambda = -1");
}

TEST_CASE("each left property fails alone on its counterexample") {
    auto run = [](std::vector<Scalar> vs, std::vector<GraphEdge> es, const std::string& name) {
        auto rep = check_properties(make_graph(GraphKind::left, std::move(vs), std::move(es)));
        check_only_fails(rep, name);
    };
    run(verts({-1, 0, 1}), {ge(1, 0), ge(-1, 0), ge(-1, -1, -1)}, "l1");
    run(verts({0, 1, 2}), {ge(1, 1), ge(2, 2, 2), ge(2, 1)}, "l2");
    run(verts({0, 1}), {ge(0, 1), ge(1, 1)}, "l3");
    run(verts({-1, 0, 1}), {ge(1, 0), ge(1, 1), ge(-1, -1, -1)}, "l4");
    run(verts({-1, 0, 1, 2}),
        {ge(-1, -1, -1), ge(1, 1), ge(2, 2, 2), ge(1, 2), ge(2, 1), ge(1, 0), ge(-1, 0, 2)},
        "l5");
    run(verts({0, 1, 2, 4}), {ge(1, 1), ge(2, 2, 2), ge(4, 4, 4), ge(1, 2), ge(2, 4)}, "l6");
}

TEST_CASE("each right property fails alone on its counterexample") {
    auto run = [](std::vector<Scalar> vs, std::vector<GraphEdge> es, const std::string& name) {
        auto rep = check_properties(make_graph(GraphKind::right, std::move(vs), std::move(es)));
        check_only_fails(rep, name);
    };
    run(verts({-1, 0, 1}), {ge(1, 0), ge(-1, 0), ge(0, 1)}, "r1");
    run(verts({0, 1, 2}), {ge(0, 1), ge(0, 2), ge(2, 1)}, "r2");
    run(verts({0, 1}), {ge(0, 1), ge(1, 1)}, "r3");
    run(verts({-1, 0, 1}), {ge(0, 1), ge(0, -1), ge(1, 0)}, "r4");
}

TEST_CASE("l6 accepts the degenerate parallelogram and says so") {
    // 1 -> 2 -> 3 completes only through the pair itself (mu-lambda = nu-mu)
    RootGraph g = make_graph(
        GraphKind::left, verts({0, 1, 2, 3}),
        {ge(1, 1), ge(2, 2, 2), ge(3, 3, 3), ge(1, 2), ge(2, 3)});
    auto rep = check_properties(g);
    CHECK(rep.check("l6").ok);
    CHECK(rep.check("l6").degenerate_note);

    // the catalog's series algebras complete 2 -> 1 -> 0 the same way
    auto [gl, gr] = left_right_graphs(simple4());
    (void)gr;
    auto rep4 = check_properties(gl);
    CHECK(rep4.check("l6").ok);
    CHECK(rep4.check("l6").degenerate_note);
}

TEST_CASE("each simplicity property fails alone on its counterexample") {
    // s1: drop the only right out-edge at vertex 3 of family5(3)
    auto [gl5, gr5] = left_right_graphs(family5(sc(3)));
    RootGraph cut = gr5;
    std::erase_if(cut.edges,
                  [](const GraphEdge& e) { return e.from == sc(3) && e.to == sc(0); });
    auto rep1 = check_simple_properties(gl5, cut, family5(sc(3)));
    check_only_fails(rep1, "s1");
    CHECK(rep1.check("s1").witness == "no out-edge at 3");

    // s2: a two-vertex whirl at {5, 10} that never reaches 0
    auto [gl, gr] = left_right_graphs(auslander3());
    RootGraph gl2 = gl, gr2 = gr;
    gl2.vertices.push_back(sc(5));
    gl2.vertices.push_back(sc(10));
    gl2.edges.push_back(ge(5, 10));
    gl2.edges.push_back(ge(10, 5));
    gl2.edges.push_back(ge(0, 10));
    gr2.vertices.push_back(sc(5));
    gr2.vertices.push_back(sc(10));
    gr2.edges.push_back(ge(5, 10));
    gr2.edges.push_back(ge(10, 5));
    auto rep2 = check_simple_properties(gl2, gr2, auslander3());
    check_only_fails(rep2, "s2");
    CHECK(rep2.check("s2").witness == "0 unreachable from 5");

    // s3: chain 2 -> 1 -> 0 with no symmetric pair anywhere
    RootGraph l3 = make_graph(GraphKind::left, verts({0, 1, 2}),
                              {ge(1, 0), ge(2, 1), ge(0, 1), ge(0, 2), ge(1, 1)});
    RootGraph r3 = make_graph(GraphKind::right, verts({0, 1, 2}),
                              {ge(0, 1), ge(0, 2), ge(1, 0), ge(2, 1)});
    auto rep3 = check_simple_properties(l3, r3, auslander3());
    check_only_fails(rep3, "s3");
}

TEST_CASE("left edge data reproduces the structure constant support") {
    for (const auto& entry : standard_catalog()) {
        if (!entry.simple) continue;
        INFO(entry.name);
        const Algebra& A = entry.algebra;
        auto [h, w] = make_canonical(A);
        auto dec = root_decomposition(A, h, Rep::L);
        RootGraph gl = build_graph(A, dec, GraphKind::left);

        for (const auto& pa : dec.parts)
            for (const auto& pb : dec.parts) {
                Scalar alpha = pa.root.at(0), beta = pb.root.at(0);
                Vec prod = A.multiply(pa.space.basis_vector(0), pb.space.basis_vector(0));
                bool nonzero = !vec_is_zero(prod, A.eps());
                if (beta.is_zero()) {
                    CHECK_FALSE(nonzero);  // R(e_0) = 0
                    continue;
                }
                if (alpha.is_zero()) {
                    // L(e_0) acts on e_beta with eigenvalue beta
                    auto coords = pb.space.coordinates_of(prod, A.eps());
                    REQUIRE(coords);
                    CHECK((*coords)[0] == beta);
                    continue;
                }
                CHECK(nonzero == gl.has_edge(beta, alpha + beta));
            }
    }
}

TEST_CASE("edges into 0 come in symmetric pairs on the catalog") {
    for (const auto& entry : standard_catalog()) {
        if (!entry.simple) continue;
        INFO(entry.name);
        auto [gl, gr] = left_right_graphs(entry.algebra);
        for (const auto& e : gl.edges) {
            if (!e.to.is_zero()) continue;
            CHECK(gl.has_edge(-e.from, Scalar()));
            // [e_lambda, e_{-lambda}] = 0 forces equal coefficients
            CHECK(gl.find_edge(-e.from, Scalar())->c == e.c);
        }
        for (const auto& e : gr.edges) {
            if (!e.to.is_zero() || e.from.is_zero()) continue;
            CHECK(gr.has_edge(-e.from, Scalar()));
        }
    }
}

TEST_CASE("numeric graphs agree with the exact ones") {
    Algebra N = to_numeric(simple4());
    auto [gl, gr] = left_right_graphs(N);
    CHECK_FALSE(gl.exact);
    auto [el, er] = left_right_graphs(simple4());

    REQUIRE(gl.vertices.size() == el.vertices.size());
    for (size_t i = 0; i < gl.vertices.size(); ++i)
        CHECK(gl.vertices[i].approx_equal(el.vertices[i], 1e-8));
    CHECK(edge_set(gl).size() == edge_set(el).size());
    for (const auto& e : el.edges) CHECK(gl.has_edge(e.from, e.to));
    CHECK(edge_set(gr).size() == edge_set(er).size());
    CHECK(check_properties(gl).all_ok());
    CHECK(check_properties(gr).all_ok());
    CHECK(check_simple_properties(gl, gr, N).all_ok());
}

TEST_CASE("dot output is deterministic and complete") {
    RootGraph empty = make_graph(GraphKind::left, {}, {});
    CHECK(to_dot(empty) == "digraph root_graph_left {\n  rankdir=LR;\n}\n");

    auto [gl, gr] = left_right_graphs(auslander3());
    (void)gr;
    std::string dot = to_dot(gl);
    CHECK(dot == to_dot(gl));
    CHECK(dot ==
          "digraph root_graph_left {\n"
          "  rankdir=LR;\n"
          "  \"-1\";\n"
          "  \"0\";\n"
          "  \"1\";\n"
          "  \"-1\" -> \"-1\";\n"
          "  \"-1\" -> \"0\";\n"
          "  \"1\" -> \"0\";\n"
          "  \"1\" -> \"1\";\n"
          "}\n");

    auto [gl4, gr4] = left_right_graphs(simple4());
    (void)gr4;
    std::string dot4 = to_dot(gl4);
    CHECK(dot4.find("\"2\" -> \"1\";") != std::string::npos);
    CHECK(dot4.find("\"-1\" -> \"1\";") != std::string::npos);

    nlohmann::json j = graph_to_json(gl);
    CHECK(j["kind"] == "left");
    CHECK(j["vertices"].size() == 3);
    CHECK(j["edges"].size() == 4);
    CHECK(j["edges"][0]["from"] == "-1");
}

TEST_CASE("synthetic graphs reject dangling edges") {
    CHECK_THROWS_AS(make_graph(GraphKind::left, verts({0, 1}), {ge(1, 2)}), BadParameters);
}
