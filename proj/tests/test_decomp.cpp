#include <catch2/catch_amalgamated.hpp>

#include "lsa/catalog.hpp"
#include "lsa/decomposition.hpp"

using namespace lsa;

namespace {

Scalar q(long n, long d = 1) { return Scalar::rational(Rational(n, d)); }

Vec vec3(long a, long b, long c) { return {q(a), q(b), q(c)}; }

Subspace span1(const Vec& v) { return Subspace::span_of(v); }

// product = bracket/2 turns any Lie bracket table into an algebra whose
// commutator reproduces the bracket
Algebra algebra_from_bracket(const std::string& name, size_t dim,
                             const std::vector<std::tuple<size_t, size_t, size_t, Scalar>>& br) {
    Algebra A(name, dim);
    for (const auto& [i, j, k, v] : br) {
        A.set_c(i, j, k, A.c(i, j, k) + v / Scalar::integer(2));
        A.set_c(j, i, k, A.c(j, i, k) - v / Scalar::integer(2));
    }
    return A;
}

// sl2: [h,e] = 2e, [h,f] = -2f, [e,f] = h  (indices h=0, e=1, f=2)
Algebra sl2_control() {
    return algebra_from_bracket("sl2-control", 3,
                                {{0, 1, 1, Scalar::integer(2)},
                                 {0, 2, 2, Scalar::integer(-2)},
                                 {1, 2, 0, Scalar::integer(1)}});
}

const RootPart* find_part(const RootDecomposition& dec, const Scalar& root) {
    for (const auto& p : dec.parts)
        if (p.root.size() == 1 && p.root[0] == root) return &p;
    return nullptr;
}

}  // namespace

TEST_CASE("solvability of the underlying Lie algebra") {
    for (const auto& entry : standard_catalog()) CHECK(is_solvable_lie(entry.algebra));
    CHECK(is_solvable_lie(idempotent1()));
    CHECK_FALSE(is_solvable_lie(sl2_control()));
    CHECK_THROWS_AS(cartan_subalgebra(sl2_control()), NotSolvable);
}

TEST_CASE("nilpotency and normalizers in the Auslander algebra") {
    Algebra A = auslander3();
    Subspace whole = Subspace::whole(3);
    CHECK_FALSE(is_nilpotent_lie(A, whole));
    CHECK(is_nilpotent_lie(A, span1(vec3(0, 1, 0))));
    CHECK(is_nilpotent_lie(A, Subspace::from_rows({vec3(1, 0, 0), vec3(0, 0, 1)}, 3)));

    // [e0, e-1] = -e-1 keeps e0 inside the normalizer of span(e-1)
    CHECK(normalizer(A, span1(vec3(1, 0, 0))) == whole);
    CHECK(normalizer(A, span1(vec3(0, 1, 0))) == span1(vec3(0, 1, 0)));
    CHECK(normalizer(A, span1(vec3(0, 1, 1))) == span1(vec3(0, 1, 1)));

    CHECK(is_cartan(A, span1(vec3(0, 1, 0))));
    CHECK(is_cartan(A, span1(vec3(0, 1, 1))));
    CHECK_FALSE(is_cartan(A, span1(vec3(1, 0, 0))));
    CHECK_FALSE(is_cartan(A, whole));
}

TEST_CASE("cartan_subalgebra from seeds") {
    Algebra A = auslander3();
    CHECK(cartan_subalgebra(A, vec3(0, 1, 0)) == span1(vec3(0, 1, 0)));
    CHECK(cartan_subalgebra(A, vec3(0, 1, 1)) == span1(vec3(0, 1, 1)));
    // e-1 is not regular: ad(e-1) is nilpotent, so the Fitting null is the
    // whole (non-nilpotent) algebra; perturbation walks to e-1 + e0
    CHECK(cartan_subalgebra(A, vec3(1, 0, 0)) == span1(vec3(1, 1, 0)));
    CHECK(cartan_subalgebra(A) == span1(vec3(0, 1, 0)));
    CHECK_THROWS_AS(cartan_subalgebra(A, vec3(1, 0, 0), 1), SeedNotRegular);
    CHECK_THROWS_AS(cartan_subalgebra(A, Vec{q(1)}), DimensionMismatch);

    Algebra Z = zero_algebra(3);
    CHECK(cartan_subalgebra(Z) == Subspace::whole(3));

    Algebra F = family5(Scalar::integer(3));
    Vec e0(5);
    e0[2] = q(1);
    CHECK(cartan_subalgebra(F, e0) == Subspace::span_of(e0));
}

TEST_CASE("root decomposition of the Auslander algebra, regular Cartan") {
    Algebra A = auslander3();
    Subspace h = span1(vec3(0, 1, 0));

    auto ad_dec = root_decomposition(A, h, Rep::ad);
    REQUIRE(ad_dec.parts.size() == 3);
    CHECK(ad_dec.parts[0].root[0] == q(-1));
    CHECK(ad_dec.parts[0].space == span1(vec3(1, 0, 0)));
    CHECK(ad_dec.parts[1].root[0] == q(0));
    CHECK(ad_dec.parts[1].space == h);
    CHECK(ad_dec.parts[2].root[0] == q(1));
    CHECK(ad_dec.parts[2].space == span1(vec3(0, 0, 1)));

    auto l_dec = root_decomposition(A, h, Rep::L);
    REQUIRE(l_dec.parts.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(l_dec.parts[i].root[0] == ad_dec.parts[i].root[0]);
        CHECK(l_dec.parts[i].space == ad_dec.parts[i].space);
    }
    CHECK(is_canonical(A, h));
}

TEST_CASE("root decomposition wrt the non-canonical Cartan span(e0+e1)") {
    Algebra A = auslander3();
    Subspace h = span1(vec3(0, 1, 1));

    auto ad_dec = root_decomposition(A, h, Rep::ad);
    REQUIRE(ad_dec.parts.size() == 3);
    CHECK(ad_dec.parts[0].space == span1(vec3(1, 0, 0)));   // root -1
    CHECK(ad_dec.parts[1].space == span1(vec3(0, 1, 1)));   // root 0
    CHECK(ad_dec.parts[2].space == span1(vec3(0, 0, 1)));   // root 1

    auto l_dec = root_decomposition(A, h, Rep::L);
    REQUIRE(l_dec.parts.size() == 3);
    CHECK(l_dec.parts[0].space == span1(vec3(1, -1, 0)));   // span(e-1 - e0)
    CHECK(l_dec.parts[1].space == span1(vec3(0, 1, 0)));    // span(e0)
    CHECK(l_dec.parts[2].space == span1(vec3(0, 0, 1)));

    CHECK_FALSE(is_canonical(A, h));
    CHECK_THROWS_AS(root_decomposition(A, span1(vec3(1, 0, 0)), Rep::ad), NotCartan);
}

TEST_CASE("unit membership in the zero weight space of the extension") {
    Algebra A = auslander3();
    Algebra E = unital_extension(A);
    Vec unit = unit_vec(4, 3);

    auto good = root_decomposition(E, detail::lifted_cartan(E, span1(vec3(0, 1, 0))),
                                   Rep::L, false);
    REQUIRE(good.parts.size() == 3);
    CHECK(good.parts[1].root[0] == q(0));
    CHECK(good.parts[1].space.dim() == 2);
    CHECK(good.parts[1].space.contains(unit));

    auto bad = root_decomposition(E, detail::lifted_cartan(E, span1(vec3(0, 1, 1))),
                                  Rep::L, false);
    REQUIRE(bad.parts.size() == 3);
    CHECK(bad.parts[1].root[0] == q(0));
    // g1^0 = span(e0, 1 - e1); the unit is not inside
    CHECK(bad.parts[1].space == Subspace::from_rows({{q(0), q(1), q(0), q(0)},
                                                     {q(0), q(0), q(-1), q(1)}},
                                                    4));
    CHECK_FALSE(bad.parts[1].space.contains(unit));
}

TEST_CASE("grading: part(a) * part(b) lands in part(a+b)") {
    std::vector<Algebra> algebras = {auslander3(), simple4(), family5(Scalar::integer(3)),
                                     family5_mod(q(1), q(2), q(0)), series(5)};
    for (const Algebra& A : algebras) {
        auto [h, w] = make_canonical(A);
        auto dec = root_decomposition(A, h, Rep::L);
        for (const auto& pa : dec.parts)
            for (const auto& pb : dec.parts) {
                Scalar sum = pa.root[0] + pb.root[0];
                const RootPart* target = find_part(dec, sum);
                for (size_t i = 0; i < pa.space.dim(); ++i)
                    for (size_t j = 0; j < pb.space.dim(); ++j) {
                        Vec prod = A.multiply(pa.space.basis_vector(i), pb.space.basis_vector(j));
                        if (target)
                            CHECK(target->space.contains(prod));
                        else
                            CHECK(vec_is_zero(prod));
                    }
            }
    }
}

TEST_CASE("transport_to_unit") {
    Algebra A = auslander3();

    SECTION("already at the unit") {
        TransportWord w = transport_to_unit(A, {q(0), q(0), q(0), q(1)});
        CHECK(w.factors.empty());
    }

    SECTION("1 - e1 transports with the single factor e1") {
        Vec x = {q(0), q(0), q(-1), q(1)};
        TransportWord w = transport_to_unit(A, x);
        REQUIRE(w.factors.size() == 1);
        CHECK(w.factors[0] == vec3(0, 0, 1));
        Algebra E = unital_extension(A);
        CHECK(word_action(E, w) * x == Vec{q(0), q(0), q(0), q(1)});
    }

    SECTION("dim 4: 1 + e2 transports with the single factor -e2") {
        Algebra S = simple4();
        Vec x = {q(0), q(0), q(0), q(1), q(1)};
        TransportWord w = transport_to_unit(S, x);
        REQUIRE(w.factors.size() == 1);
        CHECK(w.factors[0] == Vec{q(0), q(0), q(0), q(-1)});
    }

    SECTION("rejects points off the chart and incomplete algebras") {
        CHECK_THROWS_AS(transport_to_unit(A, vec3(0, 0, 1)), BadParameters);
        CHECK_THROWS_AS(transport_to_unit(A, {q(0), q(0), q(1), q(2)}), BadParameters);
        CHECK_THROWS_AS(transport_to_unit(idempotent1(), {q(1), q(1)}), NotComplete);
    }
}

TEST_CASE("make_canonical on the Auslander algebra") {
    Algebra A = auslander3();
    Subspace canon = span1(vec3(0, 1, 0));

    auto [h1, w1] = make_canonical(A, vec3(0, 1, 0));
    CHECK(h1 == canon);
    CHECK(w1.factors.empty());

    auto [h2, w2] = make_canonical(A, vec3(0, 1, 1));
    CHECK(h2 == canon);
    REQUIRE(w2.factors.size() == 1);
    CHECK(w2.factors[0] == vec3(0, 0, 1));  // the worked transport word [e1]

    // seed e-1 perturbs to the third Cartan span(e-1 + e0); same canonical h
    auto [h3, w3] = make_canonical(A, vec3(1, 0, 0));
    CHECK(h3 == canon);
    REQUIRE(w3.factors.size() == 1);
    CHECK(w3.factors[0] == vec3(-1, 0, 0));

    auto [h4, w4] = make_canonical(A);
    CHECK(h4 == canon);

    CHECK_THROWS_AS(make_canonical(idempotent1()), NotComplete);
}

TEST_CASE("make_canonical across the catalog") {
    for (const auto& entry : standard_catalog()) {
        if (!entry.complete) continue;
        auto [h, w] = make_canonical(entry.algebra);
        INFO(entry.name);
        CHECK(is_canonical(entry.algebra, h));
        CHECK(semisimple_parts_agree(entry.algebra, h));
        CHECK(derivation_check(entry.algebra, h));
    }
}

TEST_CASE("make_canonical is seed independent") {
    struct Case {
        Algebra algebra;
        std::vector<Vec> seeds;
    };
    std::vector<Case> cases;
    cases.push_back({auslander3(), {vec3(0, 1, 0), vec3(0, 1, 1), vec3(1, 0, 0), vec3(0, 2, 1)}});
    cases.push_back({simple4(),
                     {{q(0), q(1), q(0), q(0)},
                      {q(0), q(1), q(1), q(0)},
                      {q(0), q(1), q(0), q(1)}}});
    cases.push_back({family5(Scalar::integer(3)),
                     {{q(0), q(0), q(1), q(0), q(0)},
                      {q(0), q(0), q(1), q(1), q(0)},
                      {q(0), q(1), q(1), q(0), q(1)}}});
    for (auto& [algebra, seeds] : cases) {
        auto [h0, w0] = make_canonical(algebra, seeds[0]);
        for (size_t s = 1; s < seeds.size(); ++s) {
            auto [h, w] = make_canonical(algebra, seeds[s]);
            INFO(algebra.name() << " seed " << s);
            CHECK(h == h0);
        }
    }
}

TEST_CASE("semisimple parts and derivations") {
    Algebra A = auslander3();
    Subspace canon = span1(vec3(0, 1, 0));
    CHECK(semisimple_parts_agree(A, canon));
    CHECK(derivation_check(A, canon));
    CHECK_THROWS_AS(semisimple_parts_agree(A, span1(vec3(0, 1, 1))), NotCanonical);
    CHECK_THROWS_AS(derivation_check(A, span1(vec3(0, 1, 1))), NotCanonical);

    // L(e0) = diag(-1,0,1) is already semisimple and equals ad(e0)
    Matrix s = jordan_chevalley_semisimple(A.left_op(vec3(0, 1, 0)));
    CHECK(s == A.left_op(vec3(0, 1, 0)));

    Algebra Z = zero_algebra(2);
    Subspace whole = Subspace::whole(2);
    CHECK(is_canonical(Z, whole));
    CHECK(semisimple_parts_agree(Z, whole));
    CHECK(derivation_check(Z, whole));
}

TEST_CASE("numeric mode decomposition") {
    Algebra N = to_numeric(auslander3());
    auto [h, w] = make_canonical(N);
    REQUIRE(h.dim() == 1);
    Vec e0 = {Scalar::numeric(0), Scalar::numeric(1), Scalar::numeric(0)};
    CHECK(h.contains(e0));
    CHECK(is_canonical(N, h));

    // transport of a non-lattice point converges within the iteration cap
    Vec x = {Scalar::numeric(0.3), Scalar::numeric(-0.2), Scalar::numeric(0.7),
             Scalar::numeric(1)};
    TransportWord tw = transport_to_unit(N, x);
    Algebra E = unital_extension(N);
    Vec moved = word_action(E, tw) * x;
    CHECK(moved[3].approx_equal(Scalar::numeric(1), 1e-8));
    for (size_t i = 0; i < 3; ++i) CHECK(moved[i].approx_equal(Scalar::numeric(0), 1e-8));
}
