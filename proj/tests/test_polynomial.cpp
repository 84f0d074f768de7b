#include <catch2/catch_amalgamated.hpp>

#include "lsa/matrix.hpp"
#include "lsa/polynomial.hpp"

using lsa::Matrix;
using lsa::Poly;
using lsa::Rational;
using lsa::Scalar;

namespace {

Scalar z(long n) { return Scalar::integer(n); }

Poly poly(std::initializer_list<long> low_first) {
    std::vector<Scalar> c;
    for (long v : low_first) c.push_back(z(v));
    return Poly(c);
}

}  // namespace

TEST_CASE("polynomial ring operations") {
    Poly f = poly({-1, 0, 1});       // t^2 - 1
    Poly g = poly({1, 1});           // t + 1
    CHECK(f == poly({-1, 1}) * g);   // (t-1)(t+1)
    CHECK((f + g) == poly({0, 1, 1}));
    CHECK(f.eval(z(3)) == z(8));
    CHECK(f.derivative() == poly({0, 2}));

    auto [quo, rem] = f.divmod(g);
    CHECK(quo == poly({-1, 1}));
    CHECK(rem.is_zero());

    auto [q2, r2] = poly({1, 0, 0, 1}).divmod(poly({1, 1}));  // t^3+1 by t+1
    CHECK(q2 == poly({1, -1, 1}));
    CHECK(r2.is_zero());
}

TEST_CASE("gcd and squarefree part") {
    Poly f = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});  // (t-1)^2 (t+2)
    Poly sf = lsa::squarefree_part(f);
    CHECK(sf == (poly({-1, 1}) * poly({2, 1})).monic());
    CHECK(lsa::poly_gcd(poly({-1, 0, 1}), poly({1, 1})) == poly({1, 1}));
    CHECK(lsa::poly_gcd(poly({-1, 0, 1}), poly({2, 1})).degree() == 0);
}

TEST_CASE("characteristic polynomial via trace recursion") {
    Matrix d(3, 3);
    d(0, 0) = z(-1);
    d(2, 2) = z(1);
    CHECK(lsa::charpoly(d) == poly({0, -1, 0, 1}));  // t^3 - t

    Matrix c(2, 2);
    c(0, 1) = z(2);
    c(1, 0) = z(1);
    CHECK(lsa::charpoly(c) == poly({-2, 0, 1}));  // t^2 - 2

    // Cayley-Hamilton spot check
    Matrix m = Matrix::from_rows({{z(1), z(2)}, {z(3), z(4)}});
    CHECK(lsa::charpoly(m).eval(m).is_zero());
}

TEST_CASE("rational and gaussian roots are found exactly") {
    auto r = lsa::roots_in_qi(poly({0, -1, 0, 1}));  // t(t-1)(t+1)
    REQUIRE(r.roots.size() == 3);
    CHECK(r.roots[0].first == z(-1));
    CHECK(r.roots[1].first == z(0));
    CHECK(r.roots[2].first == z(1));
    CHECK(r.remainder.degree() <= 0);

    auto ri = lsa::roots_in_qi(poly({1, 0, 1}));  // t^2 + 1
    REQUIRE(ri.roots.size() == 2);
    CHECK(ri.roots[0].first == Scalar::i() * z(-1));
    CHECK(ri.roots[1].first == Scalar::i());

    auto rm = lsa::roots_in_qi(poly({1, -2, 1}));  // (t-1)^2
    REQUIRE(rm.roots.size() == 1);
    CHECK(rm.roots[0].first == z(1));
    CHECK(rm.roots[0].second == 2);

    auto rq = lsa::roots_in_qi(Poly({Scalar::rational(Rational(-1, 2)), z(0), z(1)}) *
                               Poly({Scalar::i() * z(-1), z(1)}));
    // (t^2 - 1/2)(t - i): only the gaussian root is in the field
    REQUIRE(rq.roots.size() == 1);
    CHECK(rq.roots[0].first == Scalar::i());
    CHECK(rq.remainder.degree() == 2);

    auto irr = lsa::roots_in_qi(poly({-2, 0, 1}));  // t^2 - 2
    CHECK(irr.roots.empty());
    CHECK(irr.remainder == poly({-2, 0, 1}).monic());
}

TEST_CASE("gaussian integer factorisation underpins root search") {
    using lsa::detail::GInt;
    GInt five{lsa::BigInt(5), lsa::BigInt(0)};
    auto fs = lsa::detail::factor_gaussian(five);
    REQUIRE(fs.size() == 2);  // (2+i)(2-i) up to units
    GInt prod{lsa::BigInt(1), lsa::BigInt(0)};
    for (auto& [p, e] : fs)
        for (int k = 0; k < e; ++k) prod = prod * p;
    // product recovers 5 up to a unit
    CHECK(prod.norm() == 25);

    auto divs = lsa::detail::gaussian_divisors(GInt{lsa::BigInt(2), lsa::BigInt(0)});
    // divisors of 2 up to units: 1, 1+i, 2
    CHECK(divs.size() == 3);
}

TEST_CASE("deflation preserves the product structure") {
    Poly f = poly({-6, 11, -6, 1});  // (t-1)(t-2)(t-3)
    Poly g = f.deflate(z(2));
    CHECK(g == poly({3, -4, 1}));
    CHECK(g * poly({-2, 1}) == f);
}
