#include <catch2/catch_amalgamated.hpp>

#include "cubica/generate.hpp"
#include "cubica/poly.hpp"
#include "cubica/weil.hpp"
#include "oracles.hpp"

using namespace cubica;

TEST_CASE("rational wire format") {
    CHECK(to_wire(Rational(1, 2)) == "1/2");
    CHECK(to_wire(Rational(3)) == "3/1");
    CHECK(to_wire(Rational(-2, 4)) == "-1/2");
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("1/-2") == Rational(-1, 2));
    CHECK(to_wire(parse_rational("0/5")) == "0/1");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("poly evaluation in the rationals") {
    // p = x1*x2 at (2, 3) -> 6
    Poly<Rational> p = poly_var(2, 0) * poly_var(2, 1);
    CHECK(eval_rational(p, {Rational(2), Rational(3)}) == Rational(6));
    CHECK_THROWS_AS(eval_rational(p, {Rational(2)}), DimensionError);
}

TEST_CASE("poly evaluation at nilpotent points") {
    // p = x1^2 at a square-zero generator -> 0
    WeilContext ctx = make_context(1, 1);
    Poly<Rational> sq = poly_var(1, 0) * poly_var(1, 0);
    WeilElement eps = WeilElement::generator(ctx, 0, 1, 1);
    WeilElement v = eval_in<WeilElement>(sq, {eps}, weil_zero(ctx), [&](const Rational& c) {
        return WeilElement::scalar(ctx, c);
    });
    CHECK(v.is_zero());

    // p = x1*x2 at (p1 + eps[1,1], p2 + eps[2,2])
    WeilContext c22 = make_context(2, 2);
    Rational p1(2), p2(-3);
    WeilElement x = WeilElement::scalar(c22, p1) + WeilElement::generator(c22, 0, 1, 1);
    WeilElement y = WeilElement::scalar(c22, p2) + WeilElement::generator(c22, 0, 2, 2);
    Poly<Rational> prod = poly_var(2, 0) * poly_var(2, 1);
    WeilElement got = eval_in<WeilElement>(prod, {x, y}, weil_zero(c22), [&](const Rational& c) {
        return WeilElement::scalar(c22, c);
    });
    WeilElement want = WeilElement::scalar(c22, p1 * p2) +
                       WeilElement::generator(c22, 0, 2, 2).scaled(p1) +
                       WeilElement::generator(c22, 0, 1, 1).scaled(p2) +
                       WeilElement::generator(c22, 0, 1, 1) * WeilElement::generator(c22, 0, 2, 2);
    CHECK(got == want);
    // cross-check the product expansion against the Grassmann oracle
    CHECK(oracles::to_grassmann(got) == oracles::to_grassmann(x) * oracles::to_grassmann(y));
}

TEST_CASE("antiderivative") {
    // x1^2 -> x1^3/3
    Poly<Rational> p = poly_var(1, 0) * poly_var(1, 0);
    Poly<Rational> F = antiderivative(p, 0);
    Poly<Rational> want = poly_zero<Rational>(1);
    want.add_term({3}, Rational(1, 3));
    CHECK(F == want);
    CHECK(antiderivative(poly_zero<Rational>(2), 1).is_zero());

    // x1*x2 in var 2 -> x1*x2^2/2, checked by differentiating back
    Poly<Rational> q = poly_var(2, 0) * poly_var(2, 1);
    Poly<Rational> Fq = antiderivative(q, 1);
    CHECK(partial_derivative(Fq, 1) == q);
    Poly<Rational> wantq = poly_zero<Rational>(2);
    wantq.add_term({1, 2}, Rational(1, 2));
    CHECK(Fq == wantq);
}

TEST_CASE("antiderivative then derivative is the identity") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const int vars = static_cast<int>(rng.range(1, 3));
        Poly<Rational> p = random_poly(rng, vars, 3);
        for (int v = 0; v < vars; ++v) CHECK(partial_derivative(antiderivative(p, v), v) == p);
    }
}

TEST_CASE("iterated unit integral") {
    // frozen expected values from the power-rule oracle
    CHECK(oracles::monomial_cube_integral({1, 0}) == Rational(1, 2));
    CHECK(oracles::monomial_cube_integral({1, 1}) == Rational(1, 4));

    CHECK(iterated_unit_integral(poly_const(2, Rational(3))) == Rational(3));
    CHECK(iterated_unit_integral(poly_var(2, 0)) == Rational(1, 2));
    CHECK(iterated_unit_integral(poly_var(2, 0) * poly_var(2, 1)) == Rational(1, 4));

    Rng rng(12);
    for (int t = 0; t < 20; ++t) {
        const int vars = static_cast<int>(rng.range(1, 3));
        Poly<Rational> p = random_poly(rng, vars, 3);
        CHECK(iterated_unit_integral(p) == oracles::poly_cube_integral(p));
    }
}

TEST_CASE("iterated integral is linear and order independent") {
    Rng rng(13);
    for (int t = 0; t < 10; ++t) {
        Poly<Rational> p = random_poly(rng, 3, 3);
        Poly<Rational> q = random_poly(rng, 3, 3);
        const Rational a = rng.rational(), b = rng.rational();
        CHECK(iterated_unit_integral(poly_scale(p, a) + poly_scale(q, b)) ==
              a * iterated_unit_integral(p) + b * iterated_unit_integral(q));
        // Fubini: both iteration orders agree
        CHECK(iterated_unit_integral_order(p, {0, 1, 2}, Rational(0)) ==
              iterated_unit_integral_order(p, {2, 0, 1}, Rational(0)));
    }
}

TEST_CASE("compose_maps") {
    Rng rng(14);
    PolyMap<Rational> g = random_poly_map(rng, 2, 2, 3);
    CHECK(compose_maps(g, identity_map(2)) == g);
    CHECK(compose_maps(identity_map(2), g) == g);

    // g = x1 + x2 composed with f = (t, t) -> 2t
    PolyMap<Rational> sum = make_poly_map(2, {poly_var(2, 0) + poly_var(2, 1)});
    PolyMap<Rational> diag = make_poly_map(1, {poly_var(1, 0), poly_var(1, 0)});
    CHECK(compose_maps(sum, diag) ==
          make_poly_map(1, {poly_scale(poly_var(1, 0), Rational(2))}));

    CHECK_THROWS_AS(compose_maps(sum, identity_map(3)), DimensionError);
}

TEST_CASE("composition with the subdivision map gives the subdivided simplex") {
    // [[x0, x1, x2]] o h_{1/2,1} = [[x0, (x0+x1)/2, x2]], coefficientwise
    std::vector<std::vector<Rational>> pts = {{Rational(1), Rational(2)},
                                              {Rational(4), Rational(-1)},
                                              {Rational(0), Rational(3)}};
    PolyMap<Rational> cube = affine_cube_map(pts);
    PolyMap<Rational> left = compose_maps(cube, subdivision_h(2, 1, Rational(1, 2)));
    std::vector<std::vector<Rational>> mid = pts;
    for (int i = 0; i < 2; ++i) mid[1][i] = (pts[0][i] + pts[1][i]) / 2;
    CHECK(left == affine_cube_map(mid));
}

TEST_CASE("compose_maps is associative") {
    Rng rng(15);
    for (int t = 0; t < 5; ++t) {
        PolyMap<Rational> f = random_poly_map(rng, 2, 2, 2);
        PolyMap<Rational> g = random_poly_map(rng, 2, 2, 2);
        PolyMap<Rational> h = random_poly_map(rng, 2, 2, 2);
        CHECK(compose_maps(h, compose_maps(g, f)) == compose_maps(compose_maps(h, g), f));
    }
}

TEST_CASE("partial derivative") {
    Poly<Rational> p = poly_var(1, 0) * poly_var(1, 0);
    Poly<Rational> want = poly_scale(poly_var(1, 0), Rational(2));
    CHECK(partial_derivative(p, 0) == want);
    CHECK(partial_derivative(poly_const(2, Rational(5)), 1).is_zero());

    // x1*x2^2 in var 2 -> 2*x1*x2, checked against the shifted-point oracle
    Poly<Rational> q = poly_var(2, 0) * poly_var(2, 1) * poly_var(2, 1);
    Poly<Rational> dq = partial_derivative(q, 1);
    Rng rng(16);
    for (int t = 0; t < 8; ++t) {
        std::vector<Rational> x = random_point(rng, 2);
        CHECK(eval_rational(dq, x) == oracles::derivative_at(q, 1, x));
    }
}

TEST_CASE("graded lexicographic order is canonical") {
    Poly<Rational> p = poly_zero<Rational>(2);
    p.add_term({2, 0}, Rational(1));
    p.add_term({0, 1}, Rational(1));
    p.add_term({1, 1}, Rational(1));
    std::vector<Exps> keys;
    for (const auto& [e, c] : p.terms) keys.push_back(e);
    CHECK(keys == std::vector<Exps>{{0, 1}, {1, 1}, {2, 0}});
}
