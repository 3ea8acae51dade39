#include <catch2/catch_amalgamated.hpp>

#include "cubica/generate.hpp"
#include "cubica/relations.hpp"

using namespace cubica;

namespace {

Simplex rational_simplex(const WeilContext& ctx, const std::vector<std::vector<Rational>>& pts) {
    Simplex s;
    for (const auto& p : pts) s.verts.push_back(rational_point(ctx, p));
    return s;
}

}  // namespace

TEST_CASE("pipe faces") {
    Simplex p = generic_simplex({Rational(0), Rational(0)}, 2);  // P(x; y, z)

    // d^0_1 P(x;y,z) = P(x;z)
    Simplex f01 = pipe_face(p, 0, 1);
    CHECK(f01.verts == std::vector<InfPoint>{p.verts[0], p.verts[2]});

    // d^1_1 P(x;y,z) = P(y; y-x+z)
    Simplex f11 = pipe_face(p, 1, 1);
    CHECK(f11.verts[0] == p.verts[1]);
    CHECK(f11.verts[1] == p.verts[1] - p.verts[0] + p.verts[2]);

    // cubical relation d^0_1 d^0_2 = d^0_1 d^0_1 on a 2-pipe, both P(x)
    CHECK(pipe_face(pipe_face(p, 0, 2), 0, 1) == pipe_face(pipe_face(p, 0, 1), 0, 1));
    CHECK(pipe_face(pipe_face(p, 0, 2), 0, 1).verts == std::vector<InfPoint>{p.verts[0]});

    CHECK_THROWS_AS(pipe_face(p, 0, 3), DimensionError);
}

TEST_CASE("pipe symmetries") {
    Simplex edge = generic_simplex({Rational(1)}, 1);
    // e_1 P(x;y) = P(x; x, y)
    Simplex deg = pipe_degeneracy(edge, 1);
    CHECK(deg.verts == std::vector<InfPoint>{edge.verts[0], edge.verts[0], edge.verts[1]});

    // s_1 P(x;y,z) = P(x;z,y)
    Simplex sq = generic_simplex({Rational(0), Rational(0)}, 2);
    CHECK(pipe_transposition(sq, 1).verts ==
          std::vector<InfPoint>{sq.verts[0], sq.verts[2], sq.verts[1]});

    // r_1 P(x;y) = P(y;x)
    CHECK(pipe_reversion(edge, 1).verts == std::vector<InfPoint>{edge.verts[1], edge.verts[0]});
}

TEST_CASE("singular cube structure") {
    // face(0,1) of the identity on R^2 is s |-> (0, s)
    SingularCube<Rational> id2 = identity_cube(2);
    SingularCube<Rational> f = cube_face(id2, 0, 1);
    CHECK(f.map == make_poly_map(1, {poly_zero<Rational>(1), poly_var(1, 0)}));

    // degeneracy(1) then face(0,1) is the identity (cubical relation)
    CHECK(cube_face(cube_degeneracy(id2, 1), 0, 1) == id2);

    // faces of [[x0,...,xn]] are the [[...]] of the corresponding sub-simplex
    WeilContext ctx = make_context(0, 2);
    std::vector<std::vector<Rational>> pts = {{Rational(1), Rational(0)},
                                              {Rational(2), Rational(5)},
                                              {Rational(-1), Rational(1)}};
    SingularCube<Rational> cube = make_cube(affine_cube_map(pts));
    Simplex s = rational_simplex(ctx, pts);
    for (int i = 1; i <= 2; ++i)
        for (int a = 0; a <= 1; ++a) {
            Simplex face = pipe_face(s, a, i);
            std::vector<std::vector<Rational>> fp;
            for (const auto& v : face.verts) fp.push_back(v.base());
            CHECK(cube_face(cube, a, i).map == affine_cube_map(fp));
        }
}

TEST_CASE("the affine cube of a pipe intertwines all structure") {
    Rng rng(31);
    for (int n = 1; n <= 3; ++n) {
        Simplex p = generic_simplex(random_point(rng, 3), n);
        SingularCube<WeilElement> c = cube_of_simplex(p);
        for (int i = 1; i <= n; ++i) {
            for (int a = 0; a <= 1; ++a)
                CHECK(cube_face(c, a, i) == cube_of_simplex(pipe_face(p, a, i)));
            CHECK(cube_reversion(c, i) == cube_of_simplex(pipe_reversion(p, i)));
            CHECK(cube_degeneracy(c, i) == cube_of_simplex(pipe_degeneracy(p, i)));
            const Rational s = rng.rational();
            auto [c1, c2] = cube_subdivide(c, i, s);
            auto [p1, p2] = pipe_subdivide(p, i, s);
            CHECK(c1 == cube_of_simplex(p1));
            CHECK(c2 == cube_of_simplex(p2));
        }
        for (int i = 1; i + 1 <= n; ++i)
            CHECK(cube_transposition(c, i) == cube_of_simplex(pipe_transposition(p, i)));
    }
}

TEST_CASE("subdivision of the identity square at one half") {
    SingularCube<Rational> id2 = identity_cube(2);
    auto [f1, f2] = cube_subdivide(id2, 1, Rational(1, 2));
    // frozen: f' = [[0, e1/2, e2]], f'' = [[e1/2, e1, e1/2 + e2]]
    std::vector<std::vector<Rational>> left = {{Rational(0), Rational(0)},
                                               {Rational(1, 2), Rational(0)},
                                               {Rational(0), Rational(1)}};
    std::vector<std::vector<Rational>> right = {{Rational(1, 2), Rational(0)},
                                                {Rational(1), Rational(0)},
                                                {Rational(1, 2), Rational(1)}};
    CHECK(f1.map == affine_cube_map(left));
    CHECK(f2.map == affine_cube_map(right));

    // s = 1: f' = f and f'' is degenerate in direction i
    auto [g1, g2] = cube_subdivide(id2, 1, Rational(1));
    CHECK(g1 == id2);
    CHECK(g2 == cube_degeneracy(cube_face(id2, 1, 1), 1));
}

TEST_CASE("pipe subdivision matches the parallelogram picture") {
    // P(x;y,z) subdivides into P(x;y(s),z) and P(y(s); y, u(s))
    Simplex p = generic_simplex({Rational(0), Rational(0)}, 2);
    const Rational s(2, 5);
    auto [p1, p2] = pipe_subdivide(p, 1, s);
    const InfPoint ys = point_scaled(p.verts[0], Rational(1) - s) + point_scaled(p.verts[1], s);
    const InfPoint u = p.verts[1] - p.verts[0] + p.verts[2];
    const InfPoint us = point_scaled(p.verts[2], Rational(1) - s) + point_scaled(u, s);
    CHECK(p1.verts == std::vector<InfPoint>{p.verts[0], ys, p.verts[2]});
    CHECK(p2.verts == std::vector<InfPoint>{ys, p.verts[1], us});

    // subdivision pieces are infinitesimal pipes again
    CHECK(is_infinitesimal(p1));
    CHECK(is_infinitesimal(p2));
}

TEST_CASE("cubical relations on generic pipes up to dimension 4") {
    Rng rng(32);
    for (int n = 1; n <= 4; ++n) {
        Simplex p = generic_simplex(random_point(rng, n), n);
        std::vector<std::string> fails;
        relation_failures(p, n, pipe_carrier_ops(), fails);
        CAPTURE(n, fails);
        CHECK(fails.empty());
    }
}

TEST_CASE("cubical relations on random polynomial cubes") {
    Rng rng(33);
    for (int t = 0; t < 10; ++t) {
        const int n = static_cast<int>(rng.range(1, 3));
        SingularCube<Rational> f = random_cube(rng, n, static_cast<int>(rng.range(1, 3)), 3);
        std::vector<std::string> fails;
        relation_failures(f, n, cube_carrier_ops<Rational>(), fails);
        CAPTURE(t, n, fails);
        CHECK(fails.empty());
    }
}

TEST_CASE("subdivision equations and face propagation") {
    Rng rng(34);
    const auto cube_subdiv = [](const SingularCube<Rational>& f, int i, const Rational& s) {
        return cube_subdivide(f, i, s);
    };
    const auto pipe_subdiv = [](const Simplex& p, int i, const Rational& s) {
        return pipe_subdivide(p, i, s);
    };
    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= n; ++i) {
            const Rational s = rng.rational();
            std::vector<std::string> fails;
            SingularCube<Rational> f = random_cube(rng, n, 3, 3);
            subdivision_failures(f, n, i, s, cube_carrier_ops<Rational>(), cube_subdiv, fails);
            Simplex p = generic_simplex(random_point(rng, n), n);
            subdivision_failures(p, n, i, s, pipe_carrier_ops(), pipe_subdiv, fails);
            CAPTURE(n, i, fails);
            CHECK(fails.empty());
        }
}

TEST_CASE("pipe composition") {
    WeilContext ctx = make_context(0, 2);
    // P(0; e1, e2) o_1 P(e1; 2e1, e1+e2) = P(0; 2e1, e2)
    Simplex a = rational_simplex(ctx, {{Rational(0), Rational(0)},
                                       {Rational(1), Rational(0)},
                                       {Rational(0), Rational(1)}});
    Simplex b = rational_simplex(ctx, {{Rational(1), Rational(0)},
                                       {Rational(2), Rational(0)},
                                       {Rational(1), Rational(1)}});
    Simplex want = rational_simplex(ctx, {{Rational(0), Rational(0)},
                                          {Rational(2), Rational(0)},
                                          {Rational(0), Rational(1)}});
    CHECK(pipe_compose(a, b, 1) == want);

    // identity law: P +_i e_i d^1_i P = P, and inverses compose to identities
    Simplex p = generic_simplex({Rational(1), Rational(2)}, 2);
    for (int i = 1; i <= 2; ++i) {
        CHECK(pipe_compose(p, pipe_identity(p, i), i) == p);
        CHECK(pipe_compose(p, pipe_reversion(p, i), i) ==
              pipe_degeneracy(pipe_face(p, 0, i), i));
    }

    // mismatched faces are rejected
    CHECK_THROWS_AS(pipe_compose(a, want, 1), CompositionError);
}

TEST_CASE("subdivision pieces recompose") {
    Rng rng(35);
    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= n; ++i) {
            Simplex p = generic_simplex(random_point(rng, n), n);
            const Rational s = rng.rational();
            auto [p1, p2] = pipe_subdivide(p, i, s);
            CHECK(pipe_compose(p1, p2, i) == p);
        }
}

TEST_CASE("pipe composition is associative via double subdivision") {
    Rng rng(36);
    Simplex p = generic_simplex(random_point(rng, 2), 2);
    auto [a, rest] = pipe_subdivide(p, 1, Rational(1, 3));
    auto [b, c] = pipe_subdivide(rest, 1, Rational(1, 2));
    CHECK(pipe_compose(pipe_compose(a, b, 1), c, 1) == pipe_compose(a, pipe_compose(b, c, 1), 1));
}

TEST_CASE("interchange law on pipes") {
    Rng rng(37);
    Simplex p = generic_simplex(random_point(rng, 2), 2);
    auto [l, r] = pipe_subdivide(p, 1, Rational(1, 2));
    auto [x, z] = pipe_subdivide(l, 2, Rational(1, 3));
    auto [y, w] = pipe_subdivide(r, 2, Rational(1, 3));
    CHECK(pipe_compose(pipe_compose(x, y, 1), pipe_compose(z, w, 1), 2) ==
          pipe_compose(pipe_compose(x, z, 2), pipe_compose(y, w, 2), 1));
}

TEST_CASE("the pipe groupoid is a cubical equivalence relation") {
    Rng rng(38);
    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= n; ++i) {
            Simplex p = generic_simplex(random_point(rng, 3), n);
            auto solved = solve_pipe(pipe_face(p, 0, i), pipe_face(p, 1, i), i);
            REQUIRE(solved.has_value());
            CHECK(*solved == p);

            // shifting only the base of the target face breaks the slot
            // constraints for n >= 2 (for n = 1 any two endpoints bound
            // exactly one edge, necessarily a different one)
            Simplex q1 = pipe_face(p, 1, i);
            q1.verts[0].coords[0] =
                q1.verts[0].coords[0] + WeilElement::scalar(p.context(), Rational(1));
            auto resolved = solve_pipe(pipe_face(p, 0, i), q1, i);
            if (n >= 2)
                CHECK_FALSE(resolved.has_value());
            else
                CHECK_FALSE(*resolved == p);
        }
}

TEST_CASE("boundary shells") {
    PipeOps ops;
    Simplex edge = generic_simplex({Rational(0), Rational(0)}, 1);
    PipeShell sh1 = boundary_shell(edge, ops);
    CHECK(sh1.directions() == 1);
    CHECK(sh1.face(0, 1).verts == std::vector<InfPoint>{edge.verts[0]});
    CHECK(sh1.face(1, 1).verts == std::vector<InfPoint>{edge.verts[1]});

    // generic 2- and 3-pipes produce shells whose corners match up
    for (int n = 2; n <= 3; ++n) {
        Simplex p = generic_simplex(std::vector<Rational>(n, Rational(1)), n);
        PipeShell sh = boundary_shell(p, ops);
        CHECK(sh.directions() == n);
        CHECK_NOTHROW(require_shell_adjacency(sh, ops));
    }

    // a corrupted face family is rejected
    Simplex p = generic_simplex({Rational(0), Rational(0)}, 2);
    std::vector<std::array<Simplex, 2>> faces;
    for (int i = 1; i <= 2; ++i) faces.push_back({pipe_face(p, 0, i), pipe_face(p, 1, i)});
    std::swap(faces[0][0], faces[0][1]);
    CHECK_THROWS_AS(make_shell(std::move(faces), ops), AdjacencyError);
}

TEST_CASE("shell composition and identities over pipes") {
    Rng rng(39);
    PipeOps ops;
    Simplex p = generic_simplex(random_point(rng, 3), 3);
    auto [p1, p2] = pipe_subdivide(p, 2, Rational(1, 2));
    PipeShell sh = shell_compose(boundary_shell(p1, ops), boundary_shell(p2, ops), 2, ops);
    CHECK(sh == boundary_shell(p, ops));
    CHECK(shell_invert(boundary_shell(p, ops), 1, ops) ==
          boundary_shell(pipe_reversion(p, 1), ops));
    CHECK(shell_identity(pipe_face(p, 1, 1), 1, ops) ==
          boundary_shell(pipe_degeneracy(pipe_face(p, 1, 1), 1), ops));
}
