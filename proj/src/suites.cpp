#include "cubica/suites.hpp"

#include <sstream>

#include "cubica/serialize.hpp"

namespace cubica {

namespace {

std::string idx(const std::string& head, int t) {
    std::ostringstream os;
    os << head << "-" << (t < 10 ? "0" : "") << t;
    return os.str();
}

std::vector<std::vector<Rational>> grid_bases(int m, int maxv) {
    std::vector<std::vector<Rational>> out;
    std::vector<int> v(m, 0);
    for (;;) {
        std::vector<Rational> p;
        for (int x : v) p.push_back(Rational(x));
        out.push_back(std::move(p));
        int k = 0;
        while (k < m && ++v[k] > maxv) v[k++] = 0;
        if (k == m) break;
    }
    return out;
}

std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) {
        if (!s.empty()) s += "; ";
        s += x;
    }
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Criterion 1: cubical identity suite on generic pipes (dims 1-4) and random
// polynomial singular cubes.

void criterion_identities(Report& rep, const SuiteConfig& cfg) {
    Rng rng(cfg.seed + 101);
    const int pipe_cap = std::min(4, cfg.dim_cap);
    for (int n = 1; n <= pipe_cap; ++n) {
        std::vector<std::string> fails;
        Simplex p = generic_simplex(random_point(rng, n), n);
        relation_failures(p, n, pipe_carrier_ops(), fails);
        const auto pipe_subdiv = [](const Simplex& s, int i, const Rational& t) {
            return pipe_subdivide(s, i, t);
        };
        for (int i = 1; i <= n; ++i)
            subdivision_failures(p, n, i, rng.rational(), pipe_carrier_ops(), pipe_subdiv, fails);
        rep.add(idx("01-pipe-relations-dim", n), fails.empty(), "", "", join(fails));
    }
    const int cube_trials = std::max(cfg.trials, 50);
    for (int t = 0; t < cube_trials; ++t) {
        const int n = static_cast<int>(rng.range(1, 3));
        SingularCube<Rational> f = random_cube(rng, n, static_cast<int>(rng.range(1, 3)), 3);
        std::vector<std::string> fails;
        relation_failures(f, n, cube_carrier_ops<Rational>(), fails);
        const auto cube_subdiv = [](const SingularCube<Rational>& c, int i, const Rational& s) {
            return cube_subdivide(c, i, s);
        };
        subdivision_failures(f, n, static_cast<int>(rng.range(1, n)), rng.rational(),
                             cube_carrier_ops<Rational>(), cube_subdiv, fails);
        std::string witness;
        if (!fails.empty()) {
            Json w;
            w["relations"] = fails;
            w["cube"] = cube_to_json(f);
            witness = w.dump();
        }
        rep.add(idx("02-cube-relations", t), fails.empty(), "", "", witness);
    }
}

// ---------------------------------------------------------------------------
// Criterion 2: the 30-letter identity, generic and under numeric
// specializations.

void criterion_thirty_letter(Report& rep, const SuiteConfig& cfg) {
    auto [gpd, diagram] = generic_cube_diagram();
    const FreeArrow folded = folding_cube(gpd, diagram);
    rep.add("01-generic-word", folded.is_identity() && folded.src == "7", "id_7",
            arrow_to_string(gpd.graph, folded));
    const FreeArrow regrouped = folding_cube_regrouped(gpd, diagram);
    rep.add("02-regrouped-word", regrouped == folded, arrow_to_string(gpd.graph, folded),
            arrow_to_string(gpd.graph, regrouped));

    Rng rng(cfg.seed + 202);
    Mat2Groupoid mg;
    AdditiveGroupoid ag;
    for (int t = 0; t < cfg.trials; ++t) {
        CubeDiagram<Mat2Groupoid> dm;
        CubeDiagram<AdditiveGroupoid> da;
        for (const auto& k : cube_edge_keys()) {
            dm.edges.emplace(k, random_invertible_mat2(rng));
            da.edges.emplace(k, rng.rational());
        }
        const bool mat_ok =
            folding_cube(mg, dm) == Mat2{} && folding_cube_regrouped(mg, dm) == Mat2{};
        Rational abelian_sum(0);
        for (const auto& f : face_curvature_factors()) abelian_sum += face_curvature(ag, da, f);
        rep.add(idx("03-numeric-specialization", t), mat_ok && abelian_sum == 0, "0/1",
                to_wire(abelian_sum));
    }
}

// ---------------------------------------------------------------------------
// Criterion 3: Bianchi for random polynomial 1-forms on Q^3.

void criterion_bianchi(Report& rep, const SuiteConfig& cfg) {
    Rng rng(cfg.seed + 303);
    for (int t = 0; t < cfg.trials; ++t) {
        ClassicalForm<Rational> w = random_form(rng, 3, 1, 3);
        MnQConnection c = form_to_connection(w);
        const bool ddsym = d_cubical_form(d_cubical_form(w)).is_zero();
        bool halsum = true;
        std::string lhs;
        Json witness;
        for (int b = 0; b < 4 && halsum; ++b) {
            std::vector<Rational> base = random_point(rng, 3);
            Simplex p = generic_simplex(base, 3);
            const WeilElement sum = bianchi_face_curvature_sum(c, p);
            if (!sum.is_zero()) {
                halsum = false;
                lhs = sum.str();
                witness["form"] = form_to_json(w);
                Json b2 = Json::array();
                for (const auto& x : base) b2.push_back(to_wire(x));
                witness["base"] = std::move(b2);
            }
        }
        if (!ddsym) witness["dd"] = "d_c d_c not symbolically zero";
        rep.add(idx("bianchi-form", t), ddsym && halsum, lhs, "0",
                witness.empty() ? "" : witness.dump());
    }
}

// ---------------------------------------------------------------------------
// Criterion 4: Stokes for random (form, cube) pairs at n = 1, 2.

void criterion_stokes(Report& rep, const SuiteConfig& cfg) {
    // the worked case with both sides nonzero
    ClassicalForm<Rational> x1dx2 = form_zero<Rational>(2, 1);
    form_add_term(x1dx2, {2}, poly_var(2, 0));
    const StokesCase base = verify_stokes(x1dx2, identity_cube(2));
    rep.add("01-worked-case", base.pass() && base.lhs == Rational(-1), to_wire(base.lhs),
            to_wire(base.rhs));

    Rng rng(cfg.seed + 404);
    const int n1 = cfg.trials, n2 = std::max(10, cfg.trials / 2);
    for (int t = 0; t < n1 + n2; ++t) {
        const int n = t < n1 ? 1 : 2;
        ClassicalForm<Rational> w = random_form(rng, 3, n, 3);
        SingularCube<Rational> f = t % 2 == 0 ? random_cube(rng, n + 1, 3, 2)
                                              : random_affine_cube(rng, n + 1, 3);
        const StokesCase c = verify_stokes(w, f);
        Json witness;
        if (!c.pass()) {
            witness["form"] = form_to_json(w);
            witness["cube"] = cube_to_json(f);
        }
        rep.add(idx(n == 1 ? "02-stokes-n1" : "03-stokes-n2", t), c.pass(), to_wire(c.lhs),
                to_wire(c.rhs), c.pass() ? "" : witness.dump());
    }
}

// ---------------------------------------------------------------------------
// Criterion 5: subdivision additivity of the integral and exact pipe
// recomposition.

void criterion_subdivision(Report& rep, const SuiteConfig& cfg) {
    Rng rng(cfg.seed + 505);
    const std::vector<Rational> special = {Rational(0), Rational(1), Rational(1, 2), Rational(-1),
                                           Rational(2)};
    const int total = std::max(50, cfg.trials);
    for (int t = 0; t < total; ++t) {
        const int n = static_cast<int>(rng.range(1, 3));
        ClassicalForm<Rational> w = random_form(rng, 3, n, 2);
        SingularCube<Rational> f = random_cube(rng, n, 3, 2);
        const int i = static_cast<int>(rng.range(1, n));
        const Rational s = t < static_cast<int>(special.size()) ? special[t] : rng.rational();
        const SubdivisionCase c = verify_subdivision(w, f, i, s);
        Json witness;
        if (!c.additive()) {
            witness["form"] = form_to_json(w);
            witness["cube"] = cube_to_json(f);
            witness["i"] = i;
            witness["s"] = to_wire(s);
        }
        rep.add(idx("01-integral-additivity", t), c.additive(), to_wire(c.whole),
                to_wire(c.first + c.second), c.additive() ? "" : witness.dump());

        Simplex p = generic_simplex(random_point(rng, 3), n);
        auto [p1, p2] = pipe_subdivide(p, i, s);
        rep.add(idx("02-pipe-recompose", t), pipe_compose(p1, p2, i) == p);
    }
}

// ---------------------------------------------------------------------------
// Criterion 6: the integral along the generic infinitesimal pipe equals the
// combinatorial value.

void criterion_pipe_integrals(Report& rep, const SuiteConfig& cfg) {
    Rng rng(cfg.seed + 606);
    const int per_dim = std::max(5, cfg.trials / 4);
    for (int n = 1; n <= 2; ++n)
        for (int t = 0; t < per_dim; ++t) {
            const int m = static_cast<int>(rng.range(std::max(n, 2), 3));
            ClassicalForm<Rational> w = random_form(rng, m, n, 2);
            bool ok = true;
            for (const auto& base : grid_bases(m, 2)) {
                Simplex p = generic_simplex(base, n);
                ok = ok && integrate_form(w, cube_of_simplex(p)).value == eval_comb(w, p);
            }
            rep.add(idx("pipe-integral-n" + std::to_string(n), t), ok, "", "",
                    ok ? "" : form_to_json(w).dump());
        }
}

// ---------------------------------------------------------------------------
// Criterion 7: theta-hat factorization and the substitution identity.

void criterion_theta_subst(Report& rep, const SuiteConfig& cfg) {
    Rng rng(cfg.seed + 707);
    const int per_dim = std::max(4, cfg.trials / 3);
    for (int n = 1; n <= 3; ++n) {
        for (int t = 0; t < per_dim; ++t) {
            ClassicalForm<Rational> theta = random_form(rng, n, n, 2);
            bool ok = true;
            for (const auto& base : grid_bases(n, 2)) {
                Simplex p = generic_simplex(base, n);
                ok = ok &&
                     eval_comb(theta, p) == vol(p).scaled(eval_rational(theta_hat(theta), base));
            }
            rep.add(idx("01-theta-hat-n" + std::to_string(n), t), ok, "", "",
                    ok ? "" : form_to_json(theta).dump());

            // substitution identity in the tensor-extended algebra
            const int m = n + (n < 3 ? 1 : 0);
            ClassicalForm<Rational> w = random_form(rng, m, n, 2);
            WeilContext ctx = make_context({WeilFamily{n, m}, WeilFamily{n, n}});
            bool sok = true;
            for (int b = 0; b < 4 && sok; ++b) {
                Simplex p = generic_simplex(ctx, 0, random_point(rng, m), n);
                ClassicalForm<WeilElement> pb =
                    pullback(cube_of_simplex(p).map, w, weil_zero(ctx));
                sok = sok && theta_hat(pb) == poly_const(n, eval_comb(w, p));
                Simplex q = generic_simplex(ctx, 1, random_point(rng, n), n);
                sok = sok && eval_comb(pb, q) == eval_comb(w, p) * vol(q);
            }
            rep.add(idx("02-substitution-n" + std::to_string(n), t), sok, "", "",
                    sok ? "" : form_to_json(w).dump());
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 8: coboundary ratio and naturality.

void criterion_coboundary(Report& rep, const SuiteConfig& cfg) {
    Rng rng(cfg.seed + 808);
    for (int n = 1; n <= 3; ++n) {
        ClassicalForm<Rational> w = random_form(rng, n + 1, n, 2);
        bool ratio_ok = true, cochain_ok = true;
        for (const auto& base : grid_bases(n + 1, 2)) {
            Simplex s = generic_simplex(base, n + 1);
            const WeilElement dc = d_cubical_value(w, s);
            ratio_ok = ratio_ok && d_simplicial_value(w, s).scaled(Rational(n + 1)) == dc;
            cochain_ok =
                cochain_ok && simplicial_cochain_value(w, s).scaled(Rational(n + 1)) == -dc;
        }
        rep.add(idx("01-ds-ratio-n", n), ratio_ok, "(n+1)*d_s", "d_c");
        rep.add(idx("02-cochain-route-n", n), cochain_ok, "(n+1)*cochain", "-d_c");

        // measured classical orientation scale
        bool scale_ok = true;
        ClassicalForm<Rational> dw = d_classical(w);
        for (int b = 0; b < 3; ++b) {
            Simplex p = generic_simplex(random_point(rng, n + 1), n + 1);
            scale_ok = scale_ok && eval_comb(dw, p).scaled(classical_orientation_scale(n)) ==
                                       d_cubical_value(w, p);
        }
        rep.add(idx("03-orientation-scale-n", n), scale_ok, "-1/1", "-1/1");
    }
    const int maps = std::max(10, cfg.trials / 2);
    for (int t = 0; t < maps; ++t) {
        const int n = static_cast<int>(rng.range(1, 2));
        const int m = static_cast<int>(rng.range(n, 3));
        const int src = static_cast<int>(rng.range(n + 1, 3));
        ClassicalForm<Rational> w = random_form(rng, m, n, 2);
        PolyMap<Rational> f = random_poly_map(rng, src, m, 2);
        const bool nat = d_classical(pullback(f, w)) == pullback(f, d_classical(w));
        Json witness;
        if (!nat) {
            witness["form"] = form_to_json(w);
            witness["map"] = cube_to_json(make_cube(f));
        }
        rep.add(idx("04-naturality", t), nat, "", "", nat ? "" : witness.dump());
    }
}

// ---------------------------------------------------------------------------
// Criterion 9: alternation (reversion and transposition sign flips,
// degeneracy vanishing), all directions, n <= 3.

void criterion_alternation(Report& rep, const SuiteConfig& cfg) {
    Rng rng(cfg.seed + 909);
    for (int n = 1; n <= 3; ++n)
        for (int t = 0; t < std::max(3, cfg.trials / 6); ++t) {
            ClassicalForm<Rational> w = random_form(rng, 3, n, 2);
            Simplex p = generic_simplex(random_point(rng, 3), n);
            const SymmetryReport sym = check_form_symmetries(w, p);
            std::string witness;
            if (!sym.ok()) {
                Json wj;
                wj["form"] = form_to_json(w);
                wj["reversion_fail"] = sym.reversion_fail;
                wj["transposition_fail"] = sym.transposition_fail;
                wj["degeneracy_fail"] = sym.degeneracy_fail;
                witness = wj.dump();
            }
            rep.add(idx("alternation-n" + std::to_string(n), t), sym.ok(), "", "", witness);
        }
}

// ---------------------------------------------------------------------------
// Criterion 10: structural checks.

void criterion_structural(Report& rep, const SuiteConfig& cfg) {
    // Cr_3(G'') triviality over a free groupoid, constructively
    rep.add("01-cr3-trivial", check_cr3_trivial());

    // the noncommutative transposition counterexample
    FreeGroupOps fg{make_free_group({"a", "b"})};
    GroupPipe<FreeGroupOps> p{{fg.id(), fg.g.generator("a"), fg.g.generator("b")}};
    const auto lhs = group_pipe_face(fg, group_pipe_transposition(fg, p, 1), 1, 1);
    const auto rhs = group_pipe_face(fg, p, 1, 2);
    rep.add("02-transposition-counterexample", !group_pipe_eq(fg, lhs, rhs),
            arrow_to_string(fg.g.graph, lhs.gens[1]), arrow_to_string(fg.g.graph, rhs.gens[1]));

    // form/connection round trips and the folding/coboundary agreement
    Rng rng(cfg.seed + 1010);
    bool roundtrip = true, agreement = true;
    for (int n = 1; n <= 2; ++n)
        for (int t = 0; t < 4; ++t) {
            ClassicalForm<Rational> w = random_form(rng, 3, n, 2);
            MnQConnection c = form_to_connection(w);
            roundtrip = roundtrip && connection_to_form(form_to_connection(w)) == w;
            Simplex q = generic_simplex(random_point(rng, 3), n);
            roundtrip = roundtrip &&
                        connection_value(form_to_connection(connection_to_form(c)), q) ==
                            connection_value(c, q);
            roundtrip = roundtrip && connection_morphism_ok(c, q);
            Simplex s = generic_simplex(random_point(rng, 3), n + 1);
            agreement = agreement && curvature_value(c, s) == d_cubical_value(w, s);
        }
    rep.add("03-connection-roundtrip", roundtrip);
    rep.add("04-hal-dc-agreement", agreement);
}

// ---------------------------------------------------------------------------
// Suite entry points.

Report run_identities_suite(const SuiteConfig& cfg) {
    Report rep{"identities", cfg.seed, {}};
    criterion_identities(rep, cfg);
    criterion_structural(rep, cfg);
    return rep;
}

Report run_bianchi_suite(const SuiteConfig& cfg) {
    Report rep{"bianchi", cfg.seed, {}};
    criterion_thirty_letter(rep, cfg);
    criterion_bianchi(rep, cfg);
    return rep;
}

Report run_stokes_suite(const SuiteConfig& cfg) {
    Report rep{"stokes", cfg.seed, {}};
    criterion_stokes(rep, cfg);
    criterion_subdivision(rep, cfg);
    return rep;
}

Report run_forms_suite(const SuiteConfig& cfg) {
    Report rep{"forms", cfg.seed, {}};
    criterion_theta_subst(rep, cfg);
    criterion_coboundary(rep, cfg);
    criterion_alternation(rep, cfg);
    return rep;
}

Report run_holonomy_suite(const SuiteConfig& cfg) {
    Report rep{"holonomy", cfg.seed, {}};
    criterion_pipe_integrals(rep, cfg);

    Rng rng(cfg.seed + 111);
    for (int t = 0; t < std::max(5, cfg.trials / 4); ++t) {
        const int n = static_cast<int>(rng.range(1, 2));
        ClassicalForm<Rational> w = random_form(rng, 3, n, 2);
        MnQConnection c = form_to_connection(w);
        HolonomyOps ops = holonomy_ops(c);
        SingularCube<Rational> f = random_cube(rng, n, 3, 2);
        const int i = static_cast<int>(rng.range(1, n));
        auto [f1, f2] = cube_subdivide(f, i, rng.rational());
        const bool additive =
            holonomy_cell(c, f) == ops.compose(holonomy_cell(c, f1), holonomy_cell(c, f2), i);
        Json hw;
        if (!additive) {
            hw["form"] = form_to_json(w);
            hw["cube"] = cube_to_json(f);
            hw["i"] = i;
        }
        rep.add(idx("02-holonomy-additivity", t), additive, "", "",
                additive ? "" : hw.dump());

        IntegralResult<Rational> r = integrate_form(w, f);
        rep.add(idx("03-trace-replay", t), replay_integral(r, Rational(0)), to_wire(r.value));
    }
    return rep;
}

}  // namespace cubica
