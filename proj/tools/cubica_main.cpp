// cubica: exact verification of the cubical calculus at the command line.
//
// Subcommands: verify {identities|bianchi|stokes|forms|holonomy},
// eval form, integrate, fold cube, subdivide.  All values are exact
// rationals ("p/q"); reports are byte-reproducible given (inputs, seed).
// Exit codes: 0 all checks pass, 1 check failure, 2 malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cubica/serialize.hpp"
#include "cubica/suites.hpp"

using namespace cubica;

namespace {

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

int emit_report(const Report& rep, const std::string& out_path, bool json_stdout) {
    const std::string machine = report_to_json(rep).dump(2) + "\n";
    if (json_stdout) {
        std::cout << machine;
    } else {
        for (const auto& c : rep.cases) {
            std::cout << (c.pass ? "pass " : "FAIL ") << c.id;
            if (!c.lhs.empty()) std::cout << "  lhs=" << c.lhs << " rhs=" << c.rhs;
            if (!c.pass && !c.witness.empty()) std::cout << "  witness: " << c.witness;
            std::cout << "\n";
        }
        std::cout << "suite " << rep.suite << ": " << (rep.all_pass() ? "PASS" : "FAIL")
                  << " (" << rep.cases.size() << " cases, seed " << rep.seed << ")\n";
    }
    write_out(out_path, machine);
    return rep.all_pass() ? 0 : 1;
}

// Targeted checks for a connection file {"target": ..., "form": ...}.
Report run_connection_checks(const Json& spec, const std::string& where, std::uint64_t seed) {
    Report rep{"connection", seed, {}};
    if (!spec.is_object() || !spec.contains("target"))
        throw ParseError(where + ": connection file needs a target tag");
    const std::string target = spec["target"].get<std::string>();
    if (target == "M1Q" || target == "M2Q") {
        if (!spec.contains("form")) throw ParseError(where + ": needs a form file path");
        const ClassicalForm<Rational> w =
            form_from_json(load_json_file(spec["form"].get<std::string>()), "form");
        const int n = target == "M1Q" ? 1 : 2;
        if (w.degree != n) throw ParseError(where + ": form degree does not match target");
        MnQConnection c = form_to_connection(w);
        Rng rng(seed);
        bool morphism = true, bianchi = true;
        for (int t = 0; t < 5; ++t) {
            Simplex p = generic_simplex(random_point(rng, w.dim), n);
            morphism = morphism && connection_morphism_ok(c, p);
            if (n + 2 <= 4) {
                Simplex q = generic_simplex(random_point(rng, w.dim), n + 2);
                bianchi = bianchi && bianchi_face_curvature_sum(c, q).is_zero();
            }
        }
        rep.add("01-morphism", morphism);
        rep.add("02-bianchi", bianchi && d_cubical_form(d_cubical_form(w)).is_zero());
        return rep;
    }
    if (target.rfind("free-squares", 0) == 0) {
        const auto colon = target.find(':');
        std::string edges_path;
        if (colon != std::string::npos) edges_path = target.substr(colon + 1);
        if (spec.contains("edges")) edges_path = spec["edges"].get<std::string>();
        if (edges_path.empty()) throw ParseError(where + ": free-squares target needs edges");
        auto [gpd, diagram] = cube_diagram_from_json(load_json_file(edges_path), "edges");
        const FreeArrow folded = folding_cube(gpd, diagram);
        rep.add("01-thirty-letter", folded.is_identity(), "id_7",
                arrow_to_string(gpd.graph, folded));
        return rep;
    }
    throw ParseError(where + ": unsupported target '" + target + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cubical calculus: nilpotent infinitesimals, cubical groupoids, "
                 "connections, curvature, and Stokes verification"};
    app.require_subcommand(1);

    // verify -------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    verify->add_option("suite", suite, "identities|bianchi|stokes|forms|holonomy")->required();
    int trials = 20;
    std::uint64_t seed = 7;
    int dim_cap = 4;
    std::string out_path, connection_path;
    bool json_stdout = false;
    verify->add_option("--trials", trials, "randomized trial count");
    verify->add_option("--seed", seed, "random seed (CUBICA_SEED overrides)");
    verify->add_option("--dim-cap", dim_cap, "dimension cap (<= 4)")->check(CLI::Range(1, 4));
    verify->add_option("--out", out_path, "write the machine-readable report here");
    verify->add_option("--connection", connection_path,
                       "connection file (target tag + form) for targeted checks");
    verify->add_flag("--json", json_stdout, "print the machine-readable report to stdout");

    // eval form ----------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "evaluate objects");
    auto* eval_form = eval->add_subcommand("form", "evaluate a form on an infinitesimal pipe");
    std::string form_path, pipe_path, eval_out;
    eval_form->add_option("--form", form_path, "form file")->required();
    eval_form->add_option("--pipe", pipe_path, "pipe file")->required();
    eval_form->add_option("--out", eval_out, "write the Weil element here");

    // integrate ----------------------------------------------------------
    auto* integrate = app.add_subcommand("integrate", "integrate a form over a singular cube");
    std::string int_form, int_cube, int_out;
    integrate->add_option("--form", int_form, "form file")->required();
    integrate->add_option("--cube", int_cube, "cube file")->required();
    integrate->add_option("--out", int_out, "write the value here");

    // fold cube ----------------------------------------------------------
    auto* fold = app.add_subcommand("fold", "folding operations");
    auto* fold_cube = fold->add_subcommand("cube", "evaluate the 30-letter word on a diagram");
    std::string edges_path, fold_out;
    fold_cube->add_option("--edges", edges_path, "cube diagram file (12 edges)")->required();
    fold_cube->add_option("--out", fold_out, "write the reduced word here");

    // subdivide ----------------------------------------------------------
    auto* subdivide = app.add_subcommand("subdivide", "split a singular cube");
    std::string sub_cube, sub_at = "1/2", sub_out;
    int sub_dir = 1;
    subdivide->add_option("--cube", sub_cube, "cube file")->required();
    subdivide->add_option("--direction", sub_dir, "direction i (1-based)");
    subdivide->add_option("--at", sub_at, "subdivision parameter s, as p/q");
    subdivide->add_option("--out", sub_out, "write the two pieces here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (const char* env = std::getenv("CUBICA_SEED")) seed = std::strtoull(env, nullptr, 10);

        if (verify->parsed()) {
            SuiteConfig cfg{suite, trials, seed, dim_cap};
            Report rep;
            if (!connection_path.empty()) {
                rep = run_connection_checks(load_json_file(connection_path), connection_path,
                                            seed);
            } else if (suite == "identities") {
                rep = run_identities_suite(cfg);
            } else if (suite == "bianchi") {
                rep = run_bianchi_suite(cfg);
            } else if (suite == "stokes") {
                rep = run_stokes_suite(cfg);
            } else if (suite == "forms") {
                rep = run_forms_suite(cfg);
            } else if (suite == "holonomy") {
                rep = run_holonomy_suite(cfg);
            } else {
                std::cerr << "unknown suite '" << suite << "'\n";
                return 2;
            }
            return emit_report(rep, out_path, json_stdout);
        }

        if (eval_form->parsed()) {
            const ClassicalForm<Rational> w = form_from_json(load_json_file(form_path), "form");
            const Simplex p = pipe_from_json(load_json_file(pipe_path), "pipe");
            const std::string text = weil_to_json(eval_comb(w, p)).dump(2) + "\n";
            std::cout << text;
            write_out(eval_out, text);
            return 0;
        }

        if (integrate->parsed()) {
            const ClassicalForm<Rational> w = form_from_json(load_json_file(int_form), "form");
            const SingularCube<Rational> f = cube_from_json(load_json_file(int_cube), "cube");
            const std::string text = to_wire(integral_value(w, f)) + "\n";
            std::cout << text;
            write_out(int_out, text);
            return 0;
        }

        if (fold_cube->parsed()) {
            auto [gpd, diagram] = cube_diagram_from_json(load_json_file(edges_path), "edges");
            const FreeArrow folded = folding_cube(gpd, diagram);
            const std::string text =
                (folded.is_identity() ? "id_" + folded.src : arrow_to_string(gpd.graph, folded)) +
                "\n";
            std::cout << text;
            write_out(fold_out, text);
            return folded.is_identity() ? 0 : 1;
        }

        if (subdivide->parsed()) {
            const SingularCube<Rational> f = cube_from_json(load_json_file(sub_cube), "cube");
            auto [f1, f2] = cube_subdivide(f, sub_dir, parse_rational(sub_at));
            Json j;
            j["first"] = cube_to_json(f1);
            j["second"] = cube_to_json(f2);
            const std::string text = j.dump(2) + "\n";
            std::cout << text;
            write_out(sub_out, text);
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
