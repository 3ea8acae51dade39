// Acceptance suite: runs every criterion exactly as pinned, prints one
// pass/fail line per criterion, exits nonzero when any fails.  All checks
// are exact (rational / Weil-algebra equality); the only tolerances are the
// stated wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cubica/suites.hpp"

using namespace cubica;

namespace {

struct Criterion {
    std::string name;
    double time_limit_s;  // <= 0: no stated limit
    std::function<void(Report&, const SuiteConfig&)> run;
    SuiteConfig cfg;
};

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 7;
    if (const char* env = std::getenv("CUBICA_SEED")) seed = std::strtoull(env, nullptr, 10);
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    auto cfg = [&](int trials) {
        SuiteConfig c;
        c.trials = trials;
        c.seed = seed;
        return c;
    };

    const std::vector<Criterion> criteria = {
        {"01 cubical-identities (pipes dim 1-4, 50 random cubes)", 10.0, criterion_identities,
         cfg(50)},
        {"02 thirty-letter-identity (generic + 20 specializations)", 1.0,
         criterion_thirty_letter, cfg(20)},
        {"03 bianchi (20 random 1-forms on Q^3)", 30.0, criterion_bianchi, cfg(20)},
        {"04 stokes (20 pairs n=1, 10 pairs n=2)", 30.0, criterion_stokes, cfg(20)},
        {"05 subdivision-additivity (50 triples incl. s in {0,1,1/2,-1,2})", -1.0,
         criterion_subdivision, cfg(50)},
        {"06 infinitesimal-integral-extension (10 forms, n=1,2)", -1.0, criterion_pipe_integrals,
         cfg(20)},
        {"07 theta-hat-and-substitution (10 forms, n<=3)", -1.0, criterion_theta_subst, cfg(12)},
        {"08 coboundary-ratio-and-naturality (n=1,2,3; 10 maps)", -1.0, criterion_coboundary,
         cfg(20)},
        {"09 alternation (all directions, n<=3)", -1.0, criterion_alternation, cfg(20)},
        {"10 structural-checks (Cr3, counterexample, round trips)", -1.0, criterion_structural,
         cfg(10)},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        Report rep{c.name, c.cfg.seed, {}};
        const auto t0 = std::chrono::steady_clock::now();
        c.run(rep, c.cfg);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        int failed = 0;
        for (const auto& cs : rep.cases)
            if (!cs.pass) ++failed;
        const bool in_time = c.time_limit_s <= 0 || secs <= c.time_limit_s;
        const bool pass = failed == 0 && in_time;
        all_pass = all_pass && pass;
        std::printf("criterion %-62s %s (%zu cases, %.2fs%s)\n", c.name.c_str(),
                    pass ? "PASS" : "FAIL", rep.cases.size(), secs,
                    in_time ? "" : ", over time limit");
        if (failed != 0)
            for (const auto& cs : rep.cases)
                if (!cs.pass)
                    std::printf("    failed %s: lhs=%s rhs=%s %s\n", cs.id.c_str(),
                                cs.lhs.c_str(), cs.rhs.c_str(), cs.witness.c_str());
    }
    std::printf("acceptance: %s (seed %llu)\n", all_pass ? "ALL PASS" : "FAILURES",
                static_cast<unsigned long long>(seed));
    return all_pass ? 0 : 1;
}
