#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubica/generate.hpp"
#include "cubica/holonomy.hpp"
#include "cubica/relations.hpp"

namespace cubica {

// ---------------------------------------------------------------------------
// Numeric value groupoids used to specialize word identities.

// Invertible 2x2 rational matrices over a single object.
struct Mat2 {
    Rational a{1}, b{0}, c{0}, d{1};
    Rational det() const { return a * d - b * c; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct Mat2Groupoid {
    using Arrow = Mat2;
    using Obj = int;
    Obj src(const Arrow&) const { return 0; }
    Obj tgt(const Arrow&) const { return 0; }
    bool obj_eq(Obj, Obj) const { return true; }
    bool eq(const Arrow& x, const Arrow& y) const { return x == y; }
    Arrow id(Obj) const { return Mat2{}; }
    Arrow compose(const Arrow& x, const Arrow& y) const {
        return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                    x.c * y.b + x.d * y.d};
    }
    Arrow inv(const Arrow& x) const {
        const Rational dt = x.det();
        if (dt == 0) throw CompositionError("singular matrix");
        return Mat2{x.d / dt, -x.b / dt, -x.c / dt, x.a / dt};
    }
};

inline Mat2 random_invertible_mat2(Rng& rng) {
    for (;;) {
        Mat2 m{rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2), rng.rational(3, 2)};
        if (m.det() != 0) return m;
    }
}

// The additive rationals over a single object.
struct AdditiveGroupoid {
    using Arrow = Rational;
    using Obj = int;
    Obj src(const Arrow&) const { return 0; }
    Obj tgt(const Arrow&) const { return 0; }
    bool obj_eq(Obj, Obj) const { return true; }
    bool eq(const Arrow& x, const Arrow& y) const { return x == y; }
    Arrow id(Obj) const { return Rational(0); }
    Arrow compose(const Arrow& x, const Arrow& y) const { return x + y; }
    Arrow inv(const Arrow& x) const { return -x; }
};

// ---------------------------------------------------------------------------
// Suite plumbing shared by the CLI and the acceptance binary.

struct SuiteConfig {
    std::string name;
    int trials = 20;
    std::uint64_t seed = 0;
    int dim_cap = 4;  // never exceeded; the constructions are uniform in n
};

struct CaseResult {
    std::string id;
    bool pass = false;
    std::string lhs, rhs;  // exact serialized values when meaningful
    std::string witness;   // replay data for failures
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CaseResult> cases;

    bool all_pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string id, bool pass, std::string lhs = "", std::string rhs = "",
             std::string witness = "") {
        cases.push_back({std::move(id), pass, std::move(lhs), std::move(rhs), std::move(witness)});
    }
};

// One function per acceptance criterion; each appends its cases.
void criterion_identities(Report& rep, const SuiteConfig& cfg);     // 1
void criterion_thirty_letter(Report& rep, const SuiteConfig& cfg);  // 2
void criterion_bianchi(Report& rep, const SuiteConfig& cfg);        // 3
void criterion_stokes(Report& rep, const SuiteConfig& cfg);         // 4
void criterion_subdivision(Report& rep, const SuiteConfig& cfg);    // 5
void criterion_pipe_integrals(Report& rep, const SuiteConfig& cfg);  // 6
void criterion_theta_subst(Report& rep, const SuiteConfig& cfg);    // 7
void criterion_coboundary(Report& rep, const SuiteConfig& cfg);     // 8
void criterion_alternation(Report& rep, const SuiteConfig& cfg);    // 9
void criterion_structural(Report& rep, const SuiteConfig& cfg);     // 10

Report run_identities_suite(const SuiteConfig& cfg);
Report run_bianchi_suite(const SuiteConfig& cfg);
Report run_stokes_suite(const SuiteConfig& cfg);
Report run_forms_suite(const SuiteConfig& cfg);
Report run_holonomy_suite(const SuiteConfig& cfg);

}  // namespace cubica
