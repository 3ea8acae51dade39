#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cubica/cubical.hpp"

namespace cubica {

// ---------------------------------------------------------------------------
// The cubical-relation equations, plus the standard transposition and
// reversion compatibility list; checked on any carrier exposing face /
// degeneracy / transposition / reversion and syntactic equality.  Failures
// are reported by name so a witness can be printed rather than silently
// assumed away.

template <class C>
struct CarrierOps {
    std::function<C(const C&, int, int)> face;  // (alpha, i)
    std::function<C(const C&, int)> degen;
    std::function<C(const C&, int)> transp;
    std::function<C(const C&, int)> revert;
    std::function<bool(const C&, const C&)> eq;
};

inline std::string rel_name(const std::string& head, int i, int j, int alpha, int beta) {
    std::string s = head + " i=" + std::to_string(i) + " j=" + std::to_string(j);
    if (alpha >= 0) s += " a=" + std::to_string(alpha);
    if (beta >= 0) s += " b=" + std::to_string(beta);
    return s;
}

// All relations instantiated at dimension n = dim(x); names of failing
// equations are appended to `out`.  Carriers without transposition
// compatibility (parallelepipeda in a noncommutative group) set
// with_transpositions = false.
template <class C>
void relation_failures(const C& x, int n, const CarrierOps<C>& t, std::vector<std::string>& out,
                       bool with_transpositions = true) {
    auto check = [&](bool ok, const std::string& name) {
        if (!ok) out.push_back(name);
    };

    // face-face: d^a_i d^b_j = d^b_{j-1} d^a_i  (i < j)
    for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i)
            for (int a = 0; a <= 1; ++a)
                for (int b = 0; b <= 1; ++b)
                    check(t.eq(t.face(t.face(x, b, j), a, i), t.face(t.face(x, a, i), b, j - 1)),
                          rel_name("face-face", i, j, a, b));

    // degen-degen: e_i e_j = e_{j+1} e_i  (i <= j <= n+1)
    for (int j = 1; j <= n + 1; ++j)
        for (int i = 1; i <= j; ++i)
            check(t.eq(t.degen(t.degen(x, j), i), t.degen(t.degen(x, i), j + 1)),
                  rel_name("degen-degen", i, j, -1, -1));

    // face-degen: d^a_i e_j = e_{j-1} d^a_i (i<j), = e_j d^a_{i-1} (i>j), = id (i=j)
    for (int j = 1; j <= n + 1; ++j)
        for (int i = 1; i <= n + 1; ++i)
            for (int a = 0; a <= 1; ++a) {
                const C lhs = t.face(t.degen(x, j), a, i);
                if (i == j)
                    check(t.eq(lhs, x), rel_name("face-degen-id", i, j, a, -1));
                else if (i < j)
                    check(t.eq(lhs, t.degen(t.face(x, a, i), j - 1)),
                          rel_name("face-degen", i, j, a, -1));
                else if (i - 1 <= n)
                    check(t.eq(lhs, t.degen(t.face(x, a, i - 1), j)),
                          rel_name("face-degen", i, j, a, -1));
            }

    // transposition relations (need n >= 2)
    if (with_transpositions) {
        for (int i = 1; i + 1 <= n; ++i) {
            check(t.eq(t.transp(t.transp(x, i), i), x), rel_name("transp-invol", i, i, -1, -1));
            for (int a = 0; a <= 1; ++a) {
                check(t.eq(t.face(t.transp(x, i), a, i), t.face(x, a, i + 1)),
                      rel_name("face-transp-swap", i, i, a, -1));
                check(t.eq(t.face(t.transp(x, i), a, i + 1), t.face(x, a, i)),
                      rel_name("face-transp-swap", i + 1, i, a, -1));
                for (int j = 1; j <= n; ++j) {
                    if (j == i || j == i + 1) continue;
                    const int ip = j < i ? i - 1 : i;
                    check(t.eq(t.face(t.transp(x, i), a, j), t.transp(t.face(x, a, j), ip)),
                          rel_name("face-transp", j, i, a, -1));
                }
            }
        }
        for (int i = 1; i + 2 <= n; ++i)
            check(t.eq(t.transp(t.transp(t.transp(x, i), i + 1), i),
                       t.transp(t.transp(t.transp(x, i + 1), i), i + 1)),
                  rel_name("transp-braid", i, i + 1, -1, -1));
        for (int i = 1; i + 1 <= n; ++i)
            for (int j = i + 2; j + 1 <= n; ++j)
                check(t.eq(t.transp(t.transp(x, j), i), t.transp(t.transp(x, i), j)),
                      rel_name("transp-commute", i, j, -1, -1));
        // transp-degen: s_i e_i = e_{i+1}, s_i e_{i+1} = e_i, else shifts
        for (int i = 1; i <= n; ++i) {
            check(t.eq(t.transp(t.degen(x, i), i), t.degen(x, i + 1)),
                  rel_name("transp-degen-lo", i, i, -1, -1));
            check(t.eq(t.transp(t.degen(x, i + 1), i), t.degen(x, i)),
                  rel_name("transp-degen-hi", i, i + 1, -1, -1));
            for (int j = 1; j <= n + 1; ++j) {
                if (j == i || j == i + 1) continue;
                const int ip = j < i ? i - 1 : i;
                if (ip >= 1 && ip + 1 <= n)
                    check(t.eq(t.transp(t.degen(x, j), i), t.degen(t.transp(x, ip), j)),
                          rel_name("transp-degen", j, i, -1, -1));
            }
        }
    }

    // reversion relations
    for (int i = 1; i <= n; ++i) {
        check(t.eq(t.revert(t.revert(x, i), i), x), rel_name("revert-invol", i, i, -1, -1));
        for (int a = 0; a <= 1; ++a) {
            check(t.eq(t.face(t.revert(x, i), a, i), t.face(x, 1 - a, i)),
                  rel_name("face-revert-flip", i, i, a, -1));
            for (int j = 1; j <= n; ++j) {
                if (j == i) continue;
                const int ip = j < i ? i - 1 : i;
                check(t.eq(t.face(t.revert(x, i), a, j), t.revert(t.face(x, a, j), ip)),
                      rel_name("face-revert", j, i, a, -1));
            }
        }
        for (int j = i + 1; j <= n; ++j)
            check(t.eq(t.revert(t.revert(x, j), i), t.revert(t.revert(x, i), j)),
                  rel_name("revert-commute", i, j, -1, -1));
    }
    for (int i = 1; i <= n + 1; ++i) {
        check(t.eq(t.revert(t.degen(x, i), i), t.degen(x, i)),
              rel_name("revert-degen-id", i, i, -1, -1));
        for (int j = 1; j <= n + 1; ++j) {
            if (j == i) continue;
            const int ip = j < i ? i - 1 : i;
            if (ip >= 1 && ip <= n)
                check(t.eq(t.revert(t.degen(x, j), i), t.degen(t.revert(x, ip), j)),
                      rel_name("revert-degen", j, i, -1, -1));
        }
    }

    // reversion-transposition: r_i s_j = s_j r_{tau_j(i)}
    if (with_transpositions)
        for (int j = 1; j + 1 <= n; ++j)
            for (int i = 1; i <= n; ++i) {
                const int ti = i == j ? j + 1 : (i == j + 1 ? j : i);
                check(t.eq(t.revert(t.transp(x, j), i), t.transp(t.revert(x, ti), j)),
                      rel_name("revert-transp", i, j, -1, -1));
            }
}

inline CarrierOps<Simplex> pipe_carrier_ops() {
    return CarrierOps<Simplex>{
        [](const Simplex& s, int a, int i) { return pipe_face(s, a, i); },
        [](const Simplex& s, int i) { return pipe_degeneracy(s, i); },
        [](const Simplex& s, int i) { return pipe_transposition(s, i); },
        [](const Simplex& s, int i) { return pipe_reversion(s, i); },
        [](const Simplex& a, const Simplex& b) { return a == b; }};
}

template <class K>
CarrierOps<SingularCube<K>> cube_carrier_ops() {
    using C = SingularCube<K>;
    return CarrierOps<C>{[](const C& f, int a, int i) { return cube_face(f, a, i); },
                         [](const C& f, int i) { return cube_degeneracy(f, i); },
                         [](const C& f, int i) { return cube_transposition(f, i); },
                         [](const C& f, int i) { return cube_reversion(f, i); },
                         [](const C& a, const C& b) { return a == b; }};
}

// Subdivision book-keeping: the three boundary equations of a subdivision
// plus the face-propagation law, for every face direction.
template <class C, class Subdiv>
void subdivision_failures(const C& x, int n, int i, const Rational& s, const CarrierOps<C>& t,
                          const Subdiv& subdivide, std::vector<std::string>& out) {
    auto check = [&](bool ok, const std::string& name) {
        if (!ok) out.push_back(name);
    };
    const auto [f1, f2] = subdivide(x, i, s);
    check(t.eq(t.face(f1, 1, i), t.face(f2, 0, i)), "subd1 i=" + std::to_string(i));
    check(t.eq(t.face(f1, 0, i), t.face(x, 0, i)), "subd2 i=" + std::to_string(i));
    check(t.eq(t.face(f2, 1, i), t.face(x, 1, i)), "subd3 i=" + std::to_string(i));
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        const int ip = j < i ? i - 1 : i;
        for (int a = 0; a <= 1; ++a) {
            const auto [g1, g2] = subdivide(t.face(x, a, j), ip, s);
            check(t.eq(g1, t.face(f1, a, j)), rel_name("face-propagation-first", ip, j, a, -1));
            check(t.eq(g2, t.face(f2, a, j)), rel_name("face-propagation-second", ip, j, a, -1));
        }
    }
}

}  // namespace cubica
