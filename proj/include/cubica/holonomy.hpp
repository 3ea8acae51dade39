#pragma once

#include "cubica/connection.hpp"
#include "cubica/forms.hpp"

namespace cubica {

// ---------------------------------------------------------------------------
// Exact integration of n-forms over polynomial singular n-cubes:
//   int_f omega := iterated unit integral of theta_hat, f^*(omega) = theta_hat * Vol.
// The antiderivative steps are recorded so a result can be replayed.

template <class K>
struct IntegralStep {
    int var;               // 0-based integration variable
    Poly<K> integrand;     // polynomial fed into the antiderivative
    Poly<K> antiderivative;
};

template <class K>
struct IntegralResult {
    K value;
    Poly<K> theta;  // density of the pulled-back form
    std::vector<IntegralStep<K>> steps;
};

template <class K>
IntegralResult<K> integrate_form(const ClassicalForm<Rational>& w, const SingularCube<K>& f) {
    if (f.dim() != w.degree) throw DimensionError("integrate_form: cube dimension != form degree");
    if (f.ambient() != w.dim) throw DimensionError("integrate_form: ambient dimensions differ");
    const ClassicalForm<K> pb = pullback(f.map, w, f.kzero);
    IntegralResult<K> out{f.kzero, theta_hat(pb), {}};
    Poly<K> q = out.theta;
    for (int v = 0; v < w.degree; ++v) {
        Poly<K> F = antiderivative(q, v);
        out.steps.push_back({v, q, F});
        q = eval_partial(F, v, Rational(1)) - eval_partial(F, v, Rational(0));
    }
    out.value = poly_constant_term(q, f.kzero);
    return out;
}

// Replays the recorded steps; true iff each antiderivative differentiates
// back to its integrand and the chain reproduces the stored value.
template <class K>
bool replay_integral(const IntegralResult<K>& r, K zero) {
    Poly<K> q = r.theta;
    for (const auto& st : r.steps) {
        if (!(st.integrand == q)) return false;
        if (!(partial_derivative(st.antiderivative, st.var) == st.integrand)) return false;
        q = eval_partial(st.antiderivative, st.var, Rational(1)) -
            eval_partial(st.antiderivative, st.var, Rational(0));
    }
    return poly_constant_term(q, zero) == r.value;
}

inline Rational integral_value(const ClassicalForm<Rational>& w, const SingularCube<Rational>& f) {
    return integrate_form(w, f).value;
}

// ---------------------------------------------------------------------------
// Holonomy in M_n(Q): the cell (vertex images of the cube corners, int_f w).
// This is the unique alternating abstract holonomy extending the connection
// generated by w.

using HolonomyCell = ConstCell<std::vector<Rational>, Rational>;
using HolonomyOps = ConstOps<std::vector<Rational>, RationalGroup>;
using HolonomyShell = BoxShell<HolonomyCell>;

inline HolonomyOps holonomy_ops(const MnQConnection& c) { return HolonomyOps{c.n(), {}}; }

inline HolonomyCell holonomy_cell(const MnQConnection& c, const SingularCube<Rational>& f) {
    const int k = f.dim();
    if (k > c.n()) throw DimensionError("holonomy_cell: cube dimension above target cap");
    std::vector<std::vector<Rational>> verts;
    verts.reserve(1u << k);
    for (int label = 0; label < (1 << k); ++label) verts.push_back(cube_corner(f, label));
    std::optional<Rational> value;
    if (k == c.n()) value = integral_value(c.omega, f);
    return HolonomyCell{std::move(verts), std::move(value)};
}

// Shell extension of the holonomy (the value of (int nabla)^ on an
// (n+1)-cube: the shell of holonomy values on the boundary).
inline HolonomyShell holonomy_shell(const MnQConnection& c, const SingularCube<Rational>& f) {
    if (f.dim() != c.n() + 1)
        throw DimensionError("holonomy_shell: cube dimension must be n + 1");
    std::vector<std::array<HolonomyCell, 2>> faces;
    faces.reserve(f.dim());
    for (int i = 1; i <= f.dim(); ++i)
        faces.push_back({holonomy_cell(c, cube_face(f, 0, i)), holonomy_cell(c, cube_face(f, 1, i))});
    return make_shell(std::move(faces), holonomy_ops(c));
}

// The standard fourfold (2(n+1)-fold) sum: the homotopy-addition sign
// pattern applied to boundary-face integrals.
inline Rational boundary_functional(const ClassicalForm<Rational>& w,
                                    const SingularCube<Rational>& f) {
    if (f.dim() != w.degree + 1)
        throw DimensionError("boundary_functional: cube dimension != degree + 1");
    Rational acc(0);
    for (int i = 1; i <= f.dim(); ++i) {
        const Rational diff =
            integral_value(w, cube_face(f, 1, i)) - integral_value(w, cube_face(f, 0, i));
        if (i % 2 == 1)
            acc -= diff;
        else
            acc += diff;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Verification records (kept exact; the suites serialize them).

struct StokesCase {
    Rational lhs;   // integral of the coboundary over f
    Rational rhs;   // signed boundary sum
    bool shell_ok;  // shell of face-integrals = integrated formal curvature,
                    // and its hal-folding equals rhs
    bool pass() const { return lhs == rhs && shell_ok; }
};

inline StokesCase verify_stokes(const ClassicalForm<Rational>& w, const SingularCube<Rational>& f) {
    StokesCase out{Rational(0), Rational(0), false};
    out.lhs = integral_value(d_cubical_form(w), f);
    out.rhs = boundary_functional(w, f);
    const MnQConnection c = form_to_connection(w);
    const HolonomyShell sh = holonomy_shell(c, f);
    bool component_ok = true;
    for (int i = 1; i <= f.dim(); ++i)
        for (int alpha = 0; alpha <= 1; ++alpha)
            component_ok = component_ok &&
                           sh.face(alpha, i) == holonomy_cell(c, cube_face(f, alpha, i));
    const auto folded = folding_hal(sh, holonomy_ops(c));
    out.shell_ok = component_ok && folded.second == out.rhs;
    return out;
}

struct SubdivisionCase {
    Rational whole, first, second;
    bool additive() const { return whole == first + second; }
};

inline SubdivisionCase verify_subdivision(const ClassicalForm<Rational>& w,
                                          const SingularCube<Rational>& f, int i,
                                          const Rational& s) {
    auto [f1, f2] = cube_subdivide(f, i, s);
    return SubdivisionCase{integral_value(w, f), integral_value(w, f1), integral_value(w, f2)};
}

// Sign flips under every transposition and reversion of the cube.
inline bool verify_alternation(const ClassicalForm<Rational>& w, const SingularCube<Rational>& f) {
    const Rational base = integral_value(w, f);
    for (int i = 1; i + 1 <= f.dim(); ++i)
        if (integral_value(w, cube_transposition(f, i)) != -base) return false;
    for (int i = 1; i <= f.dim(); ++i)
        if (integral_value(w, cube_reversion(f, i)) != -base) return false;
    return true;
}

// The integral along the pipe's own singular cube equals the combinatorial
// value, int_{[[x0..xn]]} omega = omega(P), exactly in the Weil algebra
// (antiderivatives act coefficientwise).
inline bool verify_pipe_integral(const ClassicalForm<Rational>& w, const Simplex& p) {
    const SingularCube<WeilElement> f = cube_of_simplex(p);
    const IntegralResult<WeilElement> r = integrate_form(w, f);
    return r.value == eval_comb(w, p);
}

}  // namespace cubica
