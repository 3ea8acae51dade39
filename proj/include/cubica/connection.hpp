#pragma once

#include "cubica/forms.hpp"
#include "cubica/groupoid.hpp"

namespace cubica {

// ---------------------------------------------------------------------------
// Connections into the constant groupoid M_n(Q).  The connection generated
// by an n-form omega sends a k-pipe (k < n) to its 2^k vertex tuple and an
// n-pipe P to (vertices, omega(P)); this is a morphism of cubical sets with
// reversion, identity on points.

using MnQCell = ConstCell<InfPoint, WeilElement>;
using MnQOps = ConstOps<InfPoint, WeilGroup>;
using MnQShell = BoxShell<MnQCell>;

struct MnQConnection {
    ClassicalForm<Rational> omega;
    int n() const { return omega.degree; }
};

inline MnQConnection form_to_connection(const ClassicalForm<Rational>& omega) {
    return MnQConnection{omega};
}

inline const ClassicalForm<Rational>& connection_to_form(const MnQConnection& c) {
    return c.omega;
}

inline MnQOps mnq_ops(const MnQConnection& c, const WeilContext& ctx) {
    return MnQOps{c.n(), WeilGroup{ctx}};
}

inline MnQCell connection_value(const MnQConnection& c, const Simplex& p) {
    const int k = p.dim();
    if (k > c.n()) throw DimensionError("connection_value: pipe dimension above target cap");
    std::optional<WeilElement> value;
    if (k == c.n()) value = eval_comb(c.omega, p);
    return MnQCell{pipe_vertices(p), std::move(value)};
}

// Formal curvature on an (n+1)-pipe: the shell of connection values on its
// faces (for n = 1, the square of the four edge values).  Adjacency holds
// because the connection is a morphism.
inline MnQShell formal_curvature(const MnQConnection& c, const Simplex& p) {
    if (p.dim() != c.n() + 1)
        throw DimensionError("formal_curvature: pipe dimension must be n + 1");
    std::vector<std::array<MnQCell, 2>> faces;
    faces.reserve(p.dim());
    for (int i = 1; i <= p.dim(); ++i)
        faces.push_back(
            {connection_value(c, pipe_face(p, 0, i)), connection_value(c, pipe_face(p, 1, i))});
    return make_shell(std::move(faces), mnq_ops(c, p.context()));
}

// Curvature = folding of the formal curvature; for M_n(Q) the Homotopy
// Addition Lemma instance applies and the value equals d_c omega (P).
inline WeilElement curvature_value(const MnQConnection& c, const Simplex& p) {
    return folding_hal(formal_curvature(c, p), mnq_ops(c, p.context())).second;
}

// Morphism-property validation on a concrete pipe: the connection commutes
// with faces, degeneracies, reversions and transpositions.
inline bool connection_morphism_ok(const MnQConnection& c, const Simplex& p) {
    const auto ops = mnq_ops(c, p.context());
    const MnQCell v = connection_value(c, p);
    const int k = p.dim();
    for (int i = 1; i <= k; ++i) {
        for (int alpha = 0; alpha <= 1; ++alpha)
            if (!(connection_value(c, pipe_face(p, alpha, i)) == ops.face(v, alpha, i)))
                return false;
        if (!(connection_value(c, pipe_reversion(p, i)) == ops.invert(v, i))) return false;
    }
    for (int i = 1; i + 1 <= k; ++i)
        if (!(connection_value(c, pipe_transposition(p, i)) == ops.transpose(v, i))) return false;
    for (int i = 1; i <= k + 1 && k + 1 <= c.n(); ++i)
        if (!(connection_value(c, pipe_degeneracy(p, i)) == ops.degen(v, i))) return false;
    return true;
}

// Bianchi for M_n(Q) targets on one (n+2)-pipe: the signed face-curvature
// sum (the regrouped curvature product with trivial conjugation) is the
// zero Weil element.
inline WeilElement bianchi_face_curvature_sum(const MnQConnection& c, const Simplex& p) {
    if (p.dim() != c.n() + 2)
        throw DimensionError("bianchi_face_curvature_sum: pipe dimension must be n + 2");
    WeilElement acc = weil_zero(p.context());
    for (int i = 1; i <= p.dim(); ++i) {
        WeilElement diff =
            curvature_value(c, pipe_face(p, 1, i)) - curvature_value(c, pipe_face(p, 0, i));
        acc = (i % 2 == 1) ? acc - diff : acc + diff;
    }
    return acc;
}

}  // namespace cubica
