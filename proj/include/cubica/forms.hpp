#pragma once

#include <map>
#include <vector>

#include "cubica/cubical.hpp"

namespace cubica {

// Determinant over an arbitrary commutative ring, by cofactor expansion
// (sizes here are <= 4).
template <class R>
R ring_det(const std::vector<std::vector<R>>& m, R zero) {
    const size_t n = m.size();
    if (n == 0) throw DimensionError("determinant of empty matrix");
    if (n == 1) return m[0][0];
    R acc = zero;
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<R>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<R> row;
            row.reserve(n - 1);
            for (size_t cc = 0; cc < n; ++cc)
                if (cc != c) row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        R term = m[0][c] * ring_det(minor, zero);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Degree-k exterior forms with polynomial coefficients on R^m.  terms maps a
// strictly increasing axis tuple I (1-based) to the coefficient c_I.

using Axes = std::vector<int>;

template <class K>
struct ClassicalForm {
    int dim = 1;     // ambient m
    int degree = 0;  // k
    std::map<Axes, Poly<K>> terms;

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const ClassicalForm&, const ClassicalForm&) = default;
};

// degree may exceed dim; such a form is necessarily zero (no valid axes).
template <class K>
ClassicalForm<K> form_zero(int dim, int degree) {
    if (degree < 0) throw DimensionError("form degree out of range");
    return ClassicalForm<K>{dim, degree, {}};
}

template <class K>
void form_add_term(ClassicalForm<K>& w, const Axes& axes, const Poly<K>& c) {
    if (static_cast<int>(axes.size()) != w.degree)
        throw DimensionError("axis tuple length != form degree");
    for (size_t t = 0; t < axes.size(); ++t) {
        if (axes[t] < 1 || axes[t] > w.dim) throw DimensionError("axis out of range");
        if (t > 0 && axes[t] <= axes[t - 1])
            throw DimensionError("axis tuple must be strictly increasing");
    }
    if (c.vars != w.dim) throw DimensionError("coefficient variable count != ambient dim");
    auto it = w.terms.find(axes);
    if (it == w.terms.end()) {
        if (!c.is_zero()) w.terms.emplace(axes, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) w.terms.erase(it);
    }
}

template <class K>
ClassicalForm<K> operator+(const ClassicalForm<K>& a, const ClassicalForm<K>& b) {
    if (a.dim != b.dim || a.degree != b.degree)
        throw DimensionError("form dimensions/degrees differ");
    ClassicalForm<K> r = a;
    for (const auto& [axes, c] : b.terms) form_add_term(r, axes, c);
    return r;
}

template <class K>
ClassicalForm<K> form_scale(const ClassicalForm<K>& a, const Rational& s) {
    ClassicalForm<K> r = form_zero<K>(a.dim, a.degree);
    if (s == 0) return r;
    for (const auto& [axes, c] : a.terms) r.terms.emplace(axes, poly_scale(c, s));
    return r;
}

template <class K>
ClassicalForm<K> operator-(const ClassicalForm<K>& a, const ClassicalForm<K>& b) {
    return a + form_scale(b, Rational(-1));
}

inline WeilElement embed_coeff(const Rational& c, const WeilContext& ctx) {
    return WeilElement::scalar(ctx, c);
}
inline WeilElement embed_coeff(const WeilElement& c, const WeilContext& ctx) {
    if (!(c.context() == ctx)) throw ContextError("form coefficient context mismatch");
    return c;
}

// Combinatorial evaluation on an n-pipe:
//   omega(P) = sum_I c_I(x0) * det( (x_a - x0)_i ; i in I, a = 1..k ),
// computed entirely in the Weil algebra (first-order Taylor expansion of the
// coefficients is exact by nilpotency).  Vanishes on degenerate pipes.
template <class K>
WeilElement eval_comb(const ClassicalForm<K>& w, const Simplex& s) {
    if (s.dim() != w.degree) throw DimensionError("eval_comb: pipe dimension != form degree");
    if (s.ambient() != w.dim) throw DimensionError("eval_comb: ambient dimensions differ");
    const WeilContext& ctx = s.context();
    const WeilElement zero = weil_zero(ctx);
    const int k = w.degree;
    std::vector<InfPoint> disp;
    disp.reserve(k);
    for (int a = 1; a <= k; ++a) disp.push_back(s.verts[a] - s.verts[0]);
    WeilElement acc = zero;
    for (const auto& [axes, c] : w.terms) {
        WeilElement coeff = eval_in<WeilElement>(
            c, s.verts[0].coords, zero, [&](const K& cc) { return embed_coeff(cc, ctx); });
        if (k == 0) {  // degree 0: the empty determinant is 1
            acc = acc + coeff;
            continue;
        }
        std::vector<std::vector<WeilElement>> m(k, std::vector<WeilElement>(k, zero));
        for (int r = 0; r < k; ++r)
            for (int a = 0; a < k; ++a) m[r][a] = disp[a].coords[axes[r] - 1];
        acc = acc + coeff * ring_det(m, zero);
    }
    return acc;
}

// The canonical volume form dt_1 ^ ... ^ dt_n on R^n.
inline ClassicalForm<Rational> volume_form(int n) {
    ClassicalForm<Rational> w = form_zero<Rational>(n, n);
    Axes axes(n);
    for (int i = 0; i < n; ++i) axes[i] = i + 1;
    form_add_term(w, axes, poly_const(n, Rational(1)));
    return w;
}

// Vol(P) = det(x1 - x0, ..., xn - x0).
inline WeilElement vol(const Simplex& s) {
    if (s.dim() != s.ambient()) throw DimensionError("vol: pipe dimension != ambient dimension");
    return eval_comb(volume_form(s.dim()), s);
}

// The unique density with theta = theta_hat * Vol (top degree only).
template <class K>
Poly<K> theta_hat(const ClassicalForm<K>& w) {
    if (w.degree != w.dim) throw DimensionError("theta_hat needs a top-degree form");
    if (w.terms.empty()) return poly_zero<K>(w.dim);
    return w.terms.begin()->second;
}

// Exterior pullback along a polynomial map, by composition and Jacobian
// minors; exact.  For K = WeilElement the map may carry nilpotent
// coefficients (the case f = [[x0,...,xn]]).
template <class K>
ClassicalForm<K> pullback(const PolyMap<K>& f, const ClassicalForm<Rational>& w, const K& sample) {
    if (f.target() != w.dim) throw DimensionError("pullback: map target != form ambient dim");
    const int n = f.source;
    const int k = w.degree;
    ClassicalForm<K> out = form_zero<K>(n, k);
    if (k > n) return out;

    std::vector<std::vector<Poly<K>>> jac(w.dim, std::vector<Poly<K>>());
    for (int r = 0; r < w.dim; ++r)
        for (int c = 0; c < n; ++c) jac[r].push_back(partial_derivative(f.comps[r], c));

    const auto embed = [&](const Rational& c) { return poly_const(n, kfrom_rational(sample, c)); };
    std::vector<int> J(k);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            Poly<K> coeff = poly_zero<K>(n);
            for (const auto& [I, cI] : w.terms) {
                Poly<K> cf = eval_in<Poly<K>>(cI, f.comps, poly_zero<K>(n), embed);
                std::vector<std::vector<Poly<K>>> m(k, std::vector<Poly<K>>());
                for (int r = 0; r < k; ++r)
                    for (int c = 0; c < k; ++c) m[r].push_back(jac[I[r] - 1][J[c] - 1]);
                coeff = coeff + cf * ring_det(m, poly_zero<K>(n));
            }
            if (!coeff.is_zero()) form_add_term(out, J, coeff);
            return;
        }
        for (int a = start; a <= n; ++a) {
            J[pos] = a;
            self(self, pos + 1, a + 1);
        }
    };
    if (k == 0) {
        for (const auto& [I, cI] : w.terms)
            form_add_term(out, {}, eval_in<Poly<K>>(cI, f.comps, poly_zero<K>(n), embed));
    } else {
        rec(rec, 0, 1);
    }
    return out;
}

inline ClassicalForm<Rational> pullback(const PolyMap<Rational>& f,
                                        const ClassicalForm<Rational>& w) {
    return pullback(f, w, Rational(0));
}

// Formal exterior derivative: d(c dx_I) = sum_l dc/dx_l dx_l ^ dx_I.
template <class K>
ClassicalForm<K> d_classical(const ClassicalForm<K>& w) {
    ClassicalForm<K> out = form_zero<K>(w.dim, w.degree + 1);
    for (const auto& [I, c] : w.terms) {
        for (int l = 1; l <= w.dim; ++l) {
            if (std::find(I.begin(), I.end(), l) != I.end()) continue;
            Poly<K> dc = partial_derivative(c, l - 1);
            if (dc.is_zero()) continue;
            Axes J = I;
            const auto pos = std::lower_bound(J.begin(), J.end(), l);
            const int swaps = static_cast<int>(pos - J.begin());
            J.insert(pos, l);
            form_add_term(out, J, swaps % 2 == 0 ? dc : -dc);
        }
    }
    return out;
}

// The cubical coboundary face-sum:
//   d_c omega (P) = sum_{i=1}^{n+1} (-1)^i { omega(d^1_i P) - omega(d^0_i P) }.
template <class K>
WeilElement d_cubical_value(const ClassicalForm<K>& w, const Simplex& p) {
    if (p.dim() != w.degree + 1)
        throw DimensionError("d_cubical_value: pipe dimension != degree + 1");
    WeilElement acc = weil_zero(p.context());
    for (int i = 1; i <= p.dim(); ++i) {
        WeilElement diff = eval_comb(w, pipe_face(p, 1, i)) - eval_comb(w, pipe_face(p, 0, i));
        acc = (i % 2 == 1) ? acc - diff : acc + diff;
    }
    return acc;
}

// Simplicial coboundary divided out of the cubical one (the displayed
// relation d_s = d_c / (n+1)).
template <class K>
WeilElement d_simplicial_value(const ClassicalForm<K>& w, const Simplex& p) {
    return d_cubical_value(w, p).scaled(Rational(1, w.degree + 1));
}

// The usual coboundary formula for simplicial cochains, as an independent
// route: sum_a (-1)^a omega(x_0, ..., x_a-hat, ..., x_{n+1}).
template <class K>
WeilElement simplicial_cochain_value(const ClassicalForm<K>& w, const Simplex& s) {
    if (s.dim() != w.degree + 1)
        throw DimensionError("simplicial_cochain_value: simplex dimension != degree + 1");
    WeilElement acc = weil_zero(s.context());
    for (int a = 0; a <= s.dim(); ++a) {
        Simplex face = s;
        face.verts.erase(face.verts.begin() + a);
        WeilElement v = eval_comb(w, face);
        acc = (a % 2 == 0) ? acc + v : acc - v;
    }
    return acc;
}

// Orientation scale between the cubical coboundary face-sum and the formal
// exterior derivative, measured by the symbolic oracle in the test suite:
// eval_comb(s(n) * d_classical(w), P) = d_cubical_value(w, P), with
// s(n) = -1 for every degree n (the table is asserted, not assumed).
inline Rational classical_orientation_scale(int /*degree*/) { return Rational(-1); }

// The (n+1)-form whose combinatorial values agree with d_cubical_value.
template <class K>
ClassicalForm<K> d_cubical_form(const ClassicalForm<K>& w) {
    return form_scale(d_classical(w), classical_orientation_scale(w.degree));
}

// ---------------------------------------------------------------------------
// Alternation report: reversion and transposition sign flips, degeneracy
// vanishing.

struct SymmetryReport {
    std::vector<int> reversion_fail;      // directions i with omega(-_i P) != -omega(P)
    std::vector<int> transposition_fail;  // i with omega(sigma_i P) != -omega(P)
    std::vector<int> degeneracy_fail;     // i with omega(eps_i Q) != 0
    bool ok() const {
        return reversion_fail.empty() && transposition_fail.empty() && degeneracy_fail.empty();
    }
};

template <class K>
SymmetryReport check_form_symmetries(const ClassicalForm<K>& w, const Simplex& p) {
    SymmetryReport rep;
    const int n = p.dim();
    const WeilElement v = eval_comb(w, p);
    for (int i = 1; i <= n; ++i)
        if (!(eval_comb(w, pipe_reversion(p, i)) == -v)) rep.reversion_fail.push_back(i);
    for (int i = 1; i + 1 <= n; ++i)
        if (!(eval_comb(w, pipe_transposition(p, i)) == -v)) rep.transposition_fail.push_back(i);
    if (n >= 1) {
        const Simplex q = pipe_face(p, 0, n);
        for (int i = 1; i <= n; ++i)
            if (!eval_comb(w, pipe_degeneracy(q, i)).is_zero()) rep.degeneracy_fail.push_back(i);
    }
    return rep;
}

}  // namespace cubica
