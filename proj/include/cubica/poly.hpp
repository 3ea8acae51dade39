#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cubica/errors.hpp"
#include "cubica/rational.hpp"

namespace cubica {

// Scalar-ring hooks.  Overloads for WeilElement live in weil.hpp.
inline bool kis_zero(const Rational& r) { return r == 0; }
inline Rational kscale(const Rational& a, const Rational& s) { return a * s; }
// Embed a rational into K; `sample` supplies the context for rings that
// carry one.
inline Rational kfrom_rational(const Rational& /*sample*/, const Rational& r) { return r; }

using Exps = std::vector<unsigned>;

inline unsigned total_degree(const Exps& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

// Graded lexicographic term order; canonical storage order makes polynomial
// equality syntactic.
struct GradedLex {
    bool operator()(const Exps& a, const Exps& b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial over the ring K (K = Rational or a Weil
// algebra).  Invariant: no stored zero coefficients; every exponent tuple
// has exactly `vars` entries.  Variable indices are 0-based in code.
template <class K>
struct Poly {
    int vars = 0;
    std::map<Exps, K, GradedLex> terms;

    bool is_zero() const { return terms.empty(); }

    Poly& add_term(const Exps& e, const K& c) {
        if (static_cast<int>(e.size()) != vars)
            throw DimensionError("exponent tuple length != variable count");
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!kis_zero(c)) terms.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (kis_zero(it->second)) terms.erase(it);
        }
        return *this;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars == b.vars && a.terms == b.terms;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

template <class K>
Poly<K> poly_zero(int vars) {
    Poly<K> p;
    p.vars = vars;
    return p;
}

template <class K>
Poly<K> poly_const(int vars, const K& c) {
    Poly<K> p = poly_zero<K>(vars);
    p.add_term(Exps(vars, 0), c);
    return p;
}

// Monomial x_v (0-based v).
inline Poly<Rational> poly_var(int vars, int v) {
    if (v < 0 || v >= vars) throw DimensionError("variable index out of range");
    Exps e(vars, 0);
    e[v] = 1;
    Poly<Rational> p = poly_zero<Rational>(vars);
    p.add_term(e, Rational(1));
    return p;
}

template <class K>
Poly<K> operator+(const Poly<K>& a, const Poly<K>& b) {
    if (a.vars != b.vars) throw DimensionError("polynomial variable counts differ");
    Poly<K> r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

template <class K>
Poly<K> operator-(const Poly<K>& a) {
    Poly<K> r = a;
    for (auto& [e, c] : r.terms) c = kscale(c, Rational(-1));
    return r;
}

template <class K>
Poly<K> operator-(const Poly<K>& a, const Poly<K>& b) {
    return a + (-b);
}

template <class K>
Poly<K> operator*(const Poly<K>& a, const Poly<K>& b) {
    if (a.vars != b.vars) throw DimensionError("polynomial variable counts differ");
    Poly<K> r = poly_zero<K>(a.vars);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Exps e(a.vars);
            for (int i = 0; i < a.vars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

template <class K>
Poly<K> poly_scale(const Poly<K>& a, const Rational& s) {
    Poly<K> r = poly_zero<K>(a.vars);
    if (s == 0) return r;
    for (const auto& [e, c] : a.terms) r.add_term(e, kscale(c, s));
    return r;
}

// Substitution of `pts` into p, computed in any commutative unital algebra A
// over the rationals.  `embed` maps coefficients K into A, `zero` is A's zero.
template <class A, class K, class Embed>
A eval_in(const Poly<K>& p, const std::vector<A>& pts, A zero, Embed embed) {
    if (static_cast<int>(pts.size()) != p.vars)
        throw DimensionError("evaluation point arity != variable count");
    A acc = zero;
    for (const auto& [e, c] : p.terms) {
        A term = embed(c);
        for (int v = 0; v < p.vars; ++v)
            for (unsigned k = 0; k < e[v]; ++k) term = term * pts[v];
        acc = acc + term;
    }
    return acc;
}

inline Rational eval_rational(const Poly<Rational>& p, const std::vector<Rational>& pts) {
    return eval_in<Rational>(p, pts, Rational(0), [](const Rational& c) { return c; });
}

// Exact formal partial derivative in variable v (0-based).
template <class K>
Poly<K> partial_derivative(const Poly<K>& p, int v) {
    if (v < 0 || v >= p.vars) throw DimensionError("derivative variable out of range");
    Poly<K> r = poly_zero<K>(p.vars);
    for (const auto& [e, c] : p.terms) {
        if (e[v] == 0) continue;
        Exps e2 = e;
        e2[v] -= 1;
        r.add_term(e2, kscale(c, Rational(e[v])));
    }
    return r;
}

// Antiderivative in variable v with zero constant term; the primitive F of
// the integration axiom, unique up to a constant which we pin to 0.
template <class K>
Poly<K> antiderivative(const Poly<K>& p, int v) {
    if (v < 0 || v >= p.vars) throw DimensionError("antiderivative variable out of range");
    Poly<K> r = poly_zero<K>(p.vars);
    for (const auto& [e, c] : p.terms) {
        Exps e2 = e;
        e2[v] += 1;
        r.add_term(e2, kscale(c, Rational(1, e2[v])));
    }
    return r;
}

// Substitute variable v := value; the variable count is preserved (the
// substituted variable simply no longer occurs).
template <class K>
Poly<K> eval_partial(const Poly<K>& p, int v, const Rational& value) {
    if (v < 0 || v >= p.vars) throw DimensionError("substitution variable out of range");
    Poly<K> r = poly_zero<K>(p.vars);
    for (const auto& [e, c] : p.terms) {
        Rational pw(1);
        for (unsigned k = 0; k < e[v]; ++k) pw *= value;
        Exps e2 = e;
        e2[v] = 0;
        r.add_term(e2, kscale(c, pw));
    }
    return r;
}

template <class K>
K poly_constant_term(const Poly<K>& p, K zero) {
    for (const auto& [e, c] : p.terms) {
        if (total_degree(e) == 0) return c;
        throw DimensionError("polynomial is not constant");
    }
    return zero;
}

// n-fold iterated integral over the unit cube, by repeated antiderivative
// and evaluation at 1 and 0, in the given variable order.
template <class K>
K iterated_unit_integral_order(const Poly<K>& p, const std::vector<int>& order, K zero) {
    Poly<K> q = p;
    for (int v : order) {
        Poly<K> f = antiderivative(q, v);
        q = eval_partial(f, v, Rational(1)) - eval_partial(f, v, Rational(0));
    }
    return poly_constant_term(q, zero);
}

inline Rational iterated_unit_integral(const Poly<Rational>& p) {
    std::vector<int> order(p.vars);
    std::iota(order.begin(), order.end(), 0);
    return iterated_unit_integral_order(p, order, Rational(0));
}

// ---------------------------------------------------------------------------
// Polynomial maps R^source -> R^target.

template <class K>
struct PolyMap {
    int source = 0;
    std::vector<Poly<K>> comps;

    int target() const { return static_cast<int>(comps.size()); }

    friend bool operator==(const PolyMap& a, const PolyMap& b) {
        return a.source == b.source && a.comps == b.comps;
    }
    friend bool operator!=(const PolyMap& a, const PolyMap& b) { return !(a == b); }
};

template <class K>
PolyMap<K> make_poly_map(int source, std::vector<Poly<K>> comps) {
    for (const auto& c : comps)
        if (c.vars != source) throw DimensionError("component variable count != source dim");
    PolyMap<K> f;
    f.source = source;
    f.comps = std::move(comps);
    return f;
}

inline PolyMap<Rational> make_poly_map(int source, std::initializer_list<Poly<Rational>> comps) {
    return make_poly_map(source, std::vector<Poly<Rational>>(comps));
}

inline PolyMap<Rational> identity_map(int n) {
    std::vector<Poly<Rational>> comps;
    comps.reserve(n);
    for (int i = 0; i < n; ++i) comps.push_back(poly_var(n, i));
    return make_poly_map(n, std::move(comps));
}

// Exact composition g . f (apply f first).
template <class K>
PolyMap<K> compose_maps(const PolyMap<K>& g, const PolyMap<K>& f) {
    if (f.target() != g.source)
        throw DimensionError("compose_maps: inner target dim != outer source dim");
    std::vector<Poly<K>> comps;
    comps.reserve(g.comps.size());
    for (const auto& gc : g.comps)
        comps.push_back(eval_in<Poly<K>>(gc, f.comps, poly_zero<K>(f.source),
                                         [&](const K& c) { return poly_const(f.source, c); }));
    return make_poly_map(f.source, std::move(comps));
}

template <class K>
std::vector<K> apply_map(const PolyMap<K>& f, const std::vector<K>& pt, K zero) {
    std::vector<K> out;
    out.reserve(f.comps.size());
    for (const auto& c : f.comps)
        out.push_back(eval_in<K>(c, pt, zero, [](const K& k) { return k; }));
    return out;
}

// The affine singular cube [[x0,...,xn]] of an n-simplex:
// s |-> (1 - sum s_a) x0 + sum s_a x_a.
template <class K>
PolyMap<K> affine_cube_map(const std::vector<std::vector<K>>& pts) {
    if (pts.empty()) throw DimensionError("affine_cube_map: empty simplex");
    const int n = static_cast<int>(pts.size()) - 1;
    const int m = static_cast<int>(pts[0].size());
    std::vector<Poly<K>> comps;
    comps.reserve(m);
    for (int i = 0; i < m; ++i) {
        Poly<K> c = poly_const(n, pts[0][i]);
        for (int a = 1; a <= n; ++a) {
            Exps e(n, 0);
            e[a - 1] = 1;
            c.add_term(e, pts[a][i] + kscale(pts[0][i], Rational(-1)));
        }
        comps.push_back(c);
    }
    return make_poly_map(n, std::move(comps));
}

// Subdivision maps: h_{s,i} scales slot i by s, k_{s,i} maps
// slot i affinely onto [s, 1].  Directions i are 1-based.
inline PolyMap<Rational> subdivision_h(int n, int i, const Rational& s) {
    if (i < 1 || i > n) throw DimensionError("subdivision direction out of range");
    PolyMap<Rational> f = identity_map(n);
    f.comps[i - 1] = poly_scale(poly_var(n, i - 1), s);
    return f;
}

inline PolyMap<Rational> subdivision_k(int n, int i, const Rational& s) {
    if (i < 1 || i > n) throw DimensionError("subdivision direction out of range");
    PolyMap<Rational> f = identity_map(n);
    f.comps[i - 1] = poly_const(n, s) + poly_scale(poly_var(n, i - 1), Rational(1) - s);
    return f;
}

// Lift a rational-coefficient map into the ring K (sample supplies context).
template <class K>
PolyMap<K> lift_map(const PolyMap<Rational>& f, const K& sample) {
    std::vector<Poly<K>> comps;
    comps.reserve(f.comps.size());
    for (const auto& c : f.comps) {
        Poly<K> lc = poly_zero<K>(c.vars);
        for (const auto& [e, r] : c.terms) lc.add_term(e, kfrom_rational(sample, r));
        comps.push_back(std::move(lc));
    }
    return make_poly_map(f.source, std::move(comps));
}

inline std::string exps_to_string(const Exps& e) {
    std::ostringstream os;
    bool any = false;
    for (size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (any) os << "*";
        os << "x" << (v + 1);
        if (e[v] > 1) os << "^" << e[v];
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

inline std::string poly_to_string(const Poly<Rational>& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        if (!first) os << " + ";
        os << to_wire(it->second) << "*" << exps_to_string(it->first);
        first = false;
    }
    return os.str();
}

}  // namespace cubica
