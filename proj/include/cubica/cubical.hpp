#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "cubica/weil.hpp"

namespace cubica {

// ---------------------------------------------------------------------------
// Cubical structure on infinitesimal (and affine) parallelepipeda.
//
// A Simplex (x0; x1, ..., xn) is identified with the parallelepipedum
// P(x0; x1, ..., xn) and with the affine singular cube [[x0, ..., xn]]; all
// operators below are written on the simplex representation.  Directions i
// are 1-based.

inline void require_direction(int i, int n, const char* what) {
    if (i < 1 || i > n) throw DimensionError(std::string(what) + ": direction out of range");
}

// d^0_i omits x_i; d^1_i rebases at x_i, sending x_j to x_j - x0 + x_i.
inline Simplex pipe_face(const Simplex& s, int alpha, int i) {
    const int n = s.dim();
    require_direction(i, n, "pipe_face");
    Simplex out;
    if (alpha == 0) {
        out.verts = s.verts;
        out.verts.erase(out.verts.begin() + i);
        return out;
    }
    out.verts.push_back(s.verts[i]);
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        out.verts.push_back(s.verts[j] - s.verts[0] + s.verts[i]);
    }
    return out;
}

// eps_i inserts x0 in slot i.
inline Simplex pipe_degeneracy(const Simplex& s, int i) {
    require_direction(i, s.dim() + 1, "pipe_degeneracy");
    Simplex out = s;
    out.verts.insert(out.verts.begin() + i, s.verts[0]);
    return out;
}

// sigma_i swaps the i-th and (i+1)-st edge at the base vertex.
inline Simplex pipe_transposition(const Simplex& s, int i) {
    require_direction(i, s.dim() - 1, "pipe_transposition");
    Simplex out = s;
    std::swap(out.verts[i], out.verts[i + 1]);
    return out;
}

// rho_i = -_i, the groupoid inversion in direction i:
// -_i P(x0; x1,...,xn) = P(x_i; ..., x_j - x0 + x_i, ..., x0, ...).
inline Simplex pipe_reversion(const Simplex& s, int i) {
    const int n = s.dim();
    require_direction(i, n, "pipe_reversion");
    Simplex out;
    out.verts.push_back(s.verts[i]);
    for (int j = 1; j <= n; ++j) {
        if (j == i)
            out.verts.push_back(s.verts[0]);
        else
            out.verts.push_back(s.verts[j] - s.verts[0] + s.verts[i]);
    }
    return out;
}

// (i,s)-subdivision: P(x0;...,x_i,...) splits at y = (1-t) x0 + t x_i into
// the pieces [[..]] o h_{t,i} and [[..]] o k_{t,i}.
inline std::pair<Simplex, Simplex> pipe_subdivide(const Simplex& s, int i, const Rational& t) {
    const int n = s.dim();
    require_direction(i, n, "pipe_subdivide");
    const InfPoint y = point_scaled(s.verts[0], Rational(1) - t) + point_scaled(s.verts[i], t);
    Simplex first = s;
    first.verts[i] = y;
    Simplex second;
    second.verts.push_back(y);
    for (int j = 1; j <= n; ++j) {
        if (j == i)
            second.verts.push_back(s.verts[i]);
        else
            second.verts.push_back(s.verts[j] - s.verts[0] + y);
    }
    return {first, second};
}

// i-th groupoid composition of parallelepipeda: keep P's vertices, replace
// slot i by P''s slot-i vertex.  Requires d^1_i P = d^0_i P'.
inline Simplex pipe_compose(const Simplex& p, const Simplex& q, int i) {
    require_direction(i, p.dim(), "pipe_compose");
    if (p.dim() != q.dim()) throw CompositionError("pipe_compose: dimension mismatch");
    if (!(pipe_face(p, 1, i) == pipe_face(q, 0, i)))
        throw CompositionError("pipe_compose: d^1_i lhs != d^0_i rhs");
    Simplex out = p;
    out.verts[i] = q.verts[i];
    return out;
}

inline Simplex pipe_identity(const Simplex& s, int i) {
    return pipe_degeneracy(pipe_face(s, 1, i), i);
}

// The affine pipe groupoid is a cubical equivalence relation: for two
// (n-1)-cells and a direction there is at most one n-cell with them as
// d^0_i / d^1_i faces.  Returns it, or nullopt when the constraints fail.
inline std::optional<Simplex> solve_pipe(const Simplex& q0, const Simplex& q1, int i) {
    if (q0.dim() != q1.dim()) return std::nullopt;
    const int n = q0.dim() + 1;
    require_direction(i, n, "solve_pipe");
    Simplex cand;
    cand.verts.push_back(q0.verts[0]);
    int taken = 0;
    for (int j = 1; j <= n; ++j) {
        if (j == i)
            cand.verts.push_back(q1.verts[0]);
        else
            cand.verts.push_back(q0.verts[1 + taken++]);
    }
    if (!(pipe_face(cand, 0, i) == q0) || !(pipe_face(cand, 1, i) == q1)) return std::nullopt;
    return cand;
}

// ---------------------------------------------------------------------------
// Singular cubes f : R^k -> R^m with polynomial components; all structure is
// exact precomposition with affine maps.

template <class K>
struct SingularCube {
    PolyMap<K> map;
    K kzero{};  // zero of the coefficient ring (supplies context for K = Weil)

    int dim() const { return map.source; }
    int ambient() const { return map.target(); }

    friend bool operator==(const SingularCube& a, const SingularCube& b) {
        return a.map == b.map;
    }
};

template <class K>
SingularCube<K> make_cube(PolyMap<K> f, K kzero = K{}) {
    return SingularCube<K>{std::move(f), std::move(kzero)};
}

inline SingularCube<Rational> identity_cube(int n) { return make_cube(identity_map(n)); }

// [[x0,...,xn]] as a singular cube; coefficients live in the Weil algebra.
inline SingularCube<WeilElement> cube_of_simplex(const Simplex& s) {
    std::vector<std::vector<WeilElement>> pts;
    pts.reserve(s.verts.size());
    for (const auto& v : s.verts) pts.push_back(v.coords);
    return make_cube(affine_cube_map(pts), weil_zero(s.context()));
}

// Face insertion map R^{k-1} -> R^k placing alpha in slot i.
inline PolyMap<Rational> face_insertion(int k, int alpha, int i) {
    require_direction(i, k, "face_insertion");
    std::vector<Poly<Rational>> comps;
    comps.reserve(k);
    for (int p = 1; p <= k; ++p) {
        if (p == i)
            comps.push_back(poly_const(k - 1, Rational(alpha)));
        else
            comps.push_back(poly_var(k - 1, p < i ? p - 1 : p - 2));
    }
    return make_poly_map(k - 1, std::move(comps));
}

// Projection R^k -> R^{k-1} omitting coordinate i (induces the degeneracy).
inline PolyMap<Rational> omit_projection(int k, int i) {
    require_direction(i, k, "omit_projection");
    std::vector<Poly<Rational>> comps;
    for (int p = 1; p <= k; ++p)
        if (p != i) comps.push_back(poly_var(k, p - 1));
    return make_poly_map(k, std::move(comps));
}

inline PolyMap<Rational> swap_map(int k, int i) {
    require_direction(i, k - 1, "swap_map");
    PolyMap<Rational> f = identity_map(k);
    std::swap(f.comps[i - 1], f.comps[i]);
    return f;
}

inline PolyMap<Rational> reflect_map(int k, int i) {
    require_direction(i, k, "reflect_map");
    PolyMap<Rational> f = identity_map(k);
    f.comps[i - 1] = poly_const(k, Rational(1)) - poly_var(k, i - 1);
    return f;
}

template <class K>
SingularCube<K> precompose(const SingularCube<K>& f, const PolyMap<Rational>& a) {
    return make_cube(compose_maps(f.map, lift_map(a, f.kzero)), f.kzero);
}

template <class K>
SingularCube<K> cube_face(const SingularCube<K>& f, int alpha, int i) {
    return precompose(f, face_insertion(f.dim(), alpha, i));
}

template <class K>
SingularCube<K> cube_degeneracy(const SingularCube<K>& f, int i) {
    return precompose(f, omit_projection(f.dim() + 1, i));
}

template <class K>
SingularCube<K> cube_transposition(const SingularCube<K>& f, int i) {
    return precompose(f, swap_map(f.dim(), i));
}

template <class K>
SingularCube<K> cube_reversion(const SingularCube<K>& f, int i) {
    return precompose(f, reflect_map(f.dim(), i));
}

template <class K>
std::pair<SingularCube<K>, SingularCube<K>> cube_subdivide(const SingularCube<K>& f, int i,
                                                           const Rational& s) {
    return {precompose(f, subdivision_h(f.dim(), i, s)),
            precompose(f, subdivision_k(f.dim(), i, s))};
}

// Image of a binary corner label under the cube (vertex map of the cell).
template <class K>
std::vector<K> cube_corner(const SingularCube<K>& f, int label) {
    std::vector<K> pt;
    pt.reserve(f.dim());
    const auto subset = label_subset(label, f.dim());
    for (int j = 1; j <= f.dim(); ++j) {
        const bool on = std::find(subset.begin(), subset.end(), j) != subset.end();
        pt.push_back(kfrom_rational(f.kzero, Rational(on ? 1 : 0)));
    }
    return apply_map(f.map, pt, f.kzero);
}

// ---------------------------------------------------------------------------
// Shells: 2(n+1)-tuples of n-cells whose boundaries match up as if they were
// the faces of an (n+1)-cell.  Generic over a cell-operations object Ops
// providing face / equal (and compose / invert / degen where needed).

template <class Cell>
struct BoxShell {
    std::vector<std::array<Cell, 2>> faces;  // faces[i-1][alpha]

    int directions() const { return static_cast<int>(faces.size()); }  // = n+1
    const Cell& face(int alpha, int i) const { return faces.at(i - 1).at(alpha); }

    friend bool operator==(const BoxShell&, const BoxShell&) = default;
};

template <class Cell, class Ops>
void require_shell_adjacency(const BoxShell<Cell>& sh, const Ops& ops) {
    const int total = sh.directions();
    for (int i = 1; i < total; ++i)
        for (int j = i + 1; j <= total; ++j)
            for (int alpha = 0; alpha <= 1; ++alpha)
                for (int beta = 0; beta <= 1; ++beta)
                    if (!ops.equal(ops.face(sh.face(beta, j), alpha, i),
                                   ops.face(sh.face(alpha, i), beta, j - 1)))
                        throw AdjacencyError("shell faces fail the adjacency equations");
}

template <class Cell, class Ops>
BoxShell<Cell> make_shell(std::vector<std::array<Cell, 2>> faces, const Ops& ops) {
    BoxShell<Cell> sh{std::move(faces)};
    require_shell_adjacency(sh, ops);
    return sh;
}

// Front adjunction: an (n+1)-cell to its boundary shell.
template <class Cell, class Ops>
BoxShell<Cell> boundary_shell(const Cell& c, const Ops& ops) {
    std::vector<std::array<Cell, 2>> faces;
    const int total = ops.dim(c);
    faces.reserve(total);
    for (int i = 1; i <= total; ++i)
        faces.push_back({ops.face(c, 0, i), ops.face(c, 1, i)});
    return make_shell(std::move(faces), ops);
}

// Concatenation of shells in direction i, via the compositions of the
// underlying n-cells: d^a_j(x +_i y) = d^a_j x +_{i'} d^a_j y for j != i.
template <class Cell, class Ops>
BoxShell<Cell> shell_compose(const BoxShell<Cell>& x, const BoxShell<Cell>& y, int i,
                             const Ops& ops) {
    const int total = x.directions();
    require_direction(i, total, "shell_compose");
    if (y.directions() != total) throw CompositionError("shell_compose: dimension mismatch");
    if (!(x.face(1, i) == y.face(0, i)))
        throw CompositionError("shell_compose: d^1_i lhs != d^0_i rhs");
    std::vector<std::array<Cell, 2>> faces;
    for (int j = 1; j <= total; ++j) {
        if (j == i) {
            faces.push_back({x.face(0, i), y.face(1, i)});
        } else {
            const int ip = j < i ? i - 1 : i;
            faces.push_back({ops.compose(x.face(0, j), y.face(0, j), ip),
                             ops.compose(x.face(1, j), y.face(1, j), ip)});
        }
    }
    return make_shell(std::move(faces), ops);
}

template <class Cell, class Ops>
BoxShell<Cell> shell_invert(const BoxShell<Cell>& x, int i, const Ops& ops) {
    const int total = x.directions();
    require_direction(i, total, "shell_invert");
    std::vector<std::array<Cell, 2>> faces;
    for (int j = 1; j <= total; ++j) {
        if (j == i) {
            faces.push_back({x.face(1, i), x.face(0, i)});
        } else {
            const int ip = j < i ? i - 1 : i;
            faces.push_back({ops.invert(x.face(0, j), ip), ops.invert(x.face(1, j), ip)});
        }
    }
    return make_shell(std::move(faces), ops);
}

// Identity shell in direction i over an n-cell c.
template <class Cell, class Ops>
BoxShell<Cell> shell_identity(const Cell& c, int i, const Ops& ops) {
    const int total = ops.dim(c) + 1;
    require_direction(i, total, "shell_identity");
    std::vector<std::array<Cell, 2>> faces;
    for (int j = 1; j <= total; ++j) {
        if (j == i) {
            faces.push_back({c, c});
        } else {
            const int ip = j < i ? i - 1 : i;
            const int jp = j < i ? j : j - 1;
            faces.push_back({ops.degen(ops.face(c, 0, jp), ip), ops.degen(ops.face(c, 1, jp), ip)});
        }
    }
    return make_shell(std::move(faces), ops);
}

// Cell operations for the pipe carrier.
struct PipeOps {
    Simplex face(const Simplex& s, int alpha, int i) const { return pipe_face(s, alpha, i); }
    Simplex compose(const Simplex& a, const Simplex& b, int i) const {
        return pipe_compose(a, b, i);
    }
    Simplex invert(const Simplex& s, int i) const { return pipe_reversion(s, i); }
    Simplex degen(const Simplex& s, int i) const { return pipe_degeneracy(s, i); }
    int dim(const Simplex& s) const { return s.dim(); }
    bool equal(const Simplex& a, const Simplex& b) const { return a == b; }
};

using PipeShell = BoxShell<Simplex>;

}  // namespace cubica
