#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "cubica/poly.hpp"

namespace cubica {

// ---------------------------------------------------------------------------
// The first-neighbourhood nilpotent algebra.
//
// Generators eps[a,i] model the coordinate displacements of the vertices of
// a generic infinitesimal simplex: slot a = vertex index (1..slots), coord
// i = coordinate index (1..coords).  Defining relations:
//
//     eps[a,i] * eps[a,j] = 0                         (same slot)
//     eps[a,i] * eps[b,j] = -eps[b,i] * eps[a,j]      (a != b)
//
// i.e. the commutative quotient in which every monomial with a repeated slot
// or a repeated coordinate vanishes, and permuting the coordinates of a
// monomial across its slots costs the sign of the permutation.  A context
// may carry several independent generator families (no relations across
// families beyond commutativity); the second family is used when forms on
// R^n have to be evaluated on fresh test simplices.

struct WeilFamily {
    int slots = 0;   // n >= 0
    int coords = 1;  // m >= 1
    friend bool operator==(const WeilFamily&, const WeilFamily&) = default;
};

struct WeilContext {
    std::vector<WeilFamily> families;
    friend bool operator==(const WeilContext&, const WeilContext&) = default;
};

inline WeilContext make_context(int slots, int coords) {
    if (slots < 0 || coords < 1) throw DimensionError("invalid Weil context dimensions");
    return WeilContext{{WeilFamily{slots, coords}}};
}

inline WeilContext make_context(std::vector<WeilFamily> fams) {
    for (const auto& f : fams)
        if (f.slots < 0 || f.coords < 1) throw DimensionError("invalid Weil context dimensions");
    return WeilContext{std::move(fams)};
}

// A single generator occurrence: (family, slot, coord), slot/coord 1-based.
struct WeilGen {
    int fam = 0;
    int slot = 0;
    int coord = 0;
    friend auto operator<=>(const WeilGen&, const WeilGen&) = default;
};

// Normal monomial: generators sorted by (family, slot), with the coordinate
// sequence of each family strictly increasing.  Degree <= slots per family.
using WeilMonomial = std::vector<WeilGen>;

// Reduce an arbitrary product of generators to +/- a normal monomial, or to
// zero.  Returns the sign, or nullopt when the product vanishes.
inline std::optional<int> normalize_monomial(WeilMonomial& gens) {
    std::sort(gens.begin(), gens.end());
    for (size_t k = 1; k < gens.size(); ++k)
        if (gens[k].fam == gens[k - 1].fam && gens[k].slot == gens[k - 1].slot)
            return std::nullopt;  // repeated slot
    int sign = 1;
    size_t lo = 0;
    while (lo < gens.size()) {
        size_t hi = lo;
        while (hi < gens.size() && gens[hi].fam == gens[lo].fam) ++hi;
        // Sort the coordinate sequence of this family, tracking parity.
        for (size_t a = lo; a < hi; ++a)
            for (size_t b = a + 1; b < hi; ++b) {
                if (gens[a].coord == gens[b].coord) return std::nullopt;  // repeated coord
                if (gens[a].coord > gens[b].coord) {
                    std::swap(gens[a].coord, gens[b].coord);
                    sign = -sign;
                }
            }
        lo = hi;
    }
    return sign;
}

class WeilElement {
public:
    WeilElement() = default;
    WeilElement(WeilContext ctx, Rational scalar)
        : ctx_(std::move(ctx)), scalar_(std::move(scalar)) {}

    static WeilElement scalar(const WeilContext& ctx, const Rational& r) {
        return WeilElement(ctx, r);
    }

    static WeilElement generator(const WeilContext& ctx, int fam, int slot, int coord) {
        if (fam < 0 || fam >= static_cast<int>(ctx.families.size()))
            throw DimensionError("generator family out of range");
        const WeilFamily& f = ctx.families[fam];
        if (slot < 1 || slot > f.slots || coord < 1 || coord > f.coords)
            throw DimensionError("generator slot/coordinate out of range");
        WeilElement e(ctx, Rational(0));
        e.nil_.emplace(WeilMonomial{WeilGen{fam, slot, coord}}, Rational(1));
        return e;
    }

    const WeilContext& context() const { return ctx_; }
    const Rational& scalar_part() const { return scalar_; }
    const std::map<WeilMonomial, Rational>& nil_terms() const { return nil_; }

    bool is_zero() const { return scalar_ == 0 && nil_.empty(); }
    bool is_scalar() const { return nil_.empty(); }

    WeilElement& add_term(WeilMonomial mono, const Rational& c) {
        if (mono.empty()) {
            scalar_ += c;
            return *this;
        }
        auto it = nil_.find(mono);
        if (it == nil_.end()) {
            if (c != 0) nil_.emplace(std::move(mono), c);
        } else {
            it->second += c;
            if (it->second == 0) nil_.erase(it);
        }
        return *this;
    }

    friend WeilElement operator+(const WeilElement& a, const WeilElement& b) {
        a.require_same_context(b);
        WeilElement r = a;
        r.scalar_ += b.scalar_;
        for (const auto& [m, c] : b.nil_) r.add_term(m, c);
        return r;
    }

    friend WeilElement operator-(const WeilElement& a) {
        WeilElement r = a;
        r.scalar_ = -r.scalar_;
        for (auto& [m, c] : r.nil_) c = -c;
        return r;
    }

    friend WeilElement operator-(const WeilElement& a, const WeilElement& b) {
        return a + (-b);
    }

    // Fully reduced product in normal form.
    friend WeilElement operator*(const WeilElement& a, const WeilElement& b) {
        a.require_same_context(b);
        WeilElement r(a.ctx_, a.scalar_ * b.scalar_);
        for (const auto& [m, c] : a.nil_) r.add_term(m, c * b.scalar_);
        for (const auto& [m, c] : b.nil_) r.add_term(m, c * a.scalar_);
        for (const auto& [ma, ca] : a.nil_)
            for (const auto& [mb, cb] : b.nil_) {
                WeilMonomial prod = ma;
                prod.insert(prod.end(), mb.begin(), mb.end());
                if (auto sign = normalize_monomial(prod))
                    r.add_term(std::move(prod), ca * cb * *sign);
            }
        return r;
    }

    WeilElement scaled(const Rational& s) const {
        WeilElement r(ctx_, scalar_ * s);
        if (s == 0) return r;
        for (const auto& [m, c] : nil_) r.nil_.emplace(m, c * s);
        return r;
    }

    friend bool operator==(const WeilElement& a, const WeilElement& b) {
        return a.ctx_ == b.ctx_ && a.scalar_ == b.scalar_ && a.nil_ == b.nil_;
    }
    friend bool operator!=(const WeilElement& a, const WeilElement& b) { return !(a == b); }

    // Coefficient of a monomial given as a raw generator product.
    Rational coefficient(WeilMonomial mono) const {
        if (mono.empty()) return scalar_;
        auto sign = normalize_monomial(mono);
        if (!sign) throw DimensionError("queried monomial is zero in the algebra");
        auto it = nil_.find(mono);
        return it == nil_.end() ? Rational(0) : it->second * *sign;
    }

    std::string str() const {
        std::ostringstream os;
        os << to_wire(scalar_);
        for (const auto& [m, c] : nil_) {
            os << " + " << to_wire(c);
            for (const auto& g : m) {
                os << "*e";
                if (g.fam > 0) os << "'";
                os << "[" << g.slot << "," << g.coord << "]";
            }
        }
        return os.str();
    }

private:
    void require_same_context(const WeilElement& o) const {
        if (!(ctx_ == o.ctx_)) throw ContextError("Weil elements from different contexts");
    }

    WeilContext ctx_;
    Rational scalar_ = 0;
    std::map<WeilMonomial, Rational> nil_;
};

inline bool kis_zero(const WeilElement& e) { return e.is_zero(); }
inline WeilElement kscale(const WeilElement& e, const Rational& s) { return e.scaled(s); }
inline WeilElement kfrom_rational(const WeilElement& sample, const Rational& r) {
    return WeilElement::scalar(sample.context(), r);
}

inline WeilElement weil_zero(const WeilContext& ctx) {
    return WeilElement::scalar(ctx, Rational(0));
}

// All canonical normal monomials of the given degree (basis enumeration for
// the dimension-count invariant).
inline std::vector<WeilMonomial> enumerate_normal_monomials(const WeilContext& ctx, int degree);

namespace detail {
inline void enumerate_family(const WeilContext& ctx, size_t fam, int remaining,
                             WeilMonomial& acc, std::vector<WeilMonomial>& out) {
    if (fam == ctx.families.size()) {
        if (remaining == 0) out.push_back(acc);
        return;
    }
    const WeilFamily& f = ctx.families[fam];
    const int maxk = std::min({remaining, f.slots, f.coords});
    for (int k = 0; k <= maxk; ++k) {
        // choose k slots and k coords, both ascending, paired in order
        std::vector<int> slots(k), coords(k);
        auto rec_coords = [&](auto&& self, int pos, int start) -> void {
            if (pos == k) {
                size_t base = acc.size();
                for (int t = 0; t < k; ++t)
                    acc.push_back(WeilGen{static_cast<int>(fam), slots[t], coords[t]});
                enumerate_family(ctx, fam + 1, remaining - k, acc, out);
                acc.resize(base);
                return;
            }
            for (int c = start; c <= f.coords; ++c) {
                coords[pos] = c;
                self(self, pos + 1, c + 1);
            }
        };
        auto rec_slots = [&](auto&& self, int pos, int start) -> void {
            if (pos == k) {
                rec_coords(rec_coords, 0, 1);
                return;
            }
            for (int s = start; s <= f.slots; ++s) {
                slots[pos] = s;
                self(self, pos + 1, s + 1);
            }
        };
        rec_slots(rec_slots, 0, 1);
    }
}
}  // namespace detail

inline std::vector<WeilMonomial> enumerate_normal_monomials(const WeilContext& ctx, int degree) {
    std::vector<WeilMonomial> out;
    WeilMonomial acc;
    detail::enumerate_family(ctx, 0, degree, acc, out);
    return out;
}

// ---------------------------------------------------------------------------
// Points and simplices with nilpotent displacements.

struct InfPoint {
    std::vector<WeilElement> coords;  // coordinate i stored at coords[i-1]

    int dim() const { return static_cast<int>(coords.size()); }
    const WeilContext& context() const {
        if (coords.empty()) throw DimensionError("empty point");
        return coords[0].context();
    }

    std::vector<Rational> base() const {
        std::vector<Rational> b;
        b.reserve(coords.size());
        for (const auto& c : coords) b.push_back(c.scalar_part());
        return b;
    }

    friend bool operator==(const InfPoint&, const InfPoint&) = default;
};

inline InfPoint operator+(const InfPoint& a, const InfPoint& b) {
    if (a.dim() != b.dim()) throw DimensionError("point dimensions differ");
    InfPoint r = a;
    for (int i = 0; i < a.dim(); ++i) r.coords[i] = a.coords[i] + b.coords[i];
    return r;
}

inline InfPoint operator-(const InfPoint& a, const InfPoint& b) {
    if (a.dim() != b.dim()) throw DimensionError("point dimensions differ");
    InfPoint r = a;
    for (int i = 0; i < a.dim(); ++i) r.coords[i] = a.coords[i] - b.coords[i];
    return r;
}

inline InfPoint point_scaled(const InfPoint& a, const Rational& s) {
    InfPoint r = a;
    for (auto& c : r.coords) c = c.scaled(s);
    return r;
}

inline InfPoint rational_point(const WeilContext& ctx, const std::vector<Rational>& p) {
    InfPoint pt;
    pt.coords.reserve(p.size());
    for (const auto& c : p) pt.coords.push_back(WeilElement::scalar(ctx, c));
    return pt;
}

// First-order neighbour test: all products of coordinate differences vanish.
inline bool are_neighbours(const InfPoint& x, const InfPoint& y) {
    if (x.dim() != y.dim()) throw DimensionError("point dimensions differ");
    const InfPoint d = x - y;
    for (int i = 0; i < d.dim(); ++i)
        for (int j = i; j < d.dim(); ++j)
            if (!(d.coords[i] * d.coords[j]).is_zero()) return false;
    return true;
}

// An n-simplex: n+1 vertices in one context, no neighbour requirement (a
// plain parallelepipedum in affine coordinates fits here too; infinitesimal
// simplices are the validated case below).
struct Simplex {
    std::vector<InfPoint> verts;

    int dim() const { return static_cast<int>(verts.size()) - 1; }
    int ambient() const { return verts.at(0).dim(); }
    const WeilContext& context() const { return verts.at(0).context(); }
    const InfPoint& vertex(int a) const { return verts.at(a); }  // 0..dim

    friend bool operator==(const Simplex&, const Simplex&) = default;
};

inline bool is_infinitesimal(const Simplex& s) {
    for (size_t a = 0; a + 1 < s.verts.size(); ++a)
        for (size_t b = a + 1; b < s.verts.size(); ++b)
            if (!are_neighbours(s.verts[a], s.verts[b])) return false;
    return true;
}

inline const Simplex& require_infinitesimal(const Simplex& s) {
    if (!is_infinitesimal(s))
        throw DimensionError("vertices are not pairwise first-order neighbours");
    return s;
}

// x_a = p + t_a * eps[a,.] in the given generator family.
inline Simplex scaled_simplex(const WeilContext& ctx, int fam, const std::vector<Rational>& p,
                              int n, const std::vector<Rational>& scales) {
    if (fam < 0 || fam >= static_cast<int>(ctx.families.size()))
        throw DimensionError("family index out of range");
    const WeilFamily& f = ctx.families[fam];
    if (n > f.slots) throw DimensionError("simplex dimension exceeds context slots");
    if (static_cast<int>(p.size()) != f.coords)
        throw DimensionError("base point dimension != context coords");
    if (static_cast<int>(scales.size()) != n) throw DimensionError("one scale per vertex needed");
    Simplex s;
    s.verts.push_back(rational_point(ctx, p));
    for (int a = 1; a <= n; ++a) {
        InfPoint v = rational_point(ctx, p);
        for (int i = 1; i <= f.coords; ++i)
            v.coords[i - 1] =
                v.coords[i - 1] + WeilElement::generator(ctx, fam, a, i).scaled(scales[a - 1]);
        s.verts.push_back(std::move(v));
    }
    return s;
}

inline Simplex generic_simplex(const WeilContext& ctx, int fam, const std::vector<Rational>& p,
                               int n) {
    return scaled_simplex(ctx, fam, p, n, std::vector<Rational>(n, Rational(1)));
}

inline Simplex generic_simplex(const std::vector<Rational>& p, int n) {
    return generic_simplex(make_context(n, static_cast<int>(p.size())), 0, p, n);
}

// Affine combination of the vertices; legal on infinitesimal simplices for
// any coefficients summing to 1, and on arbitrary simplices with scalar
// coordinates.
inline InfPoint affine_combination(const Simplex& s, const std::vector<Rational>& coeffs) {
    if (coeffs.size() != s.verts.size())
        throw DimensionError("coefficient count != vertex count");
    Rational sum(0);
    for (const auto& c : coeffs) sum += c;
    if (sum != 1) throw AffineError("affine combination coefficients must sum to 1");
    InfPoint acc = point_scaled(s.verts[0], coeffs[0]);
    for (size_t a = 1; a < s.verts.size(); ++a)
        acc = acc + point_scaled(s.verts[a], coeffs[a]);
    return acc;
}

// Vertex of the parallelepipedum for a subset H of {1..n}:
// x_H = x0 + sum_{h in H} (x_h - x0).
inline InfPoint pipe_vertex(const Simplex& s, const std::vector<int>& subset) {
    std::vector<Rational> coeffs(s.verts.size(), Rational(0));
    coeffs[0] = Rational(1) - Rational(static_cast<long long>(subset.size()));
    for (int h : subset) {
        if (h < 1 || h > s.dim()) throw DimensionError("subset entry out of range");
        coeffs[h] += 1;
    }
    return affine_combination(s, coeffs);
}

// All 2^n vertices, indexed by the binary vertex labels: label v has cube
// coordinates equal to the digits of v written with n binary digits, so bit
// j (1-based, most significant first) is direction j.
inline std::vector<int> label_subset(int label, int n) {
    std::vector<int> subset;
    for (int j = 1; j <= n; ++j)
        if ((label >> (n - j)) & 1) subset.push_back(j);
    return subset;
}

inline std::vector<InfPoint> pipe_vertices(const Simplex& s) {
    const int n = s.dim();
    std::vector<InfPoint> out;
    out.reserve(1u << n);
    for (int label = 0; label < (1 << n); ++label)
        out.push_back(pipe_vertex(s, label_subset(label, n)));
    return out;
}

inline InfPoint apply_poly_map(const PolyMap<Rational>& f, const InfPoint& x) {
    if (f.source != x.dim()) throw DimensionError("map source dim != point dim");
    const WeilContext& ctx = x.context();
    InfPoint out;
    out.coords.reserve(f.comps.size());
    for (const auto& comp : f.comps)
        out.coords.push_back(eval_in<WeilElement>(
            comp, x.coords, weil_zero(ctx),
            [&](const Rational& c) { return WeilElement::scalar(ctx, c); }));
    return out;
}

inline Simplex apply_poly_map(const PolyMap<Rational>& f, const Simplex& s) {
    Simplex out;
    out.verts.reserve(s.verts.size());
    for (const auto& v : s.verts) out.verts.push_back(apply_poly_map(f, v));
    return out;
}

}  // namespace cubica
