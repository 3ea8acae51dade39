#pragma once

#include "cubica/forms.hpp"
#include "cubica/groupoid.hpp"
#include "cubica/rng.hpp"

namespace cubica {

// Seeded random generation of the exact objects the suites quantify over.

inline Poly<Rational> random_poly(Rng& rng, int vars, int max_degree, int terms = 3) {
    Poly<Rational> p = poly_zero<Rational>(vars);
    for (int t = 0; t < terms; ++t) {
        Exps e(vars, 0);
        int budget = static_cast<int>(rng.range(0, max_degree));
        for (int b = 0; b < budget; ++b) e[rng.range(0, vars - 1)] += 1;
        p.add_term(e, rng.rational());
    }
    return p;
}

inline PolyMap<Rational> random_poly_map(Rng& rng, int source, int target, int max_degree) {
    std::vector<Poly<Rational>> comps;
    comps.reserve(target);
    for (int i = 0; i < target; ++i) comps.push_back(random_poly(rng, source, max_degree));
    return make_poly_map(source, std::move(comps));
}

inline std::vector<Rational> random_point(Rng& rng, int dim) {
    std::vector<Rational> p;
    p.reserve(dim);
    for (int i = 0; i < dim; ++i) p.push_back(rng.rational());
    return p;
}

inline ClassicalForm<Rational> random_form(Rng& rng, int dim, int degree, int max_coeff_degree,
                                           int terms_per_axes = 1) {
    ClassicalForm<Rational> w = form_zero<Rational>(dim, degree);
    std::vector<int> axes(degree);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == degree) {
            for (int t = 0; t < terms_per_axes; ++t)
                form_add_term(w, axes, random_poly(rng, dim, max_coeff_degree, 2));
            return;
        }
        for (int a = start; a <= dim; ++a) {
            axes[pos] = a;
            self(self, pos + 1, a + 1);
        }
    };
    if (degree == 0)
        form_add_term(w, {}, random_poly(rng, dim, max_coeff_degree, 2));
    else
        rec(rec, 0, 1);
    return w;
}

// Affine cube through random rational points (an honest parallelepipedum).
inline SingularCube<Rational> random_affine_cube(Rng& rng, int dim, int ambient) {
    std::vector<std::vector<Rational>> pts;
    pts.reserve(dim + 1);
    for (int a = 0; a <= dim; ++a) pts.push_back(random_point(rng, ambient));
    return make_cube(affine_cube_map(pts));
}

inline SingularCube<Rational> random_cube(Rng& rng, int dim, int ambient, int max_degree) {
    return make_cube(random_poly_map(rng, dim, ambient, max_degree));
}

inline FreeArrow random_word(Rng& rng, const FreeGroupoid& g, const std::string& src, int len) {
    std::string at = src;
    std::vector<Letter> raw;
    for (int t = 0; t < len; ++t) {
        std::vector<Letter> options;
        for (size_t k = 0; k < g.graph.edges.size(); ++k) {
            if (g.graph.edges[k].src == at) options.push_back(Letter{static_cast<int>(k), true});
            if (g.graph.edges[k].dst == at) options.push_back(Letter{static_cast<int>(k), false});
        }
        if (options.empty()) break;
        raw.push_back(options[rng.range(0, static_cast<long long>(options.size()) - 1)]);
        const auto& e = g.graph.edges[raw.back().edge];
        at = raw.back().fwd ? e.dst : e.src;
    }
    return word_reduce(g.graph, src, raw);
}

}  // namespace cubica
