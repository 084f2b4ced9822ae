#pragma once

#include <memory>
#include <random>
#include <vector>

#include "tropcurves/newton.hpp"
#include "tropcurves/potential.hpp"
#include "tropcurves/skeleton.hpp"
#include "tropcurves/tropicalize.hpp"

namespace tropcurves::testutil {

using Rng = std::mt19937_64;

inline Rat random_positive_rat(Rng& rng, int max_num = 12, int max_den = 6) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rat(num(rng), den(rng));
}

inline Rat random_rat(Rng& rng, int max_abs_num = 8, int max_den = 4) {
    std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rat(num(rng), den(rng));
}

// Random tree skeleton with punctures at random vertices.
inline std::shared_ptr<const Skeleton> random_tree(Rng& rng, int vertices, int punctures) {
    std::vector<std::string> labels;
    std::vector<Skeleton::Edge> edges;
    for (int v = 0; v < vertices; ++v) labels.push_back("v" + std::to_string(v));
    for (int v = 1; v < vertices; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.push_back({pick(rng), v, random_positive_rat(rng)});
    }
    std::vector<Skeleton::Ray> rays;
    std::uniform_int_distribution<int> pick(0, vertices - 1);
    for (int p = 0; p < punctures; ++p) rays.push_back({pick(rng), "q" + std::to_string(p)});
    return std::make_shared<Skeleton>(std::move(labels), std::move(edges), std::move(rays), 0);
}

// Degree-zero divisor with random orders on the skeleton's punctures.
inline Divisor random_divisor(Rng& rng, const Skeleton& s) {
    Divisor d;
    std::uniform_int_distribution<int> order(-5, 5);
    Int total = 0;
    const auto& rays = s.rays();
    for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
        Int o = order(rng);
        total += o;
        if (o != 0) d.orders[rays[i].puncture] = o;
    }
    if (total != 0) d.orders[rays.back().puncture] = -total;
    d.normalize();
    return d;
}

// Tate skeleton with random loop length and positions, plus a divisor whose
// class is trivial on the loop (orders weighted by positions sum to zero
// modulo the loop length).
struct TatePrincipal {
    std::shared_ptr<const Skeleton> skeleton;
    Divisor divisor;
};

inline TatePrincipal random_tate_principal(Rng& rng, int punctures) {
    Rat ell = random_positive_rat(rng, 10, 4);
    std::vector<std::pair<std::string, Rat>> pos;
    std::uniform_int_distribution<int> grid(0, 23);
    for (int p = 0; p < punctures; ++p)
        pos.push_back({"q" + std::to_string(p), ell * Rat(grid(rng), 24)});

    Divisor d;
    std::uniform_int_distribution<int> order(-4, 4);
    Int total = 0;
    Rat weighted(0);
    for (int p = 0; p < punctures; ++p) {
        Int o = order(rng);
        total += o;
        weighted += Rat(o) * pos[p].second;
        if (o != 0) d.orders[pos[p].first] = o;
    }
    // Two correction punctures cancel both the degree and the loop class:
    // -total at position 0 and a +1/-1 pair displaced by the residue.
    pos.push_back({"fix0", Rat(0)});
    if (total != 0) d.orders["fix0"] += -total;
    Rat residue = weighted; // want sum(order * position) = 0 mod ell
    pos.push_back({"fix1", residue});
    d.orders["fix1"] += -1;
    d.orders["fix0"] += 1;
    // Now the weighted sum is: weighted - residue + 0 = 0 exactly.
    d.normalize();
    return {std::make_shared<Skeleton>(build_tate_skeleton(ell, pos)), d};
}

// Slope oracle on trees: the slope along an edge equals the total divisor
// order beyond it.
inline Int far_side_degree(const Skeleton& s, const Divisor& d, int edge) {
    const auto& e = s.edges()[edge];
    std::vector<bool> seen(s.vertex_count(), false);
    std::vector<int> stack{e.v};
    seen[e.u] = true; // block the near endpoint
    seen[e.v] = true;
    Int total = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int r : s.incident_rays(v)) {
            auto it = d.orders.find(s.rays()[r].puncture);
            if (it != d.orders.end()) total += it->second;
        }
        for (int e2 : s.incident_edges(v)) {
            if (e2 == edge) continue;
            const auto& ed = s.edges()[e2];
            int w = ed.u == v ? ed.v : ed.u;
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return total;
}

inline TropicalPolynomial random_tropical_polynomial(Rng& rng, int max_terms = 8) {
    std::uniform_int_distribution<int> nterms(2, max_terms);
    std::uniform_int_distribution<int> expo(0, 5);
    TropicalPolynomial tp;
    int target = nterms(rng);
    int guard = 0;
    while (static_cast<int>(tp.terms.size()) < target && guard++ < 200) {
        LatticePoint2 u{expo(rng), expo(rng)};
        tp.terms[u] = random_rat(rng, 6, 3);
    }
    return tp;
}

} // namespace tropcurves::testutil
