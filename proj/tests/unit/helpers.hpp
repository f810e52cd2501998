#pragma once

#include "credal/credal_set.hpp"
#include "credal/game.hpp"
#include "credal/space.hpp"

#include <random>
#include <vector>

namespace credal::testing {

using Rng = std::mt19937_64;

inline size_t pick(Rng& rng, size_t lo, size_t hi) {
    return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

/// Random exact distribution over n cells: integer weights normalized.
inline std::vector<Rational> random_distribution(Rng& rng, size_t n, unsigned max_weight = 6) {
    std::vector<unsigned> w(n);
    unsigned total = 0;
    while (total == 0) {
        for (auto& v : w) {
            v = static_cast<unsigned>(pick(rng, 0, max_weight));
            total += v;
        }
    }
    std::vector<Rational> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = Rational(w[i]) / Rational(total);
    return out;
}

inline JointDistribution random_joint(Rng& rng, size_t nx, size_t ny) {
    return JointDistribution(nx, ny, random_distribution(rng, nx * ny));
}

inline CredalSet random_credal_set(Rng& rng, size_t nx, size_t ny, size_t num_vertices) {
    std::vector<JointDistribution> verts;
    for (size_t i = 0; i < num_vertices; ++i) verts.push_back(random_joint(rng, nx, ny));
    return CredalSet(nx, ny, std::move(verts));
}

inline LossFunction random_loss(Rng& rng, size_t ny, size_t na) {
    std::vector<Rational> table(ny * na);
    for (auto& v : table) {
        v = Rational(static_cast<long>(pick(rng, 0, 8)) - 2); // in [-2, 6]
    }
    return LossFunction(ny, na, std::move(table));
}

inline DecisionRule random_rule(Rng& rng, size_t nx, size_t na) {
    std::vector<std::vector<Rational>> rows;
    for (size_t x = 0; x < nx; ++x) rows.push_back(random_distribution(rng, na));
    return DecisionRule(nx, na, std::move(rows));
}

inline Partition random_partition(Rng& rng, size_t nx) {
    // random restricted-growth string
    std::vector<size_t> s(nx, 0);
    size_t max_seen = 0;
    for (size_t i = 1; i < nx; ++i) {
        s[i] = pick(rng, 0, max_seen + 1);
        max_seen = std::max(max_seen, s[i]);
    }
    std::vector<std::vector<size_t>> cells(max_seen + 1);
    for (size_t i = 0; i < nx; ++i) cells[s[i]].push_back(i);
    return Partition(std::move(cells), nx);
}

/// A credal set built to satisfy the independence witness condition: all
/// products of one shared X-marginal with random Y-marginals (so every
/// marginal in the set has an independent witness, by convexity), plus
/// mixtures of products with other X-marginals that keep the marginal set
/// unchanged.
inline CredalSet random_witnessed_set(Rng& rng, size_t nx, size_t ny, size_t num_products,
                                      size_t num_extras) {
    const auto w0 = random_distribution(rng, nx);
    std::vector<std::vector<Rational>> qs;
    std::vector<JointDistribution> verts;
    for (size_t i = 0; i < num_products; ++i) {
        qs.push_back(random_distribution(rng, ny));
        verts.push_back(JointDistribution::product(w0, qs.back()));
    }
    for (size_t e = 0; e < num_extras; ++e) {
        const auto alpha = random_distribution(rng, num_products);
        std::vector<Rational> table(nx * ny, Rational(0));
        for (size_t i = 0; i < num_products; ++i) {
            if (alpha[i] == 0) continue;
            const auto w = random_distribution(rng, nx);
            for (size_t x = 0; x < nx; ++x) {
                for (size_t y = 0; y < ny; ++y) {
                    table[x * ny + y] += alpha[i] * w[x] * qs[i][y];
                }
            }
        }
        verts.emplace_back(nx, ny, std::move(table));
    }
    return CredalSet(nx, ny, std::move(verts));
}

} // namespace credal::testing
