#include "credal/oracle.hpp"

#include "credal/errors.hpp"

#include <algorithm>
#include <cassert>

namespace credal {

namespace {

// All compositions of n into `parts` nonnegative integers, lexicographic.
void list_compositions(unsigned n, size_t parts, std::vector<unsigned>& prefix,
                       std::vector<std::vector<unsigned>>& out) {
    if (parts == 1) {
        prefix.push_back(n);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (unsigned i = 0; i <= n; ++i) {
        prefix.push_back(i);
        list_compositions(n - i, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

size_t checked_pow(size_t base, size_t exp, size_t cap) {
    size_t v = 1;
    for (size_t i = 0; i < exp; ++i) {
        if (v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

} // namespace

Rational grid_minimax(const CredalSet& set, const LossFunction& loss, unsigned n,
                      GridOptions options) {
    if (set.ny() != loss.ny()) throw DimensionMismatchError("loss and credal set disagree on Y");
    if (n == 0) throw std::invalid_argument("grid resolution must be positive");
    const size_t nx = set.nx();
    const size_t na = loss.na();
    const size_t k = set.vertices().size();

    std::vector<std::vector<unsigned>> comps;
    {
        std::vector<unsigned> prefix;
        list_compositions(n, na, prefix, comps);
    }
    const size_t rules = checked_pow(comps.size(), nx, options.max_rules);
    if (rules > options.max_rules) {
        throw SizeBoundExceededError("decision-rule grid exceeds the configured bound");
    }

    // Per x and composition: the scaled loss contribution for every vertex.
    // The recursion below then only adds k rationals per tree node.
    // contrib[x][c][v] = sum_a comp[a] * sum_y vert_v(x,y) L(y,a)
    std::vector<std::vector<std::vector<Rational>>> contrib(
        nx, std::vector<std::vector<Rational>>(comps.size(), std::vector<Rational>(k)));
    for (size_t x = 0; x < nx; ++x) {
        std::vector<std::vector<Rational>> act_loss(na, std::vector<Rational>(k, Rational(0)));
        for (size_t a = 0; a < na; ++a) {
            for (size_t v = 0; v < k; ++v) {
                Rational s = 0;
                for (size_t y = 0; y < set.ny(); ++y) {
                    s += set.vertices()[v].at(x, y) * loss.at(y, a);
                }
                act_loss[a][v] = s;
            }
        }
        for (size_t c = 0; c < comps.size(); ++c) {
            for (size_t v = 0; v < k; ++v) {
                Rational s = 0;
                for (size_t a = 0; a < na; ++a) {
                    if (comps[c][a]) s += Rational(comps[c][a]) * act_loss[a][v];
                }
                contrib[x][c][v] = s;
            }
        }
    }

    Rational best;
    bool have_best = false;
    std::vector<Rational> partial(k, Rational(0));
    auto visit = [&](auto&& self, size_t x) -> void {
        if (x == nx) {
            Rational worst = partial[0];
            for (size_t v = 1; v < k; ++v) worst = std::max(worst, partial[v]);
            if (!have_best || worst < best) {
                best = worst;
                have_best = true;
            }
            return;
        }
        for (size_t c = 0; c < comps.size(); ++c) {
            for (size_t v = 0; v < k; ++v) partial[v] += contrib[x][c][v];
            self(self, x + 1);
            for (size_t v = 0; v < k; ++v) partial[v] -= contrib[x][c][v];
        }
    };
    visit(visit, 0);
    assert(have_best);
    return best / Rational(n);
}

Rational bayes_response_value(const JointDistribution& p, const LossFunction& loss) {
    if (p.ny() != loss.ny()) throw DimensionMismatchError("loss and distribution disagree on Y");
    Rational total = 0;
    for (size_t x = 0; x < p.nx(); ++x) {
        Rational row_best;
        bool any = false;
        for (size_t a = 0; a < loss.na(); ++a) {
            Rational v = 0;
            for (size_t y = 0; y < p.ny(); ++y) v += p.at(x, y) * loss.at(y, a);
            if (!any || v < row_best) row_best = v;
            any = true;
        }
        total += row_best;
    }
    return total;
}

OracleCheck certify_with_oracles(const CredalSet& set, const LossFunction& loss,
                                 const GameSolution& sol, unsigned max_resolution,
                                 GridOptions options) {
    OracleCheck check;
    check.bayes_value = bayes_response_value(sol.aggregate, loss);
    check.bayes_matches = check.bayes_value == sol.value;

    // Largest affordable resolution.
    unsigned n = std::max(1u, max_resolution);
    for (;; --n) {
        std::vector<std::vector<unsigned>> comps;
        std::vector<unsigned> prefix;
        list_compositions(n, loss.na(), prefix, comps);
        if (checked_pow(comps.size(), set.nx(), options.max_rules) <= options.max_rules) break;
        if (n == 1) break;
    }
    check.grid_resolution = n;
    check.grid_value = grid_minimax(set, loss, n, options);
    check.grid_is_upper_bound = check.grid_value >= sol.value;
    return check;
}

} // namespace credal
