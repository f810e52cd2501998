#include "credal/polytope.hpp"

#include "credal/errors.hpp"
#include "credal/lp.hpp"

#include <algorithm>
#include <set>

namespace credal {

std::vector<Rational> convex_combination_weights(
    const std::vector<Rational>& point,
    const std::vector<const std::vector<Rational>*>& generators) {
    if (generators.empty()) return {};
    const size_t dim = point.size();
    const size_t k = generators.size();

    // Feasibility: lambda >= 0, sum lambda = 1, sum lambda_i g_i = point.
    LinearProgram lp;
    lp.objective.assign(k, Rational(0));
    for (size_t d = 0; d < dim; ++d) {
        std::vector<Rational> row(k);
        for (size_t i = 0; i < k; ++i) row[i] = (*generators[i])[d];
        lp.add_row(std::move(row), Relation::eq, point[d]);
    }
    lp.add_row(std::vector<Rational>(k, Rational(1)), Relation::eq, Rational(1));

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::optimal) return {};
    return sol.primal;
}

bool in_convex_hull(const std::vector<Rational>& point,
                    const std::vector<const std::vector<Rational>*>& generators) {
    return !convex_combination_weights(point, generators).empty();
}

VPolytope VPolytope::from_points(size_t dim, std::vector<std::vector<Rational>> points) {
    for (const auto& p : points) {
        if (p.size() != dim) throw DimensionMismatchError("polytope point has wrong dimension");
    }
    // Dedupe exactly, keeping first occurrences.
    std::vector<std::vector<Rational>> uniq;
    {
        std::set<std::vector<Rational>> seen;
        for (auto& p : points) {
            if (seen.insert(p).second) uniq.push_back(std::move(p));
        }
    }
    // Greedy removal in input order: drop any point inside the hull of the
    // remaining ones. Survivors are exactly the extreme points.
    std::vector<char> alive(uniq.size(), 1);
    for (size_t i = 0; i < uniq.size(); ++i) {
        std::vector<const std::vector<Rational>*> others;
        for (size_t j = 0; j < uniq.size(); ++j) {
            if (j != i && alive[j]) others.push_back(&uniq[j]);
        }
        if (!others.empty() && in_convex_hull(uniq[i], others)) alive[i] = 0;
    }
    VPolytope poly;
    poly.dim_ = dim;
    for (size_t i = 0; i < uniq.size(); ++i) {
        if (alive[i]) poly.verts_.push_back(std::move(uniq[i]));
    }
    std::sort(poly.verts_.begin(), poly.verts_.end());
    return poly;
}

bool VPolytope::contains(const std::vector<Rational>& point) const {
    if (point.size() != dim_) throw DimensionMismatchError("membership query has wrong dimension");
    std::vector<const std::vector<Rational>*> gens;
    gens.reserve(verts_.size());
    for (const auto& v : verts_) gens.push_back(&v);
    return in_convex_hull(point, gens);
}

bool VPolytope::subset_of(const VPolytope& other) const {
    if (dim_ != other.dim_) throw DimensionMismatchError("polytope dimensions differ");
    for (const auto& v : verts_) {
        if (!other.contains(v)) return false;
    }
    return true;
}

} // namespace credal
