#include "credal/credal_set.hpp"

#include "credal/errors.hpp"
#include "credal/lp.hpp"

#include <algorithm>
#include <set>

namespace credal {

CredalSet::CredalSet(size_t nx, size_t ny, std::vector<JointDistribution> vertices)
    : nx_(nx), ny_(ny) {
    if (vertices.empty()) throw std::invalid_argument("credal set needs at least one vertex");
    for (const auto& v : vertices) {
        if (v.nx() != nx_ || v.ny() != ny_) {
            throw DimensionMismatchError("credal vertex has wrong shape");
        }
    }
    std::vector<std::vector<Rational>> points;
    points.reserve(vertices.size());
    for (const auto& v : vertices) points.push_back(v.entries());
    const VPolytope poly = VPolytope::from_points(nx_ * ny_, std::move(points));
    vertices_.reserve(poly.num_vertices());
    for (const auto& p : poly.vertices()) {
        vertices_.emplace_back(nx_, ny_, p);
    }
}

CredalSet CredalSet::singleton(JointDistribution p) {
    const size_t nx = p.nx(), ny = p.ny();
    return CredalSet(nx, ny, {std::move(p)});
}

bool CredalSet::contains(const JointDistribution& p) const {
    if (p.nx() != nx_ || p.ny() != ny_) {
        throw DimensionMismatchError("membership query has wrong shape");
    }
    std::vector<const std::vector<Rational>*> gens;
    gens.reserve(vertices_.size());
    for (const auto& v : vertices_) gens.push_back(&v.entries());
    return in_convex_hull(p.entries(), gens);
}

bool CredalSet::subset_of(const CredalSet& other) const {
    if (nx_ != other.nx_ || ny_ != other.ny_) {
        throw DimensionMismatchError("credal sets live on different spaces");
    }
    for (const auto& v : vertices_) {
        if (!other.contains(v)) return false;
    }
    return true;
}

bool CredalSet::same_set(const CredalSet& other) const {
    return nx_ == other.nx_ && ny_ == other.ny_ && vertices_ == other.vertices_;
}

ConditionedCredalSet CredalSet::condition(const EventSet& e) const {
    std::vector<JointDistribution> conditioned;
    bool dropped = false;
    for (const auto& v : vertices_) {
        auto c = v.condition(e);
        if (c) {
            conditioned.push_back(std::move(*c));
        } else {
            dropped = true;
        }
    }
    if (conditioned.empty()) {
        throw EmptyConditionedSetError("event has probability zero under the whole credal set");
    }
    return ConditionedCredalSet{CredalSet(nx_, ny_, std::move(conditioned)), dropped};
}

VPolytope CredalSet::y_marginal_set() const {
    std::vector<std::vector<Rational>> points;
    points.reserve(vertices_.size());
    for (const auto& v : vertices_) points.push_back(v.marginal_y());
    return VPolytope::from_points(ny_, std::move(points));
}

VPolytope CredalSet::x_marginal_set() const {
    std::vector<std::vector<Rational>> points;
    points.reserve(vertices_.size());
    for (const auto& v : vertices_) points.push_back(v.marginal_x());
    return VPolytope::from_points(nx_, std::move(points));
}

CredalSet CredalSet::hull() const {
    // Finite generators: X-marginal vertices, and per-x conditioned
    // vertices. Every recombination m (x) (c_x)_x is extreme-candidate;
    // the defining map is multilinear, so these generate the whole hull.
    const VPolytope marg_x = x_marginal_set();

    std::vector<std::vector<std::vector<Rational>>> cond(nx_); // per x: conditional Y dists
    for (size_t x = 0; x < nx_; ++x) {
        std::vector<std::vector<Rational>> points;
        for (const auto& v : vertices_) {
            if (auto q = v.conditional_y_given_x(x)) points.push_back(std::move(*q));
        }
        if (!points.empty()) {
            cond[x] = VPolytope::from_points(ny_, std::move(points)).vertices();
        }
    }

    std::vector<JointDistribution> recombined;
    for (const auto& m : marg_x.vertices()) {
        // Iterate the product of conditional choices; x's with zero
        // marginal mass everywhere contribute a zero row.
        std::vector<size_t> idx(nx_, 0);
        while (true) {
            std::vector<Rational> table(nx_ * ny_, Rational(0));
            for (size_t x = 0; x < nx_; ++x) {
                if (m[x] == 0) continue;
                const auto& c = cond[x][idx[x]];
                for (size_t y = 0; y < ny_; ++y) table[x * ny_ + y] = m[x] * c[y];
            }
            recombined.emplace_back(nx_, ny_, std::move(table));

            size_t x = 0;
            for (; x < nx_; ++x) {
                const size_t limit = cond[x].empty() || m[x] == 0 ? 1 : cond[x].size();
                if (idx[x] + 1 < limit) {
                    ++idx[x];
                    break;
                }
                idx[x] = 0;
            }
            if (x == nx_) break;
        }
    }
    return CredalSet(nx_, ny_, std::move(recombined));
}

bool CredalSet::equals_hull() const {
    const CredalSet h = hull();
    return subset_of(h) && h.subset_of(*this);
}

std::optional<JointDistribution> CredalSet::find_independent_witness(
    const std::vector<Rational>& q) const {
    if (q.size() != ny_) throw DimensionMismatchError("witness marginal has wrong length");
    check_distribution(q, "witness Y marginal");

    // Variables: w in Delta(X) (free X-marginal of the candidate product)
    // and lambda (convex weights over the vertices). The product w (x) q is
    // linear in w for fixed q, so membership is one feasibility LP:
    //   w_x q_y - sum_k lambda_k v_k(x,y) = 0 for all (x,y),
    //   sum w = 1, sum lambda = 1, w >= 0, lambda >= 0.
    const size_t k = vertices_.size();
    const size_t nvars = nx_ + k;
    LinearProgram lp;
    lp.objective.assign(nvars, Rational(0));
    for (size_t x = 0; x < nx_; ++x) {
        for (size_t y = 0; y < ny_; ++y) {
            std::vector<Rational> row(nvars, Rational(0));
            row[x] = q[y];
            for (size_t i = 0; i < k; ++i) row[nx_ + i] = -vertices_[i].at(x, y);
            lp.add_row(std::move(row), Relation::eq, Rational(0));
        }
    }
    {
        std::vector<Rational> row(nvars, Rational(0));
        for (size_t x = 0; x < nx_; ++x) row[x] = 1;
        lp.add_row(std::move(row), Relation::eq, Rational(1));
    }
    {
        std::vector<Rational> row(nvars, Rational(0));
        for (size_t i = 0; i < k; ++i) row[nx_ + i] = 1;
        lp.add_row(std::move(row), Relation::eq, Rational(1));
    }

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::optimal) return std::nullopt;
    std::vector<Rational> w(sol.primal.begin(), sol.primal.begin() + static_cast<long>(nx_));
    return JointDistribution::product(w, q);
}

std::vector<size_t> CredalSet::reachable_x() const {
    std::vector<size_t> out;
    for (size_t x = 0; x < nx_; ++x) {
        if (x_reachable(x)) out.push_back(x);
    }
    return out;
}

bool CredalSet::x_reachable(size_t x) const {
    for (const auto& v : vertices_) {
        for (size_t y = 0; y < ny_; ++y) {
            if (v.at(x, y) > 0) return true;
        }
    }
    return false;
}

} // namespace credal
