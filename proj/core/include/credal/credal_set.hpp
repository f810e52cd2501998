#pragma once

#include "credal/distribution.hpp"
#include "credal/polytope.hpp"

#include <optional>
#include <vector>

namespace credal {

struct ConditionedCredalSet;

/// A closed convex set of joint distributions on X x Y, represented by the
/// vertices of its convex hull. Construction canonicalizes the vertex list
/// (dedupe, drop non-extreme points, sort), so two CredalSets describe the
/// same set iff their vertex lists compare equal. Immutable; safe to share
/// across threads.
class CredalSet {
  public:
    CredalSet(size_t nx, size_t ny, std::vector<JointDistribution> vertices);
    static CredalSet singleton(JointDistribution p);

    size_t nx() const { return nx_; }
    size_t ny() const { return ny_; }
    const std::vector<JointDistribution>& vertices() const { return vertices_; }

    /// Exact convex-hull membership (feasibility LP in the weights).
    bool contains(const JointDistribution& p) const;
    bool subset_of(const CredalSet& other) const;
    bool same_set(const CredalSet& other) const;

    /// {Pr | E : Pr vertex, Pr(E) > 0}, re-minimized. Throws
    /// EmptyConditionedSetError when every vertex gives E probability zero.
    ConditionedCredalSet condition(const EventSet& e) const;

    /// The set of Y-marginals (a polytope in the Y simplex).
    VPolytope y_marginal_set() const;
    VPolytope x_marginal_set() const;

    /// Distributions combining an X-marginal from this set with per-x
    /// conditionals from this set. Always a superset of the set itself.
    CredalSet hull() const;
    bool equals_hull() const;

    /// A member p with p = p_X (x) q (X and Y independent, Y-marginal
    /// exactly q), found by a single LP over the free X-marginal and the
    /// convex-combination weights; nullopt when none exists.
    std::optional<JointDistribution> find_independent_witness(
        const std::vector<Rational>& q) const;

    /// Observations x with positive probability under some vertex.
    std::vector<size_t> reachable_x() const;
    bool x_reachable(size_t x) const;

  private:
    size_t nx_;
    size_t ny_;
    std::vector<JointDistribution> vertices_;
};

struct ConditionedCredalSet {
    CredalSet set;
    /// Some vertex assigned the event probability zero and was dropped.
    /// For V-represented sets the returned hull still equals the
    /// conditioned set exactly (a mixture's conditional is a convex
    /// combination of the conditioned positive-mass vertices); the flag
    /// records that the event sat on the set's boundary.
    bool boundary_approximation = false;
};

} // namespace credal
