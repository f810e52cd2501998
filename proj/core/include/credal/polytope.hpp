#pragma once

#include "credal/rational.hpp"

#include <vector>

namespace credal {

/// A convex polytope in V-representation over exact rationals. The stored
/// vertex list is canonical: duplicates removed, points interior to the
/// hull of the others removed (so the survivors are exactly the extreme
/// points), then sorted lexicographically. Two VPolytopes describe the
/// same set iff their vertex lists compare equal.
class VPolytope {
  public:
    VPolytope() = default;
    /// Canonicalizes: dedupe, minimize in input order, sort.
    static VPolytope from_points(size_t dim, std::vector<std::vector<Rational>> points);

    size_t dim() const { return dim_; }
    size_t num_vertices() const { return verts_.size(); }
    const std::vector<std::vector<Rational>>& vertices() const { return verts_; }

    /// Exact convex-hull membership, decided by a feasibility LP.
    bool contains(const std::vector<Rational>& point) const;
    bool subset_of(const VPolytope& other) const;
    bool same_set(const VPolytope& other) const { return dim_ == other.dim_ && verts_ == other.verts_; }

  private:
    size_t dim_ = 0;
    std::vector<std::vector<Rational>> verts_;
};

/// Is `point` a convex combination of `generators`? (Feasibility LP.)
bool in_convex_hull(const std::vector<Rational>& point,
                    const std::vector<const std::vector<Rational>*>& generators);

/// Convex-combination weights over `generators` reproducing `point`, or an
/// empty vector when `point` is outside the hull.
std::vector<Rational> convex_combination_weights(
    const std::vector<Rational>& point,
    const std::vector<const std::vector<Rational>*>& generators);

} // namespace credal
