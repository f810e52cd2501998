#pragma once

#include "credal/rational.hpp"
#include "credal/space.hpp"

#include <optional>
#include <vector>

namespace credal {

/// An exact joint probability table over X x Y: entries nonnegative and
/// summing to exactly 1. Immutable after construction.
class JointDistribution {
  public:
    JointDistribution(size_t nx, size_t ny, std::vector<Rational> entries);

    size_t nx() const { return nx_; }
    size_t ny() const { return ny_; }
    const Rational& at(size_t x, size_t y) const { return p_[x * ny_ + y]; }
    const std::vector<Rational>& entries() const { return p_; }

    std::vector<Rational> marginal_x() const;
    std::vector<Rational> marginal_y() const;

    /// Probability of the event X in S.
    Rational event_mass(const EventSet& e) const;

    /// Conditions on X in S: zero mass outside the event, renormalized.
    /// Returns nullopt (the undefined-signal) when the event has
    /// probability zero.
    std::optional<JointDistribution> condition(const EventSet& e) const;

    /// Conditional distribution of Y given X = x; nullopt when
    /// the row has zero mass.
    std::optional<std::vector<Rational>> conditional_y_given_x(size_t x) const;

    /// True when the table factorizes exactly as marginal_x (x) marginal_y.
    bool is_product() const;

    bool operator==(const JointDistribution& o) const;
    bool operator<(const JointDistribution& o) const; // lexicographic, for canonical order

    static JointDistribution point_mass(size_t nx, size_t ny, size_t x, size_t y);
    static JointDistribution uniform(size_t nx, size_t ny);
    /// Rank-one table w (x) q from exact marginals (each summing to 1).
    static JointDistribution product(const std::vector<Rational>& wx,
                                     const std::vector<Rational>& qy);

  private:
    size_t nx_;
    size_t ny_;
    std::vector<Rational> p_;
};

/// Validates a bare probability vector (nonnegative, sums to 1).
void check_distribution(const std::vector<Rational>& q, const char* what);

} // namespace credal
