#pragma once

#include "credal/game.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace credal {

/// An update rule evaluated at a fixed credal set: for every reachable
/// observation, the announced post-observation credal set.
struct UpdateRuleOnP {
    enum class Provenance { c_conditioning, custom };

    Provenance provenance = Provenance::custom;
    std::optional<Partition> partition; // set for c_conditioning
    std::map<size_t, CredalSet> images; // keyed by reachable observation

    const CredalSet& image(size_t x) const;
    std::vector<size_t> domain() const;
};

/// Conditions on the partition cell containing the observation:
/// x -> P | X in C(x). Singleton cells give ordinary conditioning,
/// the one-cell partition gives the information-ignoring rule.
UpdateRuleOnP c_conditioning(const CredalSet& set, const Partition& partition);

UpdateRuleOnP custom_update_rule(std::map<size_t, CredalSet> images);

/// Observations grouped by exact equality of the announced Y-marginal
/// sets. The groups partition the reachable observations.
struct RangeDecomposition {
    struct Cell {
        VPolytope range;         // the common Y-marginal set
        std::vector<size_t> xs;  // observations announcing it
    };
    std::vector<Cell> cells;
};

RangeDecomposition range_decomposition(const UpdateRuleOnP& rule);

/// Every distribution in the set, conditioned on the observations that
/// announce a given Y-marginal set, must have its Y-marginal inside that
/// set. Checked on the vertices and, as an extra audit, on all pairwise
/// vertex midpoints; by convexity of the announced sets the vertex checks
/// are already decisive.
bool is_calibrated_relative(const CredalSet& set, const UpdateRuleOnP& rule);

enum class RuleOrder { equal, narrower, wider, incomparable };

/// Which sets the per-observation inclusion compares: the announced joint
/// sets, or only their Y-marginals.
enum class CompareOn { joints, y_marginals };

/// Pointwise inclusion order of two rules over the same domain.
/// `narrower` and `wider` are strict; narrower-or-equal is
/// `equal || narrower`.
RuleOrder narrower_than(const UpdateRuleOnP& a, const UpdateRuleOnP& b,
                        CompareOn mode = CompareOn::joints);

/// All partitions of {0..n-1} in restricted-growth-string lexicographic
/// order. Throws SizeBoundExceededError when n exceeds the bound.
std::vector<Partition> all_partitions(size_t n, size_t max_n = 8);

/// The minimal elements of the partition preorder C1 <= C2 iff
/// conditioning on C1 is pointwise contained in conditioning on C2.
/// Conditioning on any returned partition is sharply calibrated relative
/// to the set: calibrated, with no strictly narrower calibrated rule.
std::vector<Partition> sharp_partitions(const CredalSet& set, size_t max_x = 8,
                                        CompareOn mode = CompareOn::joints);

/// Searches for a partition whose conditioning rule announces exactly the
/// same sets as `rule` at every reachable observation.
struct GeneralizedConditioningResult {
    bool is_generalized = false;
    std::optional<Partition> partition;
};

GeneralizedConditioningResult is_generalized_conditioning_on(const CredalSet& set,
                                                             const UpdateRuleOnP& rule,
                                                             size_t max_x = 8);

/// Does the decision rule arise from conditioning on the partition and
/// then playing the canonical minimax act of each conditioned cell? The
/// canonical act (barycenter of the optimal-act polytope's vertices) makes
/// the comparison deterministic when cell games have non-unique optima.
/// Per-cell details are reported either way.
struct CConditioningBasis {
    bool based = false;
    struct Cell {
        size_t x;
        Rational cell_value;
        Rational rule_worst_case;
        std::vector<Rational> canonical_act;
        bool attains_value = false;
        bool act_matches_canonical = false;
    };
    std::vector<Cell> cells;
};

CConditioningBasis rule_is_based_on_c_conditioning(const CredalSet& set,
                                                   const LossFunction& loss,
                                                   const DecisionRule& rule,
                                                   const Partition& partition);

} // namespace credal
