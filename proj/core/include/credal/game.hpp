#pragma once

#include "credal/credal_set.hpp"
#include "credal/lp.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace credal {

/// Loss table L(y, a). Entries may be negative (a gain).
class LossFunction {
  public:
    LossFunction(size_t ny, size_t na, std::vector<Rational> table);

    size_t ny() const { return ny_; }
    size_t na() const { return na_; }
    const Rational& at(size_t y, size_t a) const { return table_[y * na_ + a]; }
    const std::vector<Rational>& table() const { return table_; }

    LossFunction scaled(const Rational& factor) const;

  private:
    size_t ny_;
    size_t na_;
    std::vector<Rational> table_;
};

/// A randomized decision rule: one distribution over actions per
/// observation.
class DecisionRule {
  public:
    DecisionRule(size_t nx, size_t na, std::vector<std::vector<Rational>> rows);
    static DecisionRule pure(size_t nx, size_t na, const std::vector<size_t>& acts);
    static DecisionRule constant(size_t nx, std::vector<Rational> act);

    size_t nx() const { return nx_; }
    size_t na() const { return na_; }
    const std::vector<Rational>& row(size_t x) const { return rows_[x]; }
    const Rational& at(size_t x, size_t a) const { return rows_[x][a]; }

    bool operator==(const DecisionRule& o) const;
    bool ignores_information() const;

  private:
    size_t nx_;
    size_t na_;
    std::vector<std::vector<Rational>> rows_;
};

/// E_p[L_delta], exactly.
Rational expected_loss(const JointDistribution& p, const LossFunction& loss,
                       const DecisionRule& rule);

/// Expected loss of a randomized action against a distribution over Y.
Rational act_expected_loss(const std::vector<Rational>& y_dist, const LossFunction& loss,
                           const std::vector<Rational>& act);

/// Worst case of an act over the vertices of a Y-marginal polytope.
Rational worst_case_act_loss(const VPolytope& marginals, const LossFunction& loss,
                             const std::vector<Rational>& act);

/// Equilibrium of the game where the bookie commits to a distribution
/// before the observation: the minimizing rule, the game value, the
/// bookie's optimal mixture over vertices (the LP dual), and its aggregate
/// distribution.
struct GameSolution {
    Rational value;
    DecisionRule rule;
    std::vector<Rational> bookie_weights; // per vertex of the credal set
    JointDistribution aggregate;          // sum of weights * vertices

    std::vector<std::pair<size_t, Rational>> support() const;
};

GameSolution solve_apriori(const CredalSet& set, const LossFunction& loss);

/// Equilibrium of the per-observation game: condition on X = x, then play
/// the matrix game of acts against the conditioned Y-marginal vertices.
struct PosteriorSolution {
    Rational value;
    std::vector<Rational> act;
    VPolytope conditioned_marginals;
    bool boundary_approximation = false;
};

PosteriorSolution solve_aposteriori(const CredalSet& set, const LossFunction& loss, size_t x);

/// Exact re-verification of a GameSolution:
///  (i)   the worst case over all vertices equals the reported value,
///  (ii)  every vertex in the bookie support attains that worst case,
///  (iii) the best response to the aggregate achieves the value
///        (so min over rules of E_aggregate equals the value).
struct EquilibriumCertificate {
    bool worst_case_matches_value = false;
    bool support_attains_worst_case = false;
    bool best_response_matches_value = false;
    std::vector<Rational> vertex_losses;
    Rational worst_case;
    Rational best_response_value;

    bool all_pass() const {
        return worst_case_matches_value && support_attains_worst_case &&
               best_response_matches_value;
    }
};

EquilibriumCertificate certify_equilibrium(const CredalSet& set, const LossFunction& loss,
                                           const GameSolution& sol);

/// Sufficient condition for an information-ignoring rule to be optimal in
/// the commit-first game: a single X-marginal whose product with every
/// Y-marginal generator lies in the set (so every marginal in the set has
/// an independent witness, by convexity). One-directional; `holds` true
/// means ignoring is optimal for every loss function, false is
/// inconclusive in principle. Entries list the per-generator witnesses
/// (from the common marginal when it exists, individually otherwise).
struct IgnoreCheck {
    bool holds = false;
    struct Entry {
        std::vector<Rational> marginal;
        std::optional<JointDistribution> witness;
    };
    std::vector<Entry> entries;
};

IgnoreCheck check_ignore_optimal(const CredalSet& set);

/// Best constant rule: the matrix game of acts against the Y-marginal
/// vertices.
struct IgnoreValue {
    Rational value;
    std::vector<Rational> act;
};

IgnoreValue ignore_rule_value(const CredalSet& set, const LossFunction& loss);

/// Compares the commit-first optimal rule against the per-observation
/// games it induces. Two observable faces:
///  - act gap at x: worst case of the rule's act after conditioning minus
///    the per-observation game value (0 when the act stays optimal);
///  - exposure gap: the worst case, over the set, of mixing the per-x
///    conditional worst cases by the X-marginal, minus the commit-first
///    value (0 exactly when observing never helps the bookie).
struct InconsistencyReport {
    GameSolution prior;
    struct Entry {
        size_t x;
        Rational posterior_value;
        Rational rule_worst_case;
        Rational act_gap;
    };
    std::vector<Entry> entries;
    Rational posterior_exposure;
    Rational exposure_gap;
    bool act_divergence = false;
    bool value_divergence = false;
    bool flagged = false;
};

InconsistencyReport detect_time_inconsistency(const CredalSet& set, const LossFunction& loss);

/// The full solution of the acts-vs-marginals matrix game: exact value,
/// every extreme optimal mixture, and their barycenter as the canonical
/// minimax act (deterministic, symmetry-respecting tie-break).
struct MinimaxActSet {
    Rational value;
    std::vector<std::vector<Rational>> optimal_vertices;
    std::vector<Rational> canonical_act;
};

MinimaxActSet minimax_act_analysis(const VPolytope& marginals, const LossFunction& loss);

} // namespace credal
