#pragma once

#include "credal/game.hpp"

namespace credal {

/// min over grid decision rules (per-x action weights in {0, 1/n, ..., 1})
/// of the worst-case expected loss over the credal vertices. An upper bound
/// on the commit-first game value, converging as n grows. Enumeration, no
/// linear programming; usable as an independent check of the solver.
/// Throws SizeBoundExceededError when the grid is larger than `max_rules`.
struct GridOptions {
    size_t max_rules = 2'000'000;
};

Rational grid_minimax(const CredalSet& set, const LossFunction& loss, unsigned n,
                      GridOptions options = {});

/// sum over x of the best per-x act loss under p: the value of the best
/// response to p, a lower-bound certificate for the game value when p is
/// the bookie's equilibrium aggregate.
Rational bayes_response_value(const JointDistribution& p, const LossFunction& loss);

/// Oracle sandwich around a solver result: best response to the aggregate
/// must equal the value exactly; the grid value (at the largest affordable
/// resolution up to max_resolution) must be an upper bound.
struct OracleCheck {
    Rational bayes_value;
    bool bayes_matches = false;
    unsigned grid_resolution = 0;
    Rational grid_value;
    bool grid_is_upper_bound = false;

    bool pass() const { return bayes_matches && grid_is_upper_bound; }
};

OracleCheck certify_with_oracles(const CredalSet& set, const LossFunction& loss,
                                 const GameSolution& sol, unsigned max_resolution = 6,
                                 GridOptions options = {});

} // namespace credal
