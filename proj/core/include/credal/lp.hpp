#pragma once

#include "credal/rational.hpp"

#include <optional>
#include <vector>

namespace credal {

enum class Relation { le, eq, ge };
enum class Sense { minimize, maximize };

/// A linear program over exact rationals. Variables have a rational lower
/// bound (0 unless set otherwise) or are free; there are no upper bounds.
struct LinearProgram {
    struct Row {
        std::vector<Rational> coeffs;
        Relation rel = Relation::le;
        Rational rhs;
    };

    Sense sense = Sense::minimize;
    std::vector<Rational> objective;
    std::vector<Row> rows;
    /// One entry per variable; std::nullopt marks a free variable.
    /// An empty vector means every variable is bounded below by 0.
    std::vector<std::optional<Rational>> lower;

    size_t num_vars() const { return objective.size(); }
    void add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs);
    /// Marks variable j free; grows `lower` on demand.
    void set_free(size_t j);
};

enum class LpStatus { optimal, infeasible, unbounded };

/// Exact solution with certificates.
///
/// optimal:    `primal` is a basic optimal point, `dual` the row multipliers
///             (sign convention: for a minimization, <= rows have dual <= 0,
///             >= rows have dual >= 0, = rows are free; flipped for
///             maximization). Strong duality and complementary slackness
///             hold exactly and are re-verified on every solve in debug
///             builds.
/// unbounded:  `ray` is a feasible direction with negative (min) objective
///             movement; `primal` holds a feasible starting point.
/// infeasible: `ray` holds Farkas row multipliers proving infeasibility.
struct LpSolution {
    LpStatus status = LpStatus::optimal;
    std::vector<Rational> primal;
    std::vector<Rational> dual;
    Rational objective_value;
    std::vector<Rational> ray;
    size_t pivots = 0;
};

/// Two-phase primal simplex over exact rationals with Bland's anti-cycling
/// rule (lowest-index entering and leaving variable). Deterministic: the
/// same program always yields the same basis.
LpSolution solve(const LinearProgram& lp);

/// Zero-sum matrix game M (row player minimizes, column player maximizes).
/// Returns the exact value v and mixed strategies with
///   max_j (rho^T M)_j = v = min_i (M kappa)_i.
struct MatrixGameSolution {
    Rational value;
    std::vector<Rational> row_mixture;
    std::vector<Rational> col_mixture;
};

MatrixGameSolution solve_matrix_game(const std::vector<std::vector<Rational>>& m);

} // namespace credal
