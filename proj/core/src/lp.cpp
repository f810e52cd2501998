#include "credal/lp.hpp"

#include "credal/errors.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace credal {

void LinearProgram::add_row(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
    rows.push_back(Row{std::move(coeffs), rel, std::move(rhs)});
}

void LinearProgram::set_free(size_t j) {
    if (lower.size() < num_vars()) lower.resize(num_vars(), Rational(0));
    lower.at(j) = std::nullopt;
}

namespace {

// Internal equality-form program
//   min c.z  s.t.  T z = b, z >= 0, b >= 0,
// with column layout [structurals | slacks | artificials]. Structural
// columns map back to user variables: a bounded variable owns one column
// (shifted by its lower bound), a free variable owns a positive and a
// negative column.
struct Standardized {
    std::vector<std::vector<Rational>> t; // m x n, artificials included
    std::vector<Rational> b;              // m, nonnegative
    std::vector<Rational> cost;           // structural+slack costs (phase 2)
    size_t num_real = 0;                  // structural + slack column count
    size_t num_struct = 0;
    std::vector<char> row_negated;        // per user row
    // per user variable: column of the positive part, column of the
    // negative part (== npos for bounded vars), and the lower bound shift
    struct VarMap {
        size_t pos = 0;
        size_t neg = std::numeric_limits<size_t>::max();
        Rational shift;
    };
    std::vector<VarMap> vars;
};

constexpr size_t npos = std::numeric_limits<size_t>::max();

Standardized standardize(const LinearProgram& lp) {
    const size_t nvars = lp.num_vars();
    if (nvars == 0) throw MalformedLpError("LP has no variables");
    for (const auto& row : lp.rows) {
        if (row.coeffs.size() != nvars) {
            throw MalformedLpError("LP row length does not match variable count");
        }
    }
    if (!lp.lower.empty() && lp.lower.size() != nvars) {
        throw MalformedLpError("LP lower-bound list length does not match variable count");
    }

    Standardized s;
    s.vars.resize(nvars);
    size_t col = 0;
    for (size_t j = 0; j < nvars; ++j) {
        const std::optional<Rational> lb =
            lp.lower.empty() ? std::optional<Rational>(Rational(0)) : lp.lower[j];
        if (lb) {
            s.vars[j].pos = col++;
            s.vars[j].shift = *lb;
        } else {
            s.vars[j].pos = col++;
            s.vars[j].neg = col++;
        }
    }
    s.num_struct = col;

    const size_t m = lp.rows.size();
    size_t num_slacks = 0;
    for (const auto& row : lp.rows) {
        if (row.rel != Relation::eq) ++num_slacks;
    }
    s.num_real = s.num_struct + num_slacks;
    const size_t n_total = s.num_real + m;

    const Rational sign = lp.sense == Sense::maximize ? Rational(-1) : Rational(1);
    s.cost.assign(s.num_real, Rational(0));
    for (size_t j = 0; j < nvars; ++j) {
        s.cost[s.vars[j].pos] = sign * lp.objective[j];
        if (s.vars[j].neg != npos) s.cost[s.vars[j].neg] = -sign * lp.objective[j];
    }

    s.t.assign(m, std::vector<Rational>(n_total, Rational(0)));
    s.b.assign(m, Rational(0));
    s.row_negated.assign(m, 0);
    size_t slack = s.num_struct;
    for (size_t i = 0; i < m; ++i) {
        const auto& row = lp.rows[i];
        Rational rhs = row.rhs;
        for (size_t j = 0; j < nvars; ++j) {
            const Rational& a = row.coeffs[j];
            if (a == 0) continue;
            s.t[i][s.vars[j].pos] = a;
            if (s.vars[j].neg != npos) s.t[i][s.vars[j].neg] = -a;
            rhs -= a * s.vars[j].shift;
        }
        if (row.rel == Relation::le) {
            s.t[i][slack++] = 1;
        } else if (row.rel == Relation::ge) {
            s.t[i][slack++] = -1;
        }
        if (rhs < 0) {
            for (auto& v : s.t[i]) v = -v;
            rhs = -rhs;
            s.row_negated[i] = 1;
        }
        s.b[i] = rhs;
        s.t[i][s.num_real + i] = 1; // artificial
    }
    return s;
}

// Full-tableau simplex state. `obj` holds z_j - c_j per column; entering
// requires obj[j] > 0 under the minimization convention.
struct Tableau {
    std::vector<std::vector<Rational>>& t;
    std::vector<Rational>& b;
    std::vector<size_t> basis;   // basic column per row
    std::vector<Rational> obj;   // z_j - c_j
    Rational obj_value;          // c_B . b
    size_t allowed_cols;         // columns permitted to enter
    size_t pivots = 0;

    void pivot(size_t row, size_t col) {
        const Rational p = t[row][col];
        assert(p != 0);
        for (auto& v : t[row]) v /= p;
        b[row] /= p;
        for (size_t i = 0; i < t.size(); ++i) {
            if (i == row) continue;
            const Rational f = t[i][col];
            if (f == 0) continue;
            for (size_t j = 0; j < t[i].size(); ++j) t[i][j] -= f * t[row][j];
            b[i] -= f * b[row];
        }
        const Rational f = obj[col];
        if (f != 0) {
            for (size_t j = 0; j < obj.size(); ++j) obj[j] -= f * t[row][j];
            obj_value -= f * b[row];
        }
        basis[row] = col;
        ++pivots;
    }

    void load_costs(const std::vector<Rational>& cost, size_t allowed) {
        allowed_cols = allowed;
        const size_t n = t.empty() ? 0 : t[0].size();
        obj.assign(n, Rational(0));
        obj_value = 0;
        // z_j = c_B . (B^-1 A)_j over current basis
        for (size_t i = 0; i < t.size(); ++i) {
            const size_t bc = basis[i];
            const Rational cb = bc < cost.size() ? cost[bc] : Rational(0);
            if (cb == 0) continue;
            for (size_t j = 0; j < n; ++j) obj[j] += cb * t[i][j];
            obj_value += cb * b[i];
        }
        for (size_t j = 0; j < n && j < cost.size(); ++j) obj[j] -= cost[j];
    }

    // Bland: enter the lowest-index improving column; leave on the minimum
    // ratio, ties broken by the lowest basic column index.
    // Returns false when optimal; sets *unbounded_col when no row limits
    // the entering column.
    bool step(size_t* unbounded_col) {
        size_t enter = npos;
        for (size_t j = 0; j < allowed_cols; ++j) {
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == npos) return false;

        size_t leave = npos;
        Rational best;
        for (size_t i = 0; i < t.size(); ++i) {
            if (t[i][enter] <= 0) continue;
            const Rational ratio = b[i] / t[i][enter];
            if (leave == npos || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == npos) {
            if (unbounded_col) *unbounded_col = enter;
            return false;
        }
        pivot(leave, enter);
        if (unbounded_col) *unbounded_col = npos;
        return true;
    }
};

#ifndef NDEBUG
void verify_infeasibility_certificate(const LinearProgram& lp, const std::vector<Rational>& y) {
    // Farkas: y has the right sign per relation, combines the rows into
    // a contradiction: y^T A <= 0 on bounded columns, = 0 on free ones,
    // y^T (b - A l) > 0.
    const size_t nvars = lp.num_vars();
    Rational rhs = 0;
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        const auto& row = lp.rows[i];
        if (row.rel == Relation::le && y[i] > 0) throw std::logic_error("lp: farkas sign (<=)");
        if (row.rel == Relation::ge && y[i] < 0) throw std::logic_error("lp: farkas sign (>=)");
        Rational b_shifted = row.rhs;
        for (size_t j = 0; j < nvars; ++j) {
            const auto lb = lp.lower.empty() ? std::optional<Rational>(Rational(0)) : lp.lower[j];
            if (lb) b_shifted -= row.coeffs[j] * *lb;
        }
        rhs += y[i] * b_shifted;
    }
    for (size_t j = 0; j < nvars; ++j) {
        Rational col = 0;
        for (size_t i = 0; i < lp.rows.size(); ++i) col += y[i] * lp.rows[i].coeffs[j];
        const auto lb = lp.lower.empty() ? std::optional<Rational>(Rational(0)) : lp.lower[j];
        if (lb) {
            if (col > 0) throw std::logic_error("lp: farkas column condition");
        } else {
            if (col != 0) throw std::logic_error("lp: farkas free-column condition");
        }
    }
    if (rhs <= 0) throw std::logic_error("lp: farkas right-hand side not positive");
}

void verify_unbounded_ray(const LinearProgram& lp, const LpSolution& sol) {
    // The ray stays feasible from the returned point and improves the
    // objective.
    const size_t nvars = lp.num_vars();
    const Rational sign = lp.sense == Sense::maximize ? Rational(-1) : Rational(1);
    Rational along = 0;
    for (size_t j = 0; j < nvars; ++j) {
        along += sign * lp.objective[j] * sol.ray[j];
        const auto lb = lp.lower.empty() ? std::optional<Rational>(Rational(0)) : lp.lower[j];
        if (lb && sol.ray[j] < 0) throw std::logic_error("lp: ray leaves a bounded variable");
    }
    if (along >= 0) throw std::logic_error("lp: ray does not improve the objective");
    for (const auto& row : lp.rows) {
        Rational move = 0;
        for (size_t j = 0; j < nvars; ++j) move += row.coeffs[j] * sol.ray[j];
        const bool ok = row.rel == Relation::le   ? move <= 0
                        : row.rel == Relation::ge ? move >= 0
                                                  : move == 0;
        if (!ok) throw std::logic_error("lp: ray violates a row");
    }
}

void verify_certificates(const LinearProgram& lp, const LpSolution& sol) {
    const size_t nvars = lp.num_vars();
    const Rational sign = lp.sense == Sense::maximize ? Rational(-1) : Rational(1);
    auto lower_of = [&](size_t j) -> std::optional<Rational> {
        return lp.lower.empty() ? std::optional<Rational>(Rational(0)) : lp.lower[j];
    };
    if (sol.status == LpStatus::infeasible) {
        verify_infeasibility_certificate(lp, sol.ray);
        return;
    }
    if (sol.status == LpStatus::unbounded) {
        verify_unbounded_ray(lp, sol);
        return;
    }

    // Primal feasibility, exactly.
    for (size_t j = 0; j < nvars; ++j) {
        const auto lb = lower_of(j);
        if (lb && sol.primal[j] < *lb) throw std::logic_error("lp: primal bound violated");
    }
    Rational dual_obj = 0;
    for (size_t i = 0; i < lp.rows.size(); ++i) {
        const auto& row = lp.rows[i];
        Rational lhs = 0;
        for (size_t j = 0; j < nvars; ++j) lhs += row.coeffs[j] * sol.primal[j];
        const bool ok = row.rel == Relation::le   ? lhs <= row.rhs
                        : row.rel == Relation::ge ? lhs >= row.rhs
                                                  : lhs == row.rhs;
        if (!ok) throw std::logic_error("lp: primal row violated");
        // Dual sign and complementary slackness (minimization orientation).
        const Rational y = sign * sol.dual[i];
        if (row.rel == Relation::le && y > 0) throw std::logic_error("lp: dual sign (<=)");
        if (row.rel == Relation::ge && y < 0) throw std::logic_error("lp: dual sign (>=)");
        if (y != 0 && lhs != row.rhs) throw std::logic_error("lp: complementary slackness (row)");
        dual_obj += y * row.rhs;
    }
    // Dual feasibility and variable-side complementary slackness.
    for (size_t j = 0; j < nvars; ++j) {
        Rational red = sign * lp.objective[j];
        for (size_t i = 0; i < lp.rows.size(); ++i) {
            red -= sign * sol.dual[i] * lp.rows[i].coeffs[j];
        }
        const auto lb = lower_of(j);
        if (!lb) {
            if (red != 0) throw std::logic_error("lp: dual feasibility (free var)");
        } else {
            if (red < 0) throw std::logic_error("lp: dual feasibility");
            if (red != 0 && sol.primal[j] != *lb) {
                throw std::logic_error("lp: complementary slackness (var)");
            }
            dual_obj += red * *lb;
        }
    }
    if (dual_obj != sign * sol.objective_value) {
        throw std::logic_error("lp: strong duality violated");
    }
}
#endif

} // namespace

LpSolution solve(const LinearProgram& lp) {
    Standardized s = standardize(lp);
    const size_t m = s.t.size();
    const size_t n_total = m == 0 ? s.num_real : s.t[0].size();

    LpSolution sol;
    if (m == 0) {
        // No constraints: optimal iff no improving direction exists.
        sol.primal.assign(lp.num_vars(), Rational(0));
        for (size_t j = 0; j < lp.num_vars(); ++j) {
            const auto lb = lp.lower.empty() ? std::optional<Rational>(Rational(0)) : lp.lower[j];
            const Rational c = s.cost[s.vars[j].pos];
            if (!lb) {
                if (c != 0) {
                    sol.status = LpStatus::unbounded;
                    sol.ray.assign(lp.num_vars(), Rational(0));
                    sol.ray[j] = c > 0 ? Rational(-1) : Rational(1);
#ifndef NDEBUG
                    verify_certificates(lp, sol);
#endif
                    return sol;
                }
                sol.primal[j] = 0;
            } else {
                if (c < 0) {
                    sol.status = LpStatus::unbounded;
                    sol.ray.assign(lp.num_vars(), Rational(0));
                    sol.ray[j] = 1;
#ifndef NDEBUG
                    verify_certificates(lp, sol);
#endif
                    return sol;
                }
                sol.primal[j] = *lb;
            }
        }
        sol.objective_value = 0;
        for (size_t j = 0; j < lp.num_vars(); ++j) {
            sol.objective_value += lp.objective[j] * sol.primal[j];
        }
        return sol;
    }

    Tableau tab{s.t, s.b, {}, {}, Rational(0), 0, 0};
    tab.basis.resize(m);
    for (size_t i = 0; i < m; ++i) tab.basis[i] = s.num_real + i;

    // Phase 1: minimize the sum of artificials.
    std::vector<Rational> phase1(n_total, Rational(0));
    for (size_t i = 0; i < m; ++i) phase1[s.num_real + i] = 1;
    tab.load_costs(phase1, s.num_real);
    size_t unbounded_col = npos;
    while (tab.step(&unbounded_col)) {
    }
    assert(unbounded_col == npos); // phase 1 is bounded below by 0

    if (tab.obj_value != 0) {
        // obj_value = -(phase-1 optimum); infeasible when the optimum > 0.
        sol.status = LpStatus::infeasible;
        sol.pivots = tab.pivots;
        // Farkas multipliers from the artificial columns: y = c_B B^-1.
        sol.ray.assign(m, Rational(0));
        for (size_t i = 0; i < m; ++i) {
            Rational y = tab.obj[s.num_real + i] + 1;
            if (s.row_negated[i]) y = -y;
            sol.ray[i] = y;
        }
#ifndef NDEBUG
        verify_certificates(lp, sol);
#endif
        return sol;
    }

    // Drive lingering artificials out of the basis where possible.
    for (size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < s.num_real) continue;
        for (size_t j = 0; j < s.num_real; ++j) {
            if (s.t[i][j] != 0) {
                tab.pivot(i, j);
                break;
            }
        }
        // A fully zero row is redundant; its artificial stays basic at 0.
    }

    // Phase 2.
    tab.load_costs(s.cost, s.num_real);
    while (tab.step(&unbounded_col)) {
    }
    sol.pivots = tab.pivots;

    auto structural_value = [&](size_t col) {
        for (size_t i = 0; i < m; ++i) {
            if (tab.basis[i] == col) return s.b[i];
        }
        return Rational(0);
    };
    auto user_point = [&]() {
        std::vector<Rational> x(lp.num_vars());
        for (size_t j = 0; j < lp.num_vars(); ++j) {
            const auto& vm = s.vars[j];
            x[j] = structural_value(vm.pos) + vm.shift;
            if (vm.neg != npos) x[j] -= structural_value(vm.neg);
        }
        return x;
    };

    if (unbounded_col != npos) {
        sol.status = LpStatus::unbounded;
        sol.primal = user_point();
        // Direction: entering column moves +1, basics compensate.
        std::vector<Rational> dz(s.num_real, Rational(0));
        dz[unbounded_col] = 1;
        for (size_t i = 0; i < m; ++i) {
            if (tab.basis[i] < s.num_real) dz[tab.basis[i]] = -s.t[i][unbounded_col];
        }
        sol.ray.assign(lp.num_vars(), Rational(0));
        for (size_t j = 0; j < lp.num_vars(); ++j) {
            const auto& vm = s.vars[j];
            sol.ray[j] = dz[vm.pos];
            if (vm.neg != npos) sol.ray[j] -= dz[vm.neg];
        }
#ifndef NDEBUG
        verify_certificates(lp, sol);
#endif
        return sol;
    }

    sol.status = LpStatus::optimal;
    sol.primal = user_point();
    sol.objective_value = 0;
    for (size_t j = 0; j < lp.num_vars(); ++j) {
        sol.objective_value += lp.objective[j] * sol.primal[j];
    }
    // Duals from the artificial columns (phase-2 artificial cost is 0),
    // mapped back through row negation and the optimization sense.
    const Rational sense_sign = lp.sense == Sense::maximize ? Rational(-1) : Rational(1);
    sol.dual.assign(m, Rational(0));
    for (size_t i = 0; i < m; ++i) {
        Rational y = tab.obj[s.num_real + i];
        if (s.row_negated[i]) y = -y;
        sol.dual[i] = sense_sign * y;
    }
#ifndef NDEBUG
    verify_certificates(lp, sol);
#endif
    return sol;
}

MatrixGameSolution solve_matrix_game(const std::vector<std::vector<Rational>>& m) {
    if (m.empty() || m[0].empty()) throw MalformedLpError("empty game matrix");
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    for (const auto& r : m) {
        if (r.size() != cols) throw MalformedLpError("ragged game matrix");
    }

    // Variables: rho_1..rho_rows >= 0, v free. Minimize v subject to
    // rho^T M <= v per column and sum rho = 1. The column player's mixture
    // is read off the duals of the column constraints.
    LinearProgram lp;
    lp.objective.assign(rows + 1, Rational(0));
    lp.objective[rows] = 1;
    lp.set_free(rows);
    for (size_t j = 0; j < cols; ++j) {
        std::vector<Rational> row(rows + 1, Rational(0));
        for (size_t i = 0; i < rows; ++i) row[i] = m[i][j];
        row[rows] = -1;
        lp.add_row(std::move(row), Relation::le, Rational(0));
    }
    lp.add_row([&] {
        std::vector<Rational> row(rows + 1, Rational(0));
        for (size_t i = 0; i < rows; ++i) row[i] = 1;
        return row;
    }(), Relation::eq, Rational(1));

    const LpSolution sol = solve(lp);
    assert(sol.status == LpStatus::optimal);

    MatrixGameSolution out;
    out.value = sol.objective_value;
    out.row_mixture.assign(sol.primal.begin(), sol.primal.begin() + static_cast<long>(rows));
    out.col_mixture.resize(cols);
    for (size_t j = 0; j < cols; ++j) out.col_mixture[j] = -sol.dual[j];
#ifndef NDEBUG
    // Saddle-point conditions, exactly.
    Rational col_sum = 0;
    for (const auto& k : out.col_mixture) {
        if (k < 0) throw std::logic_error("game: negative column weight");
        col_sum += k;
    }
    if (col_sum != 1) throw std::logic_error("game: column mixture not normalized");
    Rational row_worst;
    bool first = true;
    for (size_t j = 0; j < cols; ++j) {
        Rational v = 0;
        for (size_t i = 0; i < rows; ++i) v += out.row_mixture[i] * m[i][j];
        if (first || v > row_worst) row_worst = v;
        first = false;
    }
    Rational col_worst;
    first = true;
    for (size_t i = 0; i < rows; ++i) {
        Rational v = 0;
        for (size_t j = 0; j < cols; ++j) v += m[i][j] * out.col_mixture[j];
        if (first || v < col_worst) col_worst = v;
        first = false;
    }
    if (row_worst != out.value || col_worst != out.value) {
        throw std::logic_error("game: saddle conditions violated");
    }
#endif
    return out;
}

} // namespace credal
