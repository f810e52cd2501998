#include "credal/game.hpp"

#include "credal/errors.hpp"

#include <algorithm>
#include <cassert>

namespace credal {

LossFunction::LossFunction(size_t ny, size_t na, std::vector<Rational> table)
    : ny_(ny), na_(na), table_(std::move(table)) {
    if (ny_ == 0 || na_ == 0 || table_.size() != ny_ * na_) {
        throw DimensionMismatchError("loss table has wrong shape");
    }
}

LossFunction LossFunction::scaled(const Rational& factor) const {
    std::vector<Rational> t = table_;
    for (auto& v : t) v *= factor;
    return LossFunction(ny_, na_, std::move(t));
}

DecisionRule::DecisionRule(size_t nx, size_t na, std::vector<std::vector<Rational>> rows)
    : nx_(nx), na_(na), rows_(std::move(rows)) {
    if (nx_ == 0 || rows_.size() != nx_) {
        throw DimensionMismatchError("decision rule has wrong number of rows");
    }
    for (const auto& r : rows_) {
        if (r.size() != na_) throw DimensionMismatchError("decision rule row has wrong length");
        check_distribution(r, "decision rule row");
    }
}

DecisionRule DecisionRule::pure(size_t nx, size_t na, const std::vector<size_t>& acts) {
    if (acts.size() != nx) throw DimensionMismatchError("one action per observation required");
    std::vector<std::vector<Rational>> rows(nx, std::vector<Rational>(na, Rational(0)));
    for (size_t x = 0; x < nx; ++x) rows[x].at(acts[x]) = 1;
    return DecisionRule(nx, na, std::move(rows));
}

DecisionRule DecisionRule::constant(size_t nx, std::vector<Rational> act) {
    std::vector<std::vector<Rational>> rows(nx, act);
    return DecisionRule(nx, act.size(), std::move(rows));
}

bool DecisionRule::operator==(const DecisionRule& o) const {
    return nx_ == o.nx_ && na_ == o.na_ && rows_ == o.rows_;
}

bool DecisionRule::ignores_information() const {
    for (size_t x = 1; x < nx_; ++x) {
        if (rows_[x] != rows_[0]) return false;
    }
    return true;
}

Rational expected_loss(const JointDistribution& p, const LossFunction& loss,
                       const DecisionRule& rule) {
    if (p.ny() != loss.ny() || p.nx() != rule.nx() || rule.na() != loss.na()) {
        throw DimensionMismatchError("expected_loss: shapes do not agree");
    }
    Rational total = 0;
    for (size_t x = 0; x < p.nx(); ++x) {
        for (size_t y = 0; y < p.ny(); ++y) {
            const Rational& mass = p.at(x, y);
            if (mass == 0) continue;
            Rational l = 0;
            for (size_t a = 0; a < loss.na(); ++a) l += rule.at(x, a) * loss.at(y, a);
            total += mass * l;
        }
    }
    return total;
}

Rational act_expected_loss(const std::vector<Rational>& y_dist, const LossFunction& loss,
                           const std::vector<Rational>& act) {
    if (y_dist.size() != loss.ny() || act.size() != loss.na()) {
        throw DimensionMismatchError("act_expected_loss: shapes do not agree");
    }
    Rational total = 0;
    for (size_t y = 0; y < loss.ny(); ++y) {
        if (y_dist[y] == 0) continue;
        Rational l = 0;
        for (size_t a = 0; a < loss.na(); ++a) l += act[a] * loss.at(y, a);
        total += y_dist[y] * l;
    }
    return total;
}

Rational worst_case_act_loss(const VPolytope& marginals, const LossFunction& loss,
                             const std::vector<Rational>& act) {
    Rational worst;
    bool first = true;
    for (const auto& q : marginals.vertices()) {
        const Rational v = act_expected_loss(q, loss, act);
        if (first || v > worst) worst = v;
        first = false;
    }
    assert(!first);
    return worst;
}

std::vector<std::pair<size_t, Rational>> GameSolution::support() const {
    std::vector<std::pair<size_t, Rational>> out;
    for (size_t k = 0; k < bookie_weights.size(); ++k) {
        if (bookie_weights[k] > 0) out.emplace_back(k, bookie_weights[k]);
    }
    return out;
}

GameSolution solve_apriori(const CredalSet& set, const LossFunction& loss) {
    if (set.ny() != loss.ny()) throw DimensionMismatchError("loss and credal set disagree on Y");
    const size_t nx = set.nx();
    const size_t na = loss.na();
    const auto& verts = set.vertices();
    const size_t k = verts.size();

    // Variables: rule entries d(x)(a), then t. Minimize t subject to
    //   sum_{x,a} d(x)(a) * E_vk[L(. , a) ; X=x] <= t   per vertex k,
    //   sum_a d(x)(a) = 1                               per x.
    // The expectation is linear in the bookie's distribution, so vertex
    // constraints bound the whole set. The duals of the vertex rows are
    // the bookie's equilibrium mixture.
    const size_t nvars = nx * na + 1;
    const size_t tcol = nx * na;
    LinearProgram lp;
    lp.objective.assign(nvars, Rational(0));
    lp.objective[tcol] = 1;
    lp.set_free(tcol);

    for (const auto& v : verts) {
        std::vector<Rational> row(nvars, Rational(0));
        for (size_t x = 0; x < nx; ++x) {
            for (size_t a = 0; a < na; ++a) {
                Rational c = 0;
                for (size_t y = 0; y < loss.ny(); ++y) c += v.at(x, y) * loss.at(y, a);
                row[x * na + a] = c;
            }
        }
        row[tcol] = -1;
        lp.add_row(std::move(row), Relation::le, Rational(0));
    }
    for (size_t x = 0; x < nx; ++x) {
        std::vector<Rational> row(nvars, Rational(0));
        for (size_t a = 0; a < na; ++a) row[x * na + a] = 1;
        lp.add_row(std::move(row), Relation::eq, Rational(1));
    }

    const LpSolution sol = solve(lp);
    assert(sol.status == LpStatus::optimal);

    std::vector<std::vector<Rational>> rows(nx);
    for (size_t x = 0; x < nx; ++x) {
        rows[x].assign(sol.primal.begin() + static_cast<long>(x * na),
                       sol.primal.begin() + static_cast<long>((x + 1) * na));
    }
    DecisionRule rule(nx, na, std::move(rows));

    std::vector<Rational> weights(k);
    Rational wsum = 0;
    for (size_t i = 0; i < k; ++i) {
        weights[i] = -sol.dual[i];
        assert(weights[i] >= 0);
        wsum += weights[i];
    }
    assert(wsum == 1);

    std::vector<Rational> agg(set.nx() * set.ny(), Rational(0));
    for (size_t i = 0; i < k; ++i) {
        if (weights[i] == 0) continue;
        const auto& e = verts[i].entries();
        for (size_t j = 0; j < agg.size(); ++j) agg[j] += weights[i] * e[j];
    }
    return GameSolution{sol.objective_value, std::move(rule), std::move(weights),
                        JointDistribution(set.nx(), set.ny(), std::move(agg))};
}

PosteriorSolution solve_aposteriori(const CredalSet& set, const LossFunction& loss, size_t x) {
    if (x >= set.nx()) throw std::out_of_range("observation index out of range");
    if (!set.x_reachable(x)) {
        throw UnreachableObservationError("observation has probability zero under every vertex");
    }
    const auto cond = set.condition(EventSet::single(x, set.nx()));
    const VPolytope marginals = cond.set.y_marginal_set();
    const auto analysis = [&] {
        std::vector<std::vector<Rational>> m(loss.na(),
                                             std::vector<Rational>(marginals.num_vertices()));
        for (size_t a = 0; a < loss.na(); ++a) {
            for (size_t j = 0; j < marginals.num_vertices(); ++j) {
                Rational v = 0;
                for (size_t y = 0; y < loss.ny(); ++y) {
                    v += marginals.vertices()[j][y] * loss.at(y, a);
                }
                m[a][j] = v;
            }
        }
        return solve_matrix_game(m);
    }();
    return PosteriorSolution{analysis.value, analysis.row_mixture, marginals,
                             cond.boundary_approximation};
}

EquilibriumCertificate certify_equilibrium(const CredalSet& set, const LossFunction& loss,
                                           const GameSolution& sol) {
    EquilibriumCertificate cert;
    const auto& verts = set.vertices();
    cert.vertex_losses.reserve(verts.size());
    bool first = true;
    for (const auto& v : verts) {
        const Rational e = expected_loss(v, loss, sol.rule);
        if (first || e > cert.worst_case) cert.worst_case = e;
        first = false;
        cert.vertex_losses.push_back(e);
    }
    cert.worst_case_matches_value = cert.worst_case == sol.value;

    cert.support_attains_worst_case = true;
    for (size_t k = 0; k < verts.size(); ++k) {
        if (sol.bookie_weights[k] > 0 && cert.vertex_losses[k] != cert.worst_case) {
            cert.support_attains_worst_case = false;
        }
    }

    // Best response to the aggregate: per-x minimum over acts.
    Rational best = 0;
    for (size_t x = 0; x < set.nx(); ++x) {
        Rational row_best;
        bool any = false;
        for (size_t a = 0; a < loss.na(); ++a) {
            Rational v = 0;
            for (size_t y = 0; y < set.ny(); ++y) v += sol.aggregate.at(x, y) * loss.at(y, a);
            if (!any || v < row_best) row_best = v;
            any = true;
        }
        best += row_best;
    }
    cert.best_response_value = best;
    cert.best_response_matches_value = best == sol.value;
    return cert;
}

IgnoreCheck check_ignore_optimal(const CredalSet& set) {
    // One witness per marginal generator is not enough: the ignore-
    // optimality argument needs an independent member for the maximin
    // marginal, which is usually interior. A single X-marginal w whose
    // product with EVERY generator lies in the set closes that gap, since
    // convex combinations then witness every marginal in the set:
    //   w (x) (sum_i l_i q_i) = sum_i l_i (w (x) q_i).
    IgnoreCheck check;
    const VPolytope marginal_set = set.y_marginal_set();
    const auto& gens = marginal_set.vertices();
    const size_t r = gens.size();
    const size_t k = set.vertices().size();
    const size_t nx = set.nx(), ny = set.ny();

    // Feasibility LP over w in Delta(X) and per-generator hull weights.
    LinearProgram lp;
    const size_t nvars = nx + r * k;
    lp.objective.assign(nvars, Rational(0));
    for (size_t i = 0; i < r; ++i) {
        for (size_t x = 0; x < nx; ++x) {
            for (size_t y = 0; y < ny; ++y) {
                std::vector<Rational> row(nvars, Rational(0));
                row[x] = gens[i][y];
                for (size_t j = 0; j < k; ++j) {
                    row[nx + i * k + j] = -set.vertices()[j].at(x, y);
                }
                lp.add_row(std::move(row), Relation::eq, Rational(0));
            }
        }
        std::vector<Rational> sum_row(nvars, Rational(0));
        for (size_t j = 0; j < k; ++j) sum_row[nx + i * k + j] = 1;
        lp.add_row(std::move(sum_row), Relation::eq, Rational(1));
    }
    {
        std::vector<Rational> row(nvars, Rational(0));
        for (size_t x = 0; x < nx; ++x) row[x] = 1;
        lp.add_row(std::move(row), Relation::eq, Rational(1));
    }
    const LpSolution sol = solve(lp);
    check.holds = sol.status == LpStatus::optimal;

    for (size_t i = 0; i < r; ++i) {
        IgnoreCheck::Entry entry;
        entry.marginal = gens[i];
        if (check.holds) {
            std::vector<Rational> w(sol.primal.begin(),
                                    sol.primal.begin() + static_cast<long>(nx));
            entry.witness = JointDistribution::product(w, gens[i]);
        } else {
            entry.witness = set.find_independent_witness(gens[i]);
        }
        check.entries.push_back(std::move(entry));
    }
    return check;
}

IgnoreValue ignore_rule_value(const CredalSet& set, const LossFunction& loss) {
    const auto analysis = minimax_act_analysis(set.y_marginal_set(), loss);
    // The canonical act keeps the fixture outputs independent of pivot
    // order when the optimal act is not unique.
    return IgnoreValue{analysis.value, analysis.canonical_act};
}

InconsistencyReport detect_time_inconsistency(const CredalSet& set, const LossFunction& loss) {
    InconsistencyReport report{solve_apriori(set, loss), {}, Rational(0), Rational(0),
                               false,                    false, false};

    std::vector<Rational> worst_by_x(set.nx(), Rational(0));
    for (size_t x : set.reachable_x()) {
        const PosteriorSolution post = solve_aposteriori(set, loss, x);
        const Rational m =
            worst_case_act_loss(post.conditioned_marginals, loss, report.prior.rule.row(x));
        const Rational gap = m - post.value;
        assert(gap >= 0);
        if (gap > 0) report.act_divergence = true;
        worst_by_x[x] = m;
        report.entries.push_back({x, post.value, m, gap});
    }

    // Worst case over the set of mixing the per-x conditional worst cases
    // by the X-marginal; linear in the distribution, so vertices suffice.
    bool first = true;
    for (const auto& v : set.vertices()) {
        const auto mx = v.marginal_x();
        Rational e = 0;
        for (size_t x = 0; x < set.nx(); ++x) e += mx[x] * worst_by_x[x];
        if (first || e > report.posterior_exposure) report.posterior_exposure = e;
        first = false;
    }
    report.exposure_gap = report.posterior_exposure - report.prior.value;
    assert(report.exposure_gap >= 0);
    report.value_divergence = report.exposure_gap > 0;
    report.flagged = report.act_divergence || report.value_divergence;
    return report;
}

namespace {

// Solves A z = rhs by exact Gaussian elimination; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> rhs) {
    const size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        const Rational p = a[col][col];
        for (size_t j = col; j < n; ++j) a[col][j] /= p;
        rhs[col] /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rational f = a[i][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            rhs[i] -= f * rhs[col];
        }
    }
    return rhs;
}

} // namespace

MinimaxActSet minimax_act_analysis(const VPolytope& marginals, const LossFunction& loss) {
    const size_t na = loss.na();
    const size_t k = marginals.num_vertices();

    std::vector<std::vector<Rational>> m(na, std::vector<Rational>(k));
    for (size_t a = 0; a < na; ++a) {
        for (size_t j = 0; j < k; ++j) {
            Rational v = 0;
            for (size_t y = 0; y < loss.ny(); ++y) v += marginals.vertices()[j][y] * loss.at(y, a);
            m[a][j] = v;
        }
    }
    const MatrixGameSolution game = solve_matrix_game(m);

    MinimaxActSet out;
    out.value = game.value;

    // Optimal-act polytope: rho in the action simplex with every column
    // payoff at most the value. Enumerate its vertices as basic solutions:
    // the simplex equality plus na-1 tight constraints drawn from the
    // nonnegativities and the column constraints.
    struct Constraint {
        std::vector<Rational> coeffs;
        Rational rhs;
    };
    std::vector<Constraint> ineqs;
    for (size_t a = 0; a < na; ++a) {
        std::vector<Rational> c(na, Rational(0));
        c[a] = -1; // -rho_a <= 0
        ineqs.push_back({std::move(c), Rational(0)});
    }
    for (size_t j = 0; j < k; ++j) {
        std::vector<Rational> c(na);
        for (size_t a = 0; a < na; ++a) c[a] = m[a][j];
        ineqs.push_back({std::move(c), game.value});
    }

    std::vector<std::vector<Rational>> found;
    std::vector<size_t> pick(na >= 1 ? na - 1 : 0);
    const size_t total = ineqs.size();
    auto feasible = [&](const std::vector<Rational>& rho) {
        for (const auto& c : ineqs) {
            Rational lhs = 0;
            for (size_t a = 0; a < na; ++a) lhs += c.coeffs[a] * rho[a];
            if (lhs > c.rhs) return false;
        }
        return true;
    };
    // Iterate all (na-1)-subsets of the inequality constraints.
    std::vector<size_t> comb(na - 1);
    for (size_t i = 0; i < comb.size(); ++i) comb[i] = i;
    const bool any_subset = comb.size() <= total;
    bool done = !any_subset;
    if (na == 1) {
        found.push_back({Rational(1)});
        done = true;
    }
    while (!done) {
        std::vector<std::vector<Rational>> a(na, std::vector<Rational>(na));
        std::vector<Rational> rhs(na);
        for (size_t col = 0; col < na; ++col) a[0][col] = 1;
        rhs[0] = 1;
        for (size_t i = 0; i < comb.size(); ++i) {
            a[i + 1] = ineqs[comb[i]].coeffs;
            rhs[i + 1] = ineqs[comb[i]].rhs;
        }
        if (auto rho = solve_square(std::move(a), std::move(rhs))) {
            if (feasible(*rho)) found.push_back(std::move(*rho));
        }
        // next combination
        size_t i = comb.size();
        while (i > 0) {
            --i;
            if (comb[i] + (comb.size() - i) < total) {
                ++comb[i];
                for (size_t j = i + 1; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
                break;
            }
            if (i == 0) done = true;
        }
        if (comb.empty()) done = true;
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    out.optimal_vertices = std::move(found);
    assert(!out.optimal_vertices.empty());

    out.canonical_act.assign(na, Rational(0));
    for (const auto& rho : out.optimal_vertices) {
        for (size_t a = 0; a < na; ++a) out.canonical_act[a] += rho[a];
    }
    const Rational count(static_cast<long>(out.optimal_vertices.size()));
    for (auto& v : out.canonical_act) v /= count;
    return out;
}

} // namespace credal
