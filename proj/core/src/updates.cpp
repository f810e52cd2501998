#include "credal/updates.hpp"

#include "credal/errors.hpp"

#include <algorithm>
#include <cassert>

namespace credal {

const CredalSet& UpdateRuleOnP::image(size_t x) const {
    const auto it = images.find(x);
    if (it == images.end()) {
        throw UnreachableObservationError("update rule is not defined at this observation");
    }
    return it->second;
}

std::vector<size_t> UpdateRuleOnP::domain() const {
    std::vector<size_t> xs;
    xs.reserve(images.size());
    for (const auto& [x, _] : images) xs.push_back(x);
    return xs;
}

UpdateRuleOnP c_conditioning(const CredalSet& set, const Partition& partition) {
    UpdateRuleOnP rule;
    rule.provenance = UpdateRuleOnP::Provenance::c_conditioning;
    rule.partition = partition;
    // One conditioning per cell; every reachable x in the cell shares it.
    std::vector<std::optional<CredalSet>> by_cell(partition.num_cells());
    for (size_t x : set.reachable_x()) {
        const size_t c = partition.cell_of(x);
        if (!by_cell[c]) {
            by_cell[c] = set.condition(partition.cell_event(c, set.nx())).set;
        }
        rule.images.emplace(x, *by_cell[c]);
    }
    return rule;
}

UpdateRuleOnP custom_update_rule(std::map<size_t, CredalSet> images) {
    UpdateRuleOnP rule;
    rule.provenance = UpdateRuleOnP::Provenance::custom;
    rule.images = std::move(images);
    return rule;
}

RangeDecomposition range_decomposition(const UpdateRuleOnP& rule) {
    RangeDecomposition out;
    for (const auto& [x, image] : rule.images) {
        VPolytope range = image.y_marginal_set();
        bool placed = false;
        for (auto& cell : out.cells) {
            if (cell.range.same_set(range)) {
                cell.xs.push_back(x);
                placed = true;
                break;
            }
        }
        if (!placed) out.cells.push_back({std::move(range), {x}});
    }
    return out;
}

bool is_calibrated_relative(const CredalSet& set, const UpdateRuleOnP& rule) {
    const RangeDecomposition ranges = range_decomposition(rule);

    std::vector<JointDistribution> audit = set.vertices();
    const size_t nv = set.vertices().size();
    for (size_t i = 0; i < nv; ++i) {
        for (size_t j = i + 1; j < nv; ++j) {
            std::vector<Rational> mid(set.nx() * set.ny());
            const auto& a = set.vertices()[i].entries();
            const auto& b = set.vertices()[j].entries();
            for (size_t t = 0; t < mid.size(); ++t) mid[t] = (a[t] + b[t]) / 2;
            audit.emplace_back(set.nx(), set.ny(), std::move(mid));
        }
    }

    for (const auto& cell : ranges.cells) {
        const EventSet event(cell.xs, set.nx());
        for (const auto& p : audit) {
            const auto conditioned = p.condition(event);
            if (!conditioned) continue;
            if (!cell.range.contains(conditioned->marginal_y())) return false;
        }
    }
    return true;
}

RuleOrder narrower_than(const UpdateRuleOnP& a, const UpdateRuleOnP& b, CompareOn mode) {
    if (a.domain() != b.domain()) {
        throw DimensionMismatchError("update rules have different domains");
    }
    bool a_in_b = true;
    bool b_in_a = true;
    for (const auto& [x, image_a] : a.images) {
        const CredalSet& image_b = b.image(x);
        if (mode == CompareOn::joints) {
            if (a_in_b && !image_a.subset_of(image_b)) a_in_b = false;
            if (b_in_a && !image_b.subset_of(image_a)) b_in_a = false;
        } else {
            const VPolytope ma = image_a.y_marginal_set();
            const VPolytope mb = image_b.y_marginal_set();
            if (a_in_b && !ma.subset_of(mb)) a_in_b = false;
            if (b_in_a && !mb.subset_of(ma)) b_in_a = false;
        }
        if (!a_in_b && !b_in_a) return RuleOrder::incomparable;
    }
    if (a_in_b && b_in_a) return RuleOrder::equal;
    return a_in_b ? RuleOrder::narrower : RuleOrder::wider;
}

std::vector<Partition> all_partitions(size_t n, size_t max_n) {
    if (n == 0) throw std::invalid_argument("cannot partition an empty set");
    if (n > max_n) {
        throw SizeBoundExceededError("partition enumeration exceeds the configured bound");
    }
    // Restricted growth strings in lexicographic order: s[0] = 0,
    // s[i] <= 1 + max(s[0..i-1]).
    std::vector<Partition> out;
    std::vector<size_t> s(n, 0);
    while (true) {
        size_t num_cells = *std::max_element(s.begin(), s.end()) + 1;
        std::vector<std::vector<size_t>> cells(num_cells);
        for (size_t i = 0; i < n; ++i) cells[s[i]].push_back(i);
        out.emplace_back(std::move(cells), n);

        // advance the growth string
        size_t i = n;
        bool advanced = false;
        while (i > 1) {
            --i;
            size_t prefix_max = 0;
            for (size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, s[j]);
            if (s[i] <= prefix_max) {
                ++s[i];
                for (size_t j = i + 1; j < n; ++j) s[j] = 0;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return out;
}

std::vector<Partition> sharp_partitions(const CredalSet& set, size_t max_x, CompareOn mode) {
    const std::vector<Partition> parts = all_partitions(set.nx(), max_x);
    std::vector<UpdateRuleOnP> rules;
    rules.reserve(parts.size());
    for (const auto& p : parts) rules.push_back(c_conditioning(set, p));

    std::vector<Partition> minimal;
    for (size_t i = 0; i < parts.size(); ++i) {
        bool is_minimal = true;
        for (size_t j = 0; j < parts.size() && is_minimal; ++j) {
            if (j == i) continue;
            if (narrower_than(rules[j], rules[i], mode) == RuleOrder::narrower) {
                is_minimal = false;
            }
        }
        if (is_minimal) minimal.push_back(parts[i]);
    }
    return minimal;
}

GeneralizedConditioningResult is_generalized_conditioning_on(const CredalSet& set,
                                                             const UpdateRuleOnP& rule,
                                                             size_t max_x) {
    const std::vector<size_t> domain = rule.domain();
    for (const auto& partition : all_partitions(set.nx(), max_x)) {
        const UpdateRuleOnP candidate = c_conditioning(set, partition);
        if (candidate.domain() != domain) continue;
        bool match = true;
        for (size_t x : domain) {
            if (!candidate.image(x).same_set(rule.image(x))) {
                match = false;
                break;
            }
        }
        if (match) return {true, partition};
    }
    return {false, std::nullopt};
}

CConditioningBasis rule_is_based_on_c_conditioning(const CredalSet& set,
                                                   const LossFunction& loss,
                                                   const DecisionRule& rule,
                                                   const Partition& partition) {
    CConditioningBasis out;
    out.based = true;

    struct CellData {
        VPolytope marginals;
        MinimaxActSet analysis;
    };
    std::vector<std::optional<CellData>> by_cell(partition.num_cells());
    for (size_t x : set.reachable_x()) {
        const size_t c = partition.cell_of(x);
        if (!by_cell[c]) {
            VPolytope marginals =
                set.condition(partition.cell_event(c, set.nx())).set.y_marginal_set();
            MinimaxActSet analysis = minimax_act_analysis(marginals, loss);
            by_cell[c] = CellData{std::move(marginals), std::move(analysis)};
        }
        const MinimaxActSet& cell = by_cell[c]->analysis;
        const Rational worst = worst_case_act_loss(by_cell[c]->marginals, loss, rule.row(x));

        CConditioningBasis::Cell entry;
        entry.x = x;
        entry.cell_value = cell.value;
        entry.rule_worst_case = worst;
        entry.canonical_act = cell.canonical_act;
        entry.attains_value = worst == cell.value;
        entry.act_matches_canonical = rule.row(x) == cell.canonical_act;
        if (!entry.act_matches_canonical) out.based = false;
        out.cells.push_back(std::move(entry));
    }
    return out;
}

} // namespace credal
