#include "credal/report.hpp"

#include <json.hpp>

#include <sstream>

namespace credal {

using nlohmann::ordered_json;

namespace {

ordered_json rational_node(const Rational& r) {
    return ordered_json{{"exact", to_fraction_string(r)}, {"approx", to_decimal_string(r)}};
}

ordered_json distribution_node(const std::vector<Rational>& v,
                               const std::vector<std::string>& labels) {
    ordered_json out = ordered_json::object();
    for (size_t i = 0; i < v.size(); ++i) out[labels.at(i)] = rational_node(v[i]);
    return out;
}

ordered_json joint_node(const JointDistribution& p, const SpaceSpec& space) {
    ordered_json out = ordered_json::array();
    for (size_t x = 0; x < p.nx(); ++x) {
        ordered_json row = ordered_json::array();
        for (size_t y = 0; y < p.ny(); ++y) row.push_back(to_fraction_string(p.at(x, y)));
        out.push_back(std::move(row));
    }
    (void)space;
    return out;
}

ordered_json rule_node(const DecisionRule& rule, const SpaceSpec& space) {
    ordered_json out = ordered_json::object();
    for (size_t x = 0; x < rule.nx(); ++x) {
        out[space.x_labels.at(x)] = distribution_node(rule.row(x), space.a_labels);
    }
    return out;
}

ordered_json header(const Scenario& scenario, const char* command) {
    return ordered_json{{"command", command},
                        {"scenario", scenario.name},
                        {"arithmetic", "exact-rational"}};
}

bool is_rational_node(const ordered_json& j) {
    return j.is_object() && j.size() == 2 && j.contains("exact") && j.contains("approx");
}

void render_text(const ordered_json& j, std::ostream& os, int indent) {
    const std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (is_rational_node(j)) {
        os << j.at("exact").get<std::string>() << " (~" << j.at("approx").get<std::string>()
           << ")";
        return;
    }
    if (j.is_object()) {
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first || indent > 0) os << "\n" << pad;
            first = false;
            os << key << ":";
            if (value.is_object() && !is_rational_node(value)) {
                render_text(value, os, indent + 1);
            } else if (value.is_array() && !value.empty() &&
                       (value.front().is_object() || value.front().is_array())) {
                render_text(value, os, indent + 1);
            } else {
                os << " ";
                render_text(value, os, indent + 1);
            }
        }
        return;
    }
    if (j.is_array()) {
        if (j.empty()) {
            os << "[]";
            return;
        }
        if (!j.front().is_object() && !j.front().is_array()) {
            os << "[";
            for (size_t i = 0; i < j.size(); ++i) {
                if (i) os << ", ";
                render_text(j.at(i), os, indent);
            }
            os << "]";
            return;
        }
        for (const auto& item : j) {
            os << "\n" << pad << "-";
            if (item.is_object() && !is_rational_node(item)) {
                render_text(item, os, indent + 1);
            } else {
                os << " ";
                render_text(item, os, indent + 1);
            }
        }
        return;
    }
    if (j.is_string()) {
        os << j.get<std::string>();
    } else if (j.is_boolean()) {
        os << (j.get<bool>() ? "true" : "false");
    } else {
        os << j.dump();
    }
}

std::string render(const ordered_json& doc, const ReportOptions& options) {
    if (options.json) return doc.dump(2) + "\n";
    std::ostringstream os;
    render_text(doc, os, 0);
    os << "\n";
    return os.str();
}

} // namespace

std::string render_apriori_report(const Scenario& scenario, const GameSolution& sol,
                                  const std::optional<EquilibriumCertificate>& certificate,
                                  const std::optional<OracleCheck>& oracle,
                                  const ReportOptions& options) {
    ordered_json doc = header(scenario, "solve apriori");
    doc["value"] = rational_node(sol.value);
    doc["rule"] = rule_node(sol.rule, scenario.space);
    ordered_json support = ordered_json::array();
    for (const auto& [k, w] : sol.support()) {
        support.push_back(ordered_json{{"vertex", k}, {"weight", rational_node(w)}});
    }
    doc["bookie_mixture"] = std::move(support);
    doc["aggregate"] = joint_node(sol.aggregate, scenario.space);
    if (certificate) {
        doc["certificate"] = ordered_json{
            {"worst_case_matches_value", certificate->worst_case_matches_value},
            {"support_attains_worst_case", certificate->support_attains_worst_case},
            {"best_response_matches_value", certificate->best_response_matches_value},
            {"all_pass", certificate->all_pass()}};
    }
    if (oracle) {
        doc["oracle"] = ordered_json{{"bayes_value", rational_node(oracle->bayes_value)},
                                     {"bayes_matches", oracle->bayes_matches},
                                     {"grid_resolution", oracle->grid_resolution},
                                     {"grid_value", rational_node(oracle->grid_value)},
                                     {"grid_is_upper_bound", oracle->grid_is_upper_bound}};
    }
    return render(doc, options);
}

std::string render_aposteriori_report(const Scenario& scenario, size_t x,
                                      const PosteriorSolution& sol,
                                      const ReportOptions& options) {
    ordered_json doc = header(scenario, "solve aposteriori");
    doc["observation"] = scenario.space.x_labels.at(x);
    doc["value"] = rational_node(sol.value);
    doc["act"] = distribution_node(sol.act, scenario.space.a_labels);
    ordered_json marginals = ordered_json::array();
    for (const auto& q : sol.conditioned_marginals.vertices()) {
        marginals.push_back(to_fraction_string(q));
    }
    doc["conditioned_marginal_vertices"] = std::move(marginals);
    doc["boundary_approximation"] = sol.boundary_approximation;
    return render(doc, options);
}

std::string render_hull_report(const Scenario& scenario, bool equals_hull,
                               const ReportOptions& options) {
    ordered_json doc = header(scenario, "check hull");
    doc["equals_hull"] = equals_hull;
    doc["conditioning_apriori_optimal"] = equals_hull;
    return render(doc, options);
}

std::string render_ignore_report(const Scenario& scenario, const IgnoreCheck& check,
                                 const IgnoreValue& value, const ReportOptions& options) {
    ordered_json doc = header(scenario, "check ignore");
    doc["ignore_optimal"] = check.holds;
    ordered_json entries = ordered_json::array();
    for (const auto& e : check.entries) {
        ordered_json node{{"marginal", to_fraction_string(e.marginal)},
                          {"witness_found", e.witness.has_value()}};
        if (e.witness) node["witness"] = joint_node(*e.witness, scenario.space);
        entries.push_back(std::move(node));
    }
    doc["marginal_generators"] = std::move(entries);
    doc["ignore_rule_value"] = rational_node(value.value);
    doc["ignore_rule_act"] = distribution_node(value.act, scenario.space.a_labels);
    return render(doc, options);
}

std::string render_calibration_report(const Scenario& scenario,
                                      const std::string& partition_name, bool calibrated,
                                      const ReportOptions& options) {
    ordered_json doc = header(scenario, "check calibration");
    doc["partition"] = partition_name;
    doc["calibrated"] = calibrated;
    return render(doc, options);
}

std::string render_sharp_partitions_report(const Scenario& scenario,
                                           const std::vector<Partition>& partitions,
                                           const ReportOptions& options) {
    ordered_json doc = header(scenario, "sharp-partitions");
    ordered_json list = ordered_json::array();
    for (const auto& p : partitions) list.push_back(p.to_string(scenario.space));
    doc["sharply_calibrated_partitions"] = std::move(list);
    return render(doc, options);
}

std::string render_inconsistency_report(const Scenario& scenario,
                                        const InconsistencyReport& report,
                                        const ReportOptions& options) {
    ordered_json doc = header(scenario, "detect inconsistency");
    doc["flagged"] = report.flagged;
    doc["act_divergence"] = report.act_divergence;
    doc["value_divergence"] = report.value_divergence;
    doc["prior_value"] = rational_node(report.prior.value);
    doc["prior_rule"] = rule_node(report.prior.rule, scenario.space);
    ordered_json entries = ordered_json::array();
    for (const auto& e : report.entries) {
        entries.push_back(ordered_json{{"x", scenario.space.x_labels.at(e.x)},
                                       {"posterior_value", rational_node(e.posterior_value)},
                                       {"rule_worst_case", rational_node(e.rule_worst_case)},
                                       {"act_gap", rational_node(e.act_gap)}});
    }
    doc["per_observation"] = std::move(entries);
    doc["posterior_exposure"] = rational_node(report.posterior_exposure);
    doc["exposure_gap"] = rational_node(report.exposure_gap);
    return render(doc, options);
}

} // namespace credal
