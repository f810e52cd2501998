#pragma once

#include "credal/oracle.hpp"
#include "credal/scenario.hpp"
#include "credal/updates.hpp"

#include <optional>
#include <string>

namespace credal {

/// Reports are deterministic: identical inputs render byte-identical
/// documents. Every numeric field carries the exact rational first and a
/// 6-significant-digit decimal approximation for reading only.
struct ReportOptions {
    bool json = false;
};

std::string render_apriori_report(const Scenario& scenario, const GameSolution& sol,
                                  const std::optional<EquilibriumCertificate>& certificate,
                                  const std::optional<OracleCheck>& oracle,
                                  const ReportOptions& options);

std::string render_aposteriori_report(const Scenario& scenario, size_t x,
                                      const PosteriorSolution& sol,
                                      const ReportOptions& options);

std::string render_hull_report(const Scenario& scenario, bool equals_hull,
                               const ReportOptions& options);

std::string render_ignore_report(const Scenario& scenario, const IgnoreCheck& check,
                                 const IgnoreValue& value, const ReportOptions& options);

std::string render_calibration_report(const Scenario& scenario,
                                      const std::string& partition_name, bool calibrated,
                                      const ReportOptions& options);

std::string render_sharp_partitions_report(const Scenario& scenario,
                                           const std::vector<Partition>& partitions,
                                           const ReportOptions& options);

std::string render_inconsistency_report(const Scenario& scenario,
                                        const InconsistencyReport& report,
                                        const ReportOptions& options);

} // namespace credal
