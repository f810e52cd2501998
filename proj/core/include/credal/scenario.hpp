#pragma once

#include "credal/credal_set.hpp"
#include "credal/game.hpp"
#include "credal/space.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace credal {

/// A parse or validation failure, carrying the offending field.
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A complete decision problem: spaces, loss table, credal set and any
/// named partitions of the observation space.
struct Scenario {
    std::string name;
    SpaceSpec space;
    LossFunction loss;
    CredalSet credal;
    std::vector<std::pair<std::string, Partition>> partitions;

    const Partition& partition_by_name(const std::string& name) const;
};

/// Parses the scenario document format: a JSON object with fields
///   name, x_labels, y_labels, a_labels,
///   loss      (|Y| rows of |A| rationals as "p/q" strings),
///   vertices  (list of |X|-row x |Y|-column rational tables),
///   partitions (optional: name -> list of label lists).
/// All rationals are exact strings; floats are rejected.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

/// Canonical serialization; load(serialize(s)) reproduces s structurally.
std::string serialize_scenario(const Scenario& s);

/// Built-in fixtures: "example1", "monty_hall", "walley_coins".
/// Credal vertex lists were derived from the defining constraints with the
/// enumeration script shipped under tools/ and are frozen here.
Scenario builtin_scenario(const std::string& name);
std::vector<std::string> builtin_names();

} // namespace credal
