#include "credal/scenario.hpp"

#include "credal/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace credal {

using nlohmann::ordered_json;

const Partition& Scenario::partition_by_name(const std::string& wanted) const {
    for (const auto& [n, p] : partitions) {
        if (n == wanted) return p;
    }
    throw ScenarioError("scenario '" + name + "' has no partition named '" + wanted + "'");
}

namespace {

Rational field_rational(const ordered_json& j, const std::string& where) {
    if (!j.is_string()) {
        throw ScenarioError(where + ": rationals must be strings like \"p/q\"");
    }
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(where + ": " + e.what());
    }
}

std::vector<std::string> field_labels(const ordered_json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw ScenarioError(where + ": expected a nonempty list");
    std::vector<std::string> out;
    for (const auto& v : j) {
        if (!v.is_string()) throw ScenarioError(where + ": labels must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

Scenario from_json(const ordered_json& doc) {
    if (!doc.is_object()) throw ScenarioError("scenario document must be an object");
    for (const char* field : {"name", "x_labels", "y_labels", "a_labels", "loss", "vertices"}) {
        if (!doc.contains(field)) {
            throw ScenarioError(std::string("missing field '") + field + "'");
        }
    }
    if (!doc.at("name").is_string()) throw ScenarioError("name: expected a string");
    const std::string name = doc.at("name").get<std::string>();

    SpaceSpec space;
    try {
        space = SpaceSpec(field_labels(doc.at("x_labels"), "x_labels"),
                          field_labels(doc.at("y_labels"), "y_labels"),
                          field_labels(doc.at("a_labels"), "a_labels"));
    } catch (const std::invalid_argument& e) {
        throw ScenarioError(e.what());
    }

    const auto& loss_doc = doc.at("loss");
    if (!loss_doc.is_array() || loss_doc.size() != space.ny()) {
        throw ScenarioError("loss: expected " + std::to_string(space.ny()) + " rows (one per Y label)");
    }
    std::vector<Rational> loss_table;
    for (size_t y = 0; y < space.ny(); ++y) {
        const auto& row = loss_doc.at(y);
        if (!row.is_array() || row.size() != space.na()) {
            throw ScenarioError("loss row " + std::to_string(y) + ": expected " +
                                std::to_string(space.na()) + " entries (one per action)");
        }
        for (size_t a = 0; a < space.na(); ++a) {
            loss_table.push_back(
                field_rational(row.at(a), "loss[" + std::to_string(y) + "][" + std::to_string(a) + "]"));
        }
    }
    LossFunction loss(space.ny(), space.na(), std::move(loss_table));

    const auto& verts_doc = doc.at("vertices");
    if (!verts_doc.is_array() || verts_doc.empty()) {
        throw ScenarioError("vertices: expected a nonempty list");
    }
    std::vector<JointDistribution> vertices;
    for (size_t k = 0; k < verts_doc.size(); ++k) {
        const auto& table = verts_doc.at(k);
        const std::string where = "vertices[" + std::to_string(k) + "]";
        if (!table.is_array() || table.size() != space.nx()) {
            throw ScenarioError(where + ": expected " + std::to_string(space.nx()) +
                                " rows (one per X label)");
        }
        std::vector<Rational> entries;
        for (size_t x = 0; x < space.nx(); ++x) {
            const auto& row = table.at(x);
            if (!row.is_array() || row.size() != space.ny()) {
                throw ScenarioError(where + " row " + std::to_string(x) + ": expected " +
                                    std::to_string(space.ny()) + " entries (one per Y label)");
            }
            for (size_t y = 0; y < space.ny(); ++y) {
                entries.push_back(field_rational(row.at(y), where));
            }
        }
        try {
            vertices.emplace_back(space.nx(), space.ny(), std::move(entries));
        } catch (const std::invalid_argument& e) {
            throw ScenarioError(where + ": " + e.what());
        }
    }
    CredalSet credal(space.nx(), space.ny(), std::move(vertices));

    std::vector<std::pair<std::string, Partition>> partitions;
    if (doc.contains("partitions")) {
        const auto& parts = doc.at("partitions");
        if (!parts.is_object()) throw ScenarioError("partitions: expected an object");
        for (const auto& [pname, cells_doc] : parts.items()) {
            if (!cells_doc.is_array()) {
                throw ScenarioError("partition '" + pname + "': expected a list of cells");
            }
            std::vector<std::vector<size_t>> cells;
            for (const auto& cell_doc : cells_doc) {
                if (!cell_doc.is_array()) {
                    throw ScenarioError("partition '" + pname + "': cells must be label lists");
                }
                std::vector<size_t> cell;
                for (const auto& label : cell_doc) {
                    if (!label.is_string()) {
                        throw ScenarioError("partition '" + pname + "': labels must be strings");
                    }
                    try {
                        cell.push_back(space.x_index(label.get<std::string>()));
                    } catch (const std::out_of_range& e) {
                        throw ScenarioError("partition '" + pname + "': " + e.what());
                    }
                }
                cells.push_back(std::move(cell));
            }
            try {
                partitions.emplace_back(pname, Partition(std::move(cells), space.nx()));
            } catch (const std::exception& e) {
                throw ScenarioError("partition '" + pname + "': " + e.what());
            }
        }
    }

    return Scenario{name, std::move(space), std::move(loss), std::move(credal),
                    std::move(partitions)};
}

} // namespace

Scenario parse_scenario(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ScenarioError(std::string("scenario parse error: ") + e.what());
    }
    return from_json(doc);
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioError("cannot open scenario file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& s) {
    ordered_json doc;
    doc["name"] = s.name;
    doc["x_labels"] = s.space.x_labels;
    doc["y_labels"] = s.space.y_labels;
    doc["a_labels"] = s.space.a_labels;

    ordered_json loss = ordered_json::array();
    for (size_t y = 0; y < s.space.ny(); ++y) {
        ordered_json row = ordered_json::array();
        for (size_t a = 0; a < s.space.na(); ++a) {
            row.push_back(to_fraction_string(s.loss.at(y, a)));
        }
        loss.push_back(std::move(row));
    }
    doc["loss"] = std::move(loss);

    ordered_json verts = ordered_json::array();
    for (const auto& v : s.credal.vertices()) {
        ordered_json table = ordered_json::array();
        for (size_t x = 0; x < s.space.nx(); ++x) {
            ordered_json row = ordered_json::array();
            for (size_t y = 0; y < s.space.ny(); ++y) {
                row.push_back(to_fraction_string(v.at(x, y)));
            }
            table.push_back(std::move(row));
        }
        verts.push_back(std::move(table));
    }
    doc["vertices"] = std::move(verts);

    if (!s.partitions.empty()) {
        ordered_json parts = ordered_json::object();
        for (const auto& [pname, partition] : s.partitions) {
            ordered_json cells = ordered_json::array();
            for (const auto& cell : partition.cells) {
                ordered_json labels = ordered_json::array();
                for (size_t x : cell) labels.push_back(s.space.x_labels.at(x));
                cells.push_back(std::move(labels));
            }
            parts[pname] = std::move(cells);
        }
        doc["partitions"] = std::move(parts);
    }
    return doc.dump(2) + "\n";
}

namespace {

// Vertex lists derived from the defining constraints by
// tools/hrep_vertices.py and frozen here.
Scenario make_example1() {
    // X = Y = A = {0,1}; every joint with Pr(Y=1) = 2/3; 0/1 loss.
    return parse_scenario(R"({
      "name": "example1",
      "x_labels": ["0", "1"],
      "y_labels": ["0", "1"],
      "a_labels": ["0", "1"],
      "loss": [["0", "1"], ["1", "0"]],
      "vertices": [
        [["0", "0"], ["1/3", "2/3"]],
        [["0", "2/3"], ["1/3", "0"]],
        [["1/3", "0"], ["0", "2/3"]],
        [["1/3", "2/3"], ["0", "0"]]
      ],
      "partitions": {
        "singletons": [["0"], ["1"]],
        "ignore": [["0", "1"]]
      }
    })");
}

Scenario make_monty_hall() {
    // X = {G2,G3} (door opened), Y = A = {1,2,3} (door with the car /
    // door finally chosen); uniform Y-marginal, the opened door never
    // hides the car; 0/1 loss.
    return parse_scenario(R"({
      "name": "monty_hall",
      "x_labels": ["G2", "G3"],
      "y_labels": ["1", "2", "3"],
      "a_labels": ["1", "2", "3"],
      "loss": [
        ["0", "1", "1"],
        ["1", "0", "1"],
        ["1", "1", "0"]
      ],
      "vertices": [
        [["0", "0", "1/3"], ["1/3", "1/3", "0"]],
        [["1/3", "0", "1/3"], ["0", "1/3", "0"]]
      ],
      "partitions": {
        "singletons": [["G2"], ["G3"]],
        "ignore": [["G2", "G3"]]
      }
    })");
}

Scenario make_walley_coins() {
    // Two fair coin tosses, the second depending arbitrarily on the
    // first; X = first toss, Y = second toss, predict Y with 0/1 loss.
    return parse_scenario(R"({
      "name": "walley_coins",
      "x_labels": ["H", "T"],
      "y_labels": ["H", "T"],
      "a_labels": ["H", "T"],
      "loss": [["0", "1"], ["1", "0"]],
      "vertices": [
        [["0", "1/2"], ["1/2", "0"]],
        [["1/2", "0"], ["0", "1/2"]]
      ],
      "partitions": {
        "singletons": [["H"], ["T"]],
        "ignore": [["H", "T"]]
      }
    })");
}

} // namespace

Scenario builtin_scenario(const std::string& name) {
    if (name == "example1") return make_example1();
    if (name == "monty_hall") return make_monty_hall();
    if (name == "walley_coins") return make_walley_coins();
    throw ScenarioError("unknown builtin scenario: '" + name + "'");
}

std::vector<std::string> builtin_names() { return {"example1", "monty_hall", "walley_coins"}; }

} // namespace credal
