#pragma once

#include <string>
#include <vector>

namespace credal {

/// The finite observation, outcome and action spaces of a decision problem.
/// Labels are unique within each list and index positions are stable.
struct SpaceSpec {
    std::vector<std::string> x_labels;
    std::vector<std::string> y_labels;
    std::vector<std::string> a_labels;

    SpaceSpec() = default;
    SpaceSpec(std::vector<std::string> x, std::vector<std::string> y,
              std::vector<std::string> a);

    size_t nx() const { return x_labels.size(); }
    size_t ny() const { return y_labels.size(); }
    size_t na() const { return a_labels.size(); }

    /// Throws std::out_of_range with the offending label in the message.
    size_t x_index(const std::string& label) const;
    size_t y_index(const std::string& label) const;
    size_t a_index(const std::string& label) const;
};

/// A nonempty subset of the observation space, interpreted as the event
/// X in S (identified with S x Y on the joint space).
struct EventSet {
    std::vector<size_t> xs; // sorted, unique, nonempty

    EventSet() = default;
    explicit EventSet(std::vector<size_t> indices, size_t nx);
    static EventSet whole(size_t nx);
    static EventSet single(size_t x, size_t nx);

    bool contains(size_t x) const;
    size_t size() const { return xs.size(); }
};

/// A partition of the observation space into disjoint nonempty cells
/// covering all of X. Cells are kept sorted by smallest member, members
/// sorted within each cell.
struct Partition {
    std::vector<std::vector<size_t>> cells;

    Partition() = default;
    Partition(std::vector<std::vector<size_t>> cells, size_t nx);
    static Partition singletons(size_t nx);
    static Partition whole(size_t nx);

    size_t num_cells() const { return cells.size(); }
    /// Index of the cell containing x.
    size_t cell_of(size_t x) const;
    EventSet cell_event(size_t cell, size_t nx) const;
    bool operator==(const Partition& other) const { return cells == other.cells; }

    std::string to_string(const SpaceSpec& space) const;
};

} // namespace credal
