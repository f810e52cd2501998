#include "credal/space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace credal {

namespace {

void check_labels(const std::vector<std::string>& labels, const char* which) {
    if (labels.empty()) {
        throw std::invalid_argument(std::string(which) + " labels must be nonempty");
    }
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw std::invalid_argument(std::string(which) + " label duplicated: '" + l + "'");
        }
    }
}

size_t index_of(const std::vector<std::string>& labels, const std::string& label,
                const char* which) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw std::out_of_range(std::string("unknown ") + which + " label: '" + label + "'");
    }
    return static_cast<size_t>(it - labels.begin());
}

} // namespace

SpaceSpec::SpaceSpec(std::vector<std::string> x, std::vector<std::string> y,
                     std::vector<std::string> a)
    : x_labels(std::move(x)), y_labels(std::move(y)), a_labels(std::move(a)) {
    check_labels(x_labels, "X");
    check_labels(y_labels, "Y");
    check_labels(a_labels, "A");
}

size_t SpaceSpec::x_index(const std::string& label) const {
    return index_of(x_labels, label, "X");
}
size_t SpaceSpec::y_index(const std::string& label) const {
    return index_of(y_labels, label, "Y");
}
size_t SpaceSpec::a_index(const std::string& label) const {
    return index_of(a_labels, label, "A");
}

EventSet::EventSet(std::vector<size_t> indices, size_t nx) : xs(std::move(indices)) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    if (xs.empty()) throw std::invalid_argument("event must be nonempty");
    if (xs.back() >= nx) throw std::out_of_range("event index out of range");
}

EventSet EventSet::whole(size_t nx) {
    std::vector<size_t> all(nx);
    for (size_t i = 0; i < nx; ++i) all[i] = i;
    return EventSet(std::move(all), nx);
}

EventSet EventSet::single(size_t x, size_t nx) { return EventSet({x}, nx); }

bool EventSet::contains(size_t x) const {
    return std::binary_search(xs.begin(), xs.end(), x);
}

Partition::Partition(std::vector<std::vector<size_t>> raw, size_t nx) {
    std::vector<char> seen(nx, 0);
    for (auto& cell : raw) {
        if (cell.empty()) throw std::invalid_argument("partition cell must be nonempty");
        std::sort(cell.begin(), cell.end());
        for (size_t x : cell) {
            if (x >= nx) throw std::out_of_range("partition index out of range");
            if (seen[x]) throw std::invalid_argument("partition cells overlap");
            seen[x] = 1;
        }
    }
    for (size_t x = 0; x < nx; ++x) {
        if (!seen[x]) throw std::invalid_argument("partition does not cover X");
    }
    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    cells = std::move(raw);
}

Partition Partition::singletons(size_t nx) {
    std::vector<std::vector<size_t>> cells;
    for (size_t x = 0; x < nx; ++x) cells.push_back({x});
    return Partition(std::move(cells), nx);
}

Partition Partition::whole(size_t nx) {
    std::vector<size_t> all(nx);
    for (size_t i = 0; i < nx; ++i) all[i] = i;
    return Partition({all}, nx);
}

size_t Partition::cell_of(size_t x) const {
    for (size_t c = 0; c < cells.size(); ++c) {
        if (std::binary_search(cells[c].begin(), cells[c].end(), x)) return c;
    }
    throw std::out_of_range("observation not covered by partition");
}

EventSet Partition::cell_event(size_t cell, size_t nx) const {
    return EventSet(cells.at(cell), nx);
}

std::string Partition::to_string(const SpaceSpec& space) const {
    std::string out = "{";
    for (size_t c = 0; c < cells.size(); ++c) {
        if (c) out += ", ";
        out += "{";
        for (size_t i = 0; i < cells[c].size(); ++i) {
            if (i) out += ",";
            out += space.x_labels.at(cells[c][i]);
        }
        out += "}";
    }
    out += "}";
    return out;
}

} // namespace credal
