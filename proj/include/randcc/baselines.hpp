#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "randcc/edge_table.hpp"
#include "randcc/labeling.hpp"

namespace randcc {

// Union by rank with path halving over dense indices 0..n-1.
class DisjointSetForest {
public:
    explicit DisjointSetForest(std::size_t n);

    std::size_t find(std::size_t x);

    // Returns true when the two sets were distinct and have been merged.
    bool unite(std::size_t x, std::size_t y);

    std::size_t set_count() const noexcept { return set_count_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<unsigned char> rank_;
    std::size_t set_count_ = 0;
};

// Exact connected components via union-find.  Loops register their vertex but
// merge nothing.  Labels are the minimum member of each component.
Labeling union_find_components(const EdgeTable& table);

// Label propagation ran out of its step budget.  Carries the labeling reached
// so far and the number of completed sweeps.
class truncation_error : public std::runtime_error {
public:
    truncation_error(std::size_t max_steps, Labeling partial)
        : std::runtime_error("label propagation still changing after " +
                             std::to_string(max_steps) + " sweeps"),
          steps_(max_steps),
          partial_(std::move(partial)) {}

    std::size_t steps() const noexcept { return steps_; }
    const Labeling& partial() const noexcept { return partial_; }

private:
    std::size_t steps_;
    Labeling partial_;
};

// Fixed-ordering baseline: every sweep replaces each vertex's label by the
// minimum over its closed neighbourhood, until nothing changes.  Returns the
// labeling (labels are component minima) and the number of sweeps that changed
// at least one label.  Throws truncation_error when max_steps sweeps were not
// enough.
std::pair<Labeling, std::size_t> naive_min_propagation(const EdgeTable& table,
                                                       std::size_t max_steps);

}  // namespace randcc
