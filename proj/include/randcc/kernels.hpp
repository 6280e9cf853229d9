#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "randcc/edge_table.hpp"
#include "randcc/ordering.hpp"

// Table primitives underlying the contraction rounds.  Every kernel has an
// OpenMP-parallel implementation and a serial twin in kernels::serial with
// identical output; the twins are the reference the parallel paths are tested
// against, and the benchmark target compares their throughput.  All outputs
// are deterministic for a fixed input regardless of thread count.
namespace randcc::kernels {

using KV = std::pair<std::uint64_t, std::uint64_t>;

// Sort rows by (v, w).
void sort_edges(std::vector<Edge>& rows);

// Sort rows by (v, w) and drop duplicates.
void sort_unique(std::vector<Edge>& rows);

// Sorted distinct values of the first column.  Precondition: rows sorted.
std::vector<VertexId> group_keys(std::span<const Edge> sorted_rows);

// Representative selection: for each group of rows sharing v, emit
// (v, min over {order(v)} union {order(w) : (v, w) in rows}).  Precondition:
// rows sorted by v.  Output sorted by v, one entry per distinct v.
std::vector<KV> group_min(std::span<const Edge> sorted_rows, const OrderingMethod& order);

// Map both endpoints through the representative table (sorted by key) and drop
// rows that become loops.  Duplicates are NOT removed; callers follow up with
// sort_unique.  Endpoints missing from the table throw std::logic_error.
std::vector<Edge> relabel_edges(std::span<const Edge> rows, std::span<const KV> rep_sorted);

// One composition step of a cumulative label table: each (v, r) becomes
// (v, rep[r]) when r is a key of rep_sorted, else (v, order(r)).
std::vector<KV> compose_labels(std::span<const KV> labels, std::span<const KV> rep_sorted,
                               const OrderingMethod& order);

// Serial reference twins.
namespace serial {
void sort_edges(std::vector<Edge>& rows);
void sort_unique(std::vector<Edge>& rows);
std::vector<VertexId> group_keys(std::span<const Edge> sorted_rows);
std::vector<KV> group_min(std::span<const Edge> sorted_rows, const OrderingMethod& order);
std::vector<Edge> relabel_edges(std::span<const Edge> rows, std::span<const KV> rep_sorted);
std::vector<KV> compose_labels(std::span<const KV> labels, std::span<const KV> rep_sorted,
                               const OrderingMethod& order);
}  // namespace serial

}  // namespace randcc::kernels
