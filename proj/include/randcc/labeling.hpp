#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "randcc/edge_table.hpp"

namespace randcc {

// A total map vertex -> component label, stored sorted by vertex.  Labels are
// opaque 64-bit values; two vertices belong to the same component exactly when
// their labels are equal.
class Labeling {
public:
    using Entry = std::pair<VertexId, std::uint64_t>;

    Labeling() = default;

    // Takes ownership of (vertex, label) pairs; sorts them by vertex.
    // Throws std::invalid_argument if a vertex appears twice.
    explicit Labeling(std::vector<Entry> entries);

    std::span<const Entry> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    std::optional<std::uint64_t> label_of(VertexId v) const;
    std::size_t distinct_label_count() const;

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::vector<Entry> entries_;
};

// Write one "V<TAB>LABEL" line per entry, vertices ascending.  Returns the
// number of rows written.
std::size_t write_labeling(const Labeling& labeling, std::ostream& out);

// Parse the format produced by write_labeling (any whitespace accepted between
// the two fields).  Throws parse_error on malformed rows or repeated vertices.
Labeling read_labeling(std::istream& in);

// First pair of vertices on which two labelings disagree about co-membership,
// in ascending vertex order; nullopt when the induced partitions coincide.
struct PartitionMismatch {
    VertexId u = 0;
    VertexId v = 0;
    bool together_in_first = false;  // true: same component in a, split in b
};
std::optional<PartitionMismatch> compare_partitions(const Labeling& a, const Labeling& b);

// True when both labelings induce the same partition of the same vertex set.
// Label values themselves need not match.  Throws domain_mismatch_error when
// the vertex sets differ.
bool partitions_equal(const Labeling& a, const Labeling& b);

// Rewrite every label to the minimum vertex identifier of its component.
Labeling canonicalize(const Labeling& labeling);

}  // namespace randcc
