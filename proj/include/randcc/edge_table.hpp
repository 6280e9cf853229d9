#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace randcc {

// Vertex identifiers are opaque 64-bit values.  Relabelling steps map them
// through bijections over the full 64-bit space, so intermediate identifiers
// use the whole range even when the input identifiers are small.
using VertexId = std::uint64_t;

// One row of an edge table.
struct Edge {
    VertexId v = 0;
    VertexId w = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// An immutable bag of edge rows with set semantics on comparison.  A table
// built by symmetrize() carries both orientations of every non-loop row and is
// flagged accordingly; the contraction rounds require that closure.
class EdgeTable {
public:
    EdgeTable() = default;
    explicit EdgeTable(std::vector<Edge> rows, bool symmetric = false);

    std::span<const Edge> rows() const noexcept { return rows_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    bool symmetric() const noexcept { return symmetric_; }
    bool empty() const noexcept { return rows_.empty(); }

    // Sorted distinct identifiers occurring in either column.
    std::vector<VertexId> distinct_vertices() const;
    std::size_t distinct_vertex_count() const;

    // Set equality: same rows regardless of order or duplication.
    bool operator==(const EdgeTable& other) const;

private:
    std::vector<Edge> rows_;
    bool symmetric_ = false;
};

// Parse whitespace-separated "U V" rows.  Blank lines and lines whose first
// non-blank character is '#' are skipped.  Throws parse_error with the
// offending 1-based line number on malformed rows.
EdgeTable parse_edge_list(std::istream& in);

// Write one "U<TAB>V" line per row, in table order.
void write_edge_list(const EdgeTable& table, std::ostream& out);

// Closure under orientation reversal: every row (v, w) gains its mirror
// (w, v); loops stay single; duplicates are removed.  Output rows are sorted.
EdgeTable symmetrize(const EdgeTable& table);

// Drop loop rows (v, v).  Vertices incident only to loops disappear from the
// result's vertex set.
EdgeTable strip_loops(const EdgeTable& table);

}  // namespace randcc
