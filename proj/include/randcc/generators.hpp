#pragma once

#include <cstdint>
#include <span>

#include "randcc/bounds.hpp"
#include "randcc/edge_table.hpp"

namespace randcc {

// How a generated path numbers its vertices.  The numbering drives how the
// identity ordering behaves: sequential is its worst case (one contraction per
// round), optimal collapses a third of the path per round.
enum class PathNumbering {
    sequential,  // 1 - 2 - ... - n
    optimal,     // every third vertex is a local minimum of the numbering
    shuffled,    // seeded random permutation of 1..n
};

// Path on n vertices (n >= 1; a single vertex is emitted as a loop row).
EdgeTable gen_path(std::uint64_t n, PathNumbering numbering, std::uint64_t seed = 0);

// Disjoint union of paths with the given lengths (vertex counts), identifiers
// consecutive across blocks.  seed != 0 shuffles the identifiers afterwards.
EdgeTable gen_path_union(std::span<const std::uint64_t> lengths, std::uint64_t seed = 0);

// Recursive-quadrant random graph over 2^scale vertices: for every sampled
// edge the quadrant is drawn with probabilities (a, b, c, d) per level.
// Self-loops and duplicates are kept as sampled.  Probabilities must be
// non-negative and sum to 1 (within 1e-9); scale <= 30.
struct RmatParams {
    double a = 0.57;
    double b = 0.19;
    double c = 0.19;
    double d = 0.05;
};

EdgeTable gen_rmat(std::uint32_t scale, std::uint64_t edges, const RmatParams& params,
                   std::uint64_t seed, bool shuffle = true);

// width x height lattice; each lattice edge is kept with probability
// keep_probability.  Pixels that lose all their edges stay present as loop
// rows.  Identifiers are shuffled so they carry no geometry.
EdgeTable gen_grid(std::uint32_t width, std::uint32_t height, double keep_probability,
                   std::uint64_t seed);

// Uniform random graph G(n, p): each unordered pair independently with
// probability p.  Isolated vertices stay present as loop rows.
EdgeTable gen_erdos_renyi(std::uint64_t n, double p, std::uint64_t seed);

// Fixed 20-vertex benchmark graph: a 5-cycle whose every vertex carries three
// pendant leaves.  20 rows, known contraction-factor constant.
EdgeTable gen_fig11();

// Directed n-cycle over vertices 0..n-1 (n >= 1).
Digraph gen_directed_cycle(std::uint32_t n);

// Random digraph on n >= 2 vertices: every ordered pair (u, v), u != v, gets
// an arc with probability p; vertices left without outgoing arcs receive one
// to a random other vertex, so every out-neighbourhood is non-empty.
Digraph gen_random_digraph(std::uint32_t n, double p, std::uint64_t seed);

// Apply a seeded random permutation of the occurring identifiers.  Structure
// is preserved; only the names change.
EdgeTable shuffle_ids(const EdgeTable& table, std::uint64_t seed);

}  // namespace randcc
