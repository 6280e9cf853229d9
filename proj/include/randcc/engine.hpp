#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "randcc/edge_table.hpp"
#include "randcc/kernels.hpp"
#include "randcc/labeling.hpp"
#include "randcc/ordering.hpp"

namespace randcc {

// The edge table alive in one contraction round.  Rows are symmetric except
// for loop rows; round numbers are 1-based.
struct RoundGraph {
    EdgeTable edges;
    std::uint64_t round = 1;
};

// Per-round representative map: (vertex, representative), sorted by vertex,
// one entry per vertex occurring in the round's table.
struct RepresentativeTable {
    std::vector<kernels::KV> entries;
    std::uint64_t round = 1;
};

// Row counts observed while one round executed.
struct RoundStats {
    std::uint64_t round = 0;
    std::uint64_t vertices_before = 0;
    std::uint64_t vertices_after = 0;
    std::uint64_t edges_before = 0;
    std::uint64_t edges_after = 0;
    std::uint64_t rows_written = 0;

    double contraction_factor() const {
        return vertices_before == 0
                   ? 1.0
                   : static_cast<double>(vertices_after) / static_cast<double>(vertices_before);
    }
};

// Full account of a contraction run: one record per round plus space totals.
// peak_live_edge_rows counts edge rows only (the current table plus the one
// under construction); the vertex-table peaks are tracked separately.
struct ContractionTrace {
    std::vector<RoundStats> rounds;
    std::uint64_t input_rows = 0;
    std::uint64_t input_vertices = 0;
    std::uint64_t peak_live_edge_rows = 0;
    std::uint64_t peak_representative_rows = 0;
    std::uint64_t labeling_rows = 0;  // size of the cumulative table (0 for the stacked variant)
    std::uint64_t total_rows_written = 0;

    std::uint64_t round_count() const { return rounds.size(); }

    // Tab-separated export: a header comment, one line per round, then the
    // totals as trailing comments.
    void write_tsv(std::ostream& out) const;
};

// The run exceeded its round budget.  Carries the trace collected so far.
class engine_abort_error : public std::runtime_error {
public:
    engine_abort_error(std::uint64_t budget, ContractionTrace trace)
        : std::runtime_error("contraction did not terminate within " +
                             std::to_string(budget) + " rounds"),
          trace_(std::move(trace)) {}

    const ContractionTrace& trace() const noexcept { return trace_; }

private:
    ContractionTrace trace_;
};

enum class Variant {
    lean,  // one cumulative label table, rewritten every round
    fast,  // per-round tables stacked, folded back-to-front at the end
};

struct EngineConfig {
    OrderingFamily method = OrderingFamily::affine;
    Variant variant = Variant::lean;
    std::uint64_t seed = kDefaultSeed;
    // 0 = default budget of 64 + 3*log2(input vertex count) rounds.  The
    // identity ordering on adversarial inputs needs an explicit larger budget.
    std::uint64_t max_rounds = 0;
    bool collect_rounds = true;  // keep per-round records in the trace

    static constexpr std::uint64_t kDefaultSeed = 42;
};

struct EngineResult {
    Labeling labeling;
    ContractionTrace trace;
};

// One round of representative selection over a symmetric table.
RepresentativeTable compute_representatives(const RoundGraph& graph, const OrderingMethod& order);

// Contract a round graph through its representative table: relabel both
// endpoints, drop loops, deduplicate.  Returns the next round's graph and the
// number of distinct rows written.  Throws std::logic_error when the table
// does not cover every endpoint.
std::pair<RoundGraph, std::uint64_t> contract_edges(const RoundGraph& graph,
                                                    const RepresentativeTable& reps);

// Run contraction to termination with the cumulative-table variant.
EngineResult run_lean(const EdgeTable& input, const EngineConfig& config);

// Run contraction with the stacked variant (affine ordering only: the fold
// needs invertible per-round keys).  Throws std::invalid_argument otherwise.
EngineResult run_fast(const EdgeTable& input, const EngineConfig& config);

// Dispatch on config.variant.
EngineResult run(const EdgeTable& input, const EngineConfig& config);

}  // namespace randcc
