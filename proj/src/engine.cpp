#include "randcc/engine.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace randcc {

namespace {

// 64 + 3*floor(log2(n)) rounds: far beyond anything a randomised ordering
// needs, while still catching runs that stopped making progress.
std::uint64_t default_round_budget(std::uint64_t vertices) {
    std::uint64_t bits = 0;
    while ((vertices >> bits) > 1) ++bits;
    return 64 + 3 * bits;
}

std::uint64_t distinct_values(const std::vector<kernels::KV>& table) {
    std::vector<std::uint64_t> values;
    values.reserve(table.size());
    for (const kernels::KV& kv : table) values.push_back(kv.second);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values.size();
}

EngineResult run_impl(const EdgeTable& input, const EngineConfig& config) {
    const bool lean = config.variant == Variant::lean;
    if (!lean && config.method != OrderingFamily::affine)
        throw std::invalid_argument(
            "the stacked variant folds key inverses and therefore requires the affine ordering");

    const EdgeTable sym = symmetrize(input);
    std::vector<Edge> edges(sym.rows().begin(), sym.rows().end());

    ContractionTrace trace;
    trace.input_rows = input.row_count();
    trace.input_vertices = sym.distinct_vertex_count();
    trace.peak_live_edge_rows = edges.size();

    const std::uint64_t budget =
        config.max_rounds != 0 ? config.max_rounds : default_round_budget(trace.input_vertices);

    std::vector<kernels::KV> cumulative;                // lean: the one label table
    std::vector<std::vector<kernels::KV>> rep_stack;    // fast: per-round tables
    std::vector<gf64::AffineKey> round_keys;            // fast: key of every round

    for (std::uint64_t round = 1;; ++round) {
        if (round > budget) throw engine_abort_error(budget, std::move(trace));

        // Instantiate this round's ordering.  The stored-key family needs an
        // explicit domain: the live vertices plus, in the cumulative table,
        // labels of already-contracted vertices (they too get rewritten through
        // the fallback branch and must keep colliding with nothing).
        std::vector<VertexId> domain;
        if (config.method == OrderingFamily::random_keys) {
            domain = kernels::group_keys(edges);
            for (const kernels::KV& kv : cumulative) domain.push_back(kv.second);
            std::sort(domain.begin(), domain.end());
            domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
        }
        const OrderingMethod order = make_round_ordering(config.method, config.seed, round, domain);

        // Representative per live vertex, then the contracted table.
        std::vector<kernels::KV> reps = kernels::group_min(edges, order);
        std::vector<Edge> next = kernels::relabel_edges(edges, reps);
        kernels::sort_unique(next);

        RoundStats stats;
        stats.round = round;
        stats.vertices_before = reps.size();
        stats.vertices_after = distinct_values(reps);
        stats.edges_before = edges.size();
        stats.edges_after = next.size();
        stats.rows_written = reps.size() + next.size();

        trace.peak_live_edge_rows =
            std::max(trace.peak_live_edge_rows, static_cast<std::uint64_t>(edges.size() + next.size()));
        trace.peak_representative_rows =
            std::max(trace.peak_representative_rows, static_cast<std::uint64_t>(reps.size()));

        if (lean) {
            if (round == 1) {
                cumulative = std::move(reps);
            } else {
                cumulative = kernels::compose_labels(cumulative, reps, order);
                stats.rows_written += cumulative.size();
            }
        } else {
            round_keys.push_back(order.affine_key());
            rep_stack.push_back(std::move(reps));
        }

        trace.total_rows_written += stats.rows_written;
        if (config.collect_rounds) trace.rounds.push_back(stats);

        edges = std::move(next);
        if (edges.empty()) break;
    }

    std::vector<kernels::KV> final_labels;
    if (lean) {
        final_labels = std::move(cumulative);
        trace.labeling_rows = final_labels.size();
    } else {
        // Fold the stack back to front.  Before table j is merged into table
        // j-1 the accumulated key equals the composition of every round key
        // after round j, so unmatched labels are mapped exactly as the
        // cumulative variant would have mapped them.
        gf64::AffineKey acc = gf64::kIdentityKey;
        for (std::size_t j = rep_stack.size(); j-- > 1;) {
            acc = gf64::compose_keys(acc, round_keys[j]);
            const OrderingMethod folded = OrderingMethod::affine(acc);
            rep_stack[j - 1] = kernels::compose_labels(rep_stack[j - 1], rep_stack[j], folded);
            trace.total_rows_written += rep_stack[j - 1].size();
            rep_stack[j] = {};
        }
        final_labels = std::move(rep_stack.front());
    }

    std::vector<Labeling::Entry> entries(final_labels.begin(), final_labels.end());
    return EngineResult{Labeling(std::move(entries)), std::move(trace)};
}

}  // namespace

void ContractionTrace::write_tsv(std::ostream& out) const {
    out << "# round\tvertices_before\tvertices_after\tedges_before\tedges_after\trows_written\n";
    for (const RoundStats& r : rounds)
        out << r.round << '\t' << r.vertices_before << '\t' << r.vertices_after << '\t'
            << r.edges_before << '\t' << r.edges_after << '\t' << r.rows_written << '\n';
    out << "# input_rows\t" << input_rows << '\n';
    out << "# input_vertices\t" << input_vertices << '\n';
    out << "# peak_live_edge_rows\t" << peak_live_edge_rows << '\n';
    out << "# peak_representative_rows\t" << peak_representative_rows << '\n';
    out << "# labeling_rows\t" << labeling_rows << '\n';
    out << "# total_rows_written\t" << total_rows_written << '\n';
}

RepresentativeTable compute_representatives(const RoundGraph& graph, const OrderingMethod& order) {
    std::vector<Edge> rows(graph.edges.rows().begin(), graph.edges.rows().end());
    kernels::sort_edges(rows);
    return RepresentativeTable{kernels::group_min(rows, order), graph.round};
}

std::pair<RoundGraph, std::uint64_t> contract_edges(const RoundGraph& graph,
                                                    const RepresentativeTable& reps) {
    std::vector<Edge> rows = kernels::relabel_edges(graph.edges.rows(), reps.entries);
    kernels::sort_unique(rows);
    const std::uint64_t written = rows.size();
    return {RoundGraph{EdgeTable(std::move(rows), /*symmetric=*/true), graph.round + 1}, written};
}

EngineResult run_lean(const EdgeTable& input, const EngineConfig& config) {
    EngineConfig c = config;
    c.variant = Variant::lean;
    return run_impl(input, c);
}

EngineResult run_fast(const EdgeTable& input, const EngineConfig& config) {
    EngineConfig c = config;
    c.variant = Variant::fast;
    return run_impl(input, c);
}

EngineResult run(const EdgeTable& input, const EngineConfig& config) {
    return run_impl(input, config);
}

}  // namespace randcc
