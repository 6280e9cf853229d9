#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "randcc/baselines.hpp"
#include "randcc/engine.hpp"
#include "randcc/generators.hpp"

using namespace randcc;
using kernels::KV;

namespace {

EdgeTable example10() {
    std::ifstream in(RANDCC_TEST_DATA_DIR "/example10.edges");
    REQUIRE(in.good());
    return parse_edge_list(in);
}

EngineConfig config(OrderingFamily method, Variant variant, std::uint64_t seed,
                    std::uint64_t max_rounds = 0) {
    EngineConfig cfg;
    cfg.method = method;
    cfg.variant = variant;
    cfg.seed = seed;
    cfg.max_rounds = max_rounds;
    return cfg;
}

void check_trace_invariants(const ContractionTrace& trace) {
    for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
        const RoundStats& r = trace.rounds[i];
        CHECK(r.round == i + 1);
        CHECK(r.vertices_after <= r.vertices_before);
        CHECK(r.edges_after <= r.edges_before);
        CHECK(r.contraction_factor() <= 1.0);
        CHECK(r.rows_written >= r.vertices_before + r.edges_after);
    }
    if (!trace.rounds.empty()) CHECK(trace.rounds.back().edges_after == 0);
    CHECK(trace.peak_live_edge_rows <= 4 * trace.input_rows);
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("identity ordering reproduces the frozen example tables") {
    const RoundGraph g{symmetrize(example10()), 1};
    const RepresentativeTable reps = compute_representatives(g, OrderingMethod::min_id());

    const std::vector<KV> expected{{1, 1}, {2, 2}, {3, 3}, {4, 2}, {5, 1},
                                   {6, 5}, {7, 5}, {8, 3}, {9, 2}, {10, 1}};
    CHECK(reps.entries == expected);

    const auto [contracted, written] = contract_edges(g, reps);
    CHECK(contracted.edges == EdgeTable({{1, 3}, {1, 5}, {3, 1}, {5, 1}}));
    CHECK(written == 4);
    CHECK(contracted.round == 2);
    // Vertex 2's component closed onto itself: it is gone from the next round.
    CHECK(contracted.edges.distinct_vertices() == std::vector<VertexId>{1, 3, 5});
}

TEST_CASE("cumulative run on the example graph finds its two components") {
    const EngineResult result =
        run_lean(example10(), config(OrderingFamily::min_id, Variant::lean, 0));
    CHECK(result.labeling.size() == 10);
    CHECK(result.labeling.distinct_label_count() == 2);
    // Identity ordering converges to component minima without canonicalize.
    for (const VertexId v : {1, 3, 5, 6, 7, 8, 10}) CHECK(result.labeling.label_of(v) == 1);
    for (const VertexId v : {2, 4, 9}) CHECK(result.labeling.label_of(v) == 2);
    CHECK(result.trace.round_count() == 2);
    check_trace_invariants(result.trace);
}

TEST_CASE("contract_edges validates its representative table") {
    const RoundGraph g{symmetrize(EdgeTable({{1, 2}})), 1};
    const RepresentativeTable partial{{{1, 1}}, 1};
    CHECK_THROWS_AS(contract_edges(g, partial), std::logic_error);
}

TEST_CASE("sequential path under the identity ordering needs n-1 rounds") {
    const EngineResult result =
        run_lean(gen_path(10, PathNumbering::sequential),
                 config(OrderingFamily::min_id, Variant::lean, 0, 100));
    CHECK(result.trace.round_count() == 9);
    CHECK(result.labeling.distinct_label_count() == 1);
    check_trace_invariants(result.trace);
}

TEST_CASE("optimal path numbering contracts to a third in one round") {
    const EngineResult result =
        run_lean(gen_path(6, PathNumbering::optimal),
                 config(OrderingFamily::min_id, Variant::lean, 0, 100));
    REQUIRE(!result.trace.rounds.empty());
    CHECK(result.trace.rounds[0].vertices_before == 6);
    CHECK(result.trace.rounds[0].vertices_after == 2);
    CHECK(result.labeling.distinct_label_count() == 1);
}

TEST_CASE("round budget exhaustion aborts with the trace so far") {
    try {
        run_lean(gen_path(10, PathNumbering::sequential),
                 config(OrderingFamily::min_id, Variant::lean, 0, 4));
        FAIL("expected an abort");
    } catch (const engine_abort_error& e) {
        CHECK(e.trace().round_count() == 4);
        CHECK(e.trace().rounds.back().edges_after > 0);
    }
}

TEST_CASE("the stacked variant requires the affine ordering") {
    const EdgeTable t({{1, 2}});
    for (const OrderingFamily bad :
         {OrderingFamily::min_id, OrderingFamily::random_keys,
          OrderingFamily::keyed_permutation})
        CHECK_THROWS_AS(run_fast(t, config(bad, Variant::fast, 1)), std::invalid_argument);
}

TEST_CASE("both variants produce identical labels under the same affine seeds") {
    const std::vector<EdgeTable> graphs{
        example10(),
        gen_path(50, PathNumbering::shuffled, 3),
        gen_erdos_renyi(60, 0.05, 5),
        gen_grid(8, 8, 0.5, 9),
        EdgeTable{},
        EdgeTable({{7, 7}}),
    };
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (const std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
            const EngineResult lean =
                run_lean(graphs[i], config(OrderingFamily::affine, Variant::lean, seed));
            const EngineResult fast =
                run_fast(graphs[i], config(OrderingFamily::affine, Variant::fast, seed));
            CAPTURE(i);
            CAPTURE(seed);
            REQUIRE(lean.labeling == fast.labeling);  // bit-identical, not just same partition
            CHECK(lean.trace.round_count() == fast.trace.round_count());
        }
    }
}

TEST_CASE("every ordering family matches the union-find oracle") {
    const std::vector<EdgeTable> graphs{
        example10(),
        gen_path_union(std::vector<std::uint64_t>{3, 1, 4, 1, 5}, 0),
        gen_path_union(std::vector<std::uint64_t>{10, 10, 10}, 77),
        gen_erdos_renyi(80, 0.03, 11),
        gen_rmat(6, 200, {}, 13),
        gen_grid(10, 10, 0.4, 15),
    };
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Labeling oracle = union_find_components(graphs[i]);
        for (const OrderingFamily family :
             {OrderingFamily::min_id, OrderingFamily::random_keys, OrderingFamily::affine,
              OrderingFamily::keyed_permutation}) {
            const EngineResult result =
                run_lean(graphs[i], config(family, Variant::lean, 21, 4096));
            CAPTURE(i);
            CAPTURE(static_cast<int>(family));
            REQUIRE(partitions_equal(result.labeling, oracle));
            // Composed bijections keep component labels globally unique.
            REQUIRE(result.labeling.distinct_label_count() == oracle.distinct_label_count());
        }
    }
}

TEST_CASE("degenerate inputs") {
    const EngineConfig cfg = config(OrderingFamily::affine, Variant::lean, 9);
    CHECK(run(EdgeTable{}, cfg).labeling.empty());

    const EngineResult loop = run(EdgeTable({{5, 5}}), cfg);
    CHECK(loop.labeling.size() == 1);
    CHECK(loop.labeling.entries()[0].first == 5);

    const EngineResult one_edge = run(EdgeTable({{8, 3}}), cfg);
    CHECK(one_edge.labeling.distinct_label_count() == 1);
    CHECK(one_edge.labeling.size() == 2);
}

TEST_CASE("identical configuration reproduces identical labelings") {
    const EdgeTable g = gen_rmat(7, 400, {}, 3);
    for (const OrderingFamily family :
         {OrderingFamily::random_keys, OrderingFamily::affine,
          OrderingFamily::keyed_permutation}) {
        const EngineConfig cfg = config(family, Variant::lean, 1234);
        CHECK(run(g, cfg).labeling == run(g, cfg).labeling);
    }
}

TEST_CASE("vertex identifiers may use the full 64-bit range") {
    const VertexId big = std::uint64_t{1} << 62;
    const EdgeTable g({{big, big + 1}, {big + 1, big + 2}, {5, 6}});
    const Labeling oracle = union_find_components(g);
    for (const OrderingFamily family :
         {OrderingFamily::affine, OrderingFamily::keyed_permutation,
          OrderingFamily::random_keys})
        CHECK(partitions_equal(run_lean(g, config(family, Variant::lean, 2)).labeling, oracle));
}

TEST_CASE("lean auxiliary tables stay within the input vertex count") {
    const EdgeTable g = gen_erdos_renyi(120, 0.03, 1);
    const EngineResult result = run_lean(g, config(OrderingFamily::affine, Variant::lean, 4));
    CHECK(result.trace.labeling_rows == result.trace.input_vertices);
    CHECK(result.trace.peak_representative_rows <= result.trace.input_vertices);
    check_trace_invariants(result.trace);
}

TEST_CASE("trace export lists one line per round plus totals") {
    const EngineResult result =
        run_lean(example10(), config(OrderingFamily::min_id, Variant::lean, 0));
    std::ostringstream out;
    result.trace.write_tsv(out);
    const std::string text = out.str();
    CHECK(text.find("# round\tvertices_before") == 0);
    CHECK(text.find("# peak_live_edge_rows\t") != std::string::npos);
    CHECK(text.find("# total_rows_written\t") != std::string::npos);
    // Two data lines for the two rounds.
    CHECK(std::count(text.begin(), text.end(), '\n') == 9);
}

}  // TEST_SUITE
