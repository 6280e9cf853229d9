#include <fstream>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "randcc/baselines.hpp"
#include "randcc/generators.hpp"

using namespace randcc;

namespace {

EdgeTable example10() {
    std::ifstream in(RANDCC_TEST_DATA_DIR "/example10.edges");
    REQUIRE(in.good());
    return parse_edge_list(in);
}

}  // namespace

TEST_SUITE("baselines") {

TEST_CASE("disjoint set forest merges and counts") {
    DisjointSetForest dsf(6);
    CHECK(dsf.set_count() == 6);
    CHECK(dsf.unite(0, 1));
    CHECK(dsf.unite(1, 2));
    CHECK_FALSE(dsf.unite(0, 2));  // already together
    CHECK(dsf.set_count() == 4);
    CHECK(dsf.find(0) == dsf.find(2));
    CHECK(dsf.find(3) != dsf.find(0));
    CHECK(dsf.unite(3, 4));
    CHECK(dsf.unite(4, 5));
    CHECK(dsf.unite(0, 5));
    CHECK(dsf.set_count() == 1);
}

TEST_CASE("union-find labels components by their minimum member") {
    const Labeling l = union_find_components(example10());
    CHECK(l.size() == 10);
    CHECK(l.distinct_label_count() == 2);
    for (const VertexId v : {1, 3, 5, 6, 7, 8, 10}) CHECK(l.label_of(v) == 1);
    for (const VertexId v : {2, 4, 9}) CHECK(l.label_of(v) == 2);
}

TEST_CASE("union-find degenerate inputs") {
    CHECK(union_find_components(EdgeTable{}).empty());

    // A loop row contributes its vertex but no merge.
    const Labeling loops = union_find_components(EdgeTable({{4, 4}, {9, 9}}));
    CHECK(loops.size() == 2);
    CHECK(loops.distinct_label_count() == 2);
    CHECK(loops.label_of(4) == 4);
    CHECK(loops.label_of(9) == 9);
}

TEST_CASE("union-find again splits what a removed bridge joined") {
    const EdgeTable joined({{1, 2}, {2, 3}, {10, 11}, {3, 10}});
    CHECK(union_find_components(joined).distinct_label_count() == 1);
    const EdgeTable split({{1, 2}, {2, 3}, {10, 11}});
    const Labeling l = union_find_components(split);
    CHECK(l.distinct_label_count() == 2);
    CHECK(l.label_of(11) == 10);
}

TEST_CASE("min propagation agrees with union-find on random graphs") {
    const std::vector<EdgeTable> graphs{
        example10(),
        gen_erdos_renyi(70, 0.03, 2),
        gen_grid(9, 9, 0.45, 4),
        gen_rmat(6, 150, {}, 6),
        gen_path_union(std::vector<std::uint64_t>{4, 4, 4, 1}, 8),
    };
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        CAPTURE(i);
        const auto [labels, sweeps] = naive_min_propagation(graphs[i], 10000);
        CHECK(labels == union_find_components(graphs[i]));  // same labels, not just partition
        CHECK(sweeps <= 10000);
    }
}

TEST_CASE("sweep counts match the propagation distance") {
    // Star: every leaf adopts the centre's identifier in the first sweep.
    const auto [star, star_sweeps] = naive_min_propagation(EdgeTable({{1, 2}, {1, 3}, {1, 4}}), 10);
    CHECK(star.distinct_label_count() == 1);
    CHECK(star_sweeps == 1);

    // Sequential path: the minimum travels one hop per sweep.
    const auto [path, path_sweeps] =
        naive_min_propagation(gen_path(20, PathNumbering::sequential), 100);
    CHECK(path.distinct_label_count() == 1);
    CHECK(path_sweeps == 19);

    // Already-converged input: zero changing sweeps.
    const auto [still, still_sweeps] = naive_min_propagation(EdgeTable({{7, 7}}), 10);
    CHECK(still.size() == 1);
    CHECK(still_sweeps == 0);
}

TEST_CASE("exhausted sweep budget reports the partial labeling") {
    try {
        naive_min_propagation(gen_path(50, PathNumbering::sequential), 5);
        FAIL("expected truncation");
    } catch (const truncation_error& e) {
        CHECK(e.steps() == 5);
        CHECK(e.partial().size() == 50);
        // Five sweeps push the minimum five hops down the path.
        CHECK(e.partial().label_of(6) == 1);
        CHECK(e.partial().label_of(8) == 3);
        CHECK(e.partial().distinct_label_count() > 1);
    }
}

}  // TEST_SUITE
