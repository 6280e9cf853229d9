#include "randcc/baselines.hpp"

#include <algorithm>

#include "randcc/kernels.hpp"

namespace randcc {

DisjointSetForest::DisjointSetForest(std::size_t n)
    : parent_(n), rank_(n, 0), set_count_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
}

std::size_t DisjointSetForest::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];  // path halving
        x = parent_[x];
    }
    return x;
}

bool DisjointSetForest::unite(std::size_t x, std::size_t y) {
    std::size_t rx = find(x);
    std::size_t ry = find(y);
    if (rx == ry) return false;
    if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    --set_count_;
    return true;
}

Labeling union_find_components(const EdgeTable& table) {
    const std::vector<VertexId> vertices = table.distinct_vertices();
    DisjointSetForest forest(vertices.size());

    auto index_of = [&](VertexId v) {
        return static_cast<std::size_t>(
            std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    };
    for (const Edge& e : table.rows())
        if (e.v != e.w) forest.unite(index_of(e.v), index_of(e.w));

    // Vertices are scanned in ascending order, so the first vertex reaching a
    // root is the minimum of its component.
    std::vector<VertexId> root_label(vertices.size());
    std::vector<bool> seen(vertices.size(), false);
    std::vector<Labeling::Entry> entries;
    entries.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::size_t root = forest.find(i);
        if (!seen[root]) {
            seen[root] = true;
            root_label[root] = vertices[i];
        }
        entries.emplace_back(vertices[i], root_label[root]);
    }
    return Labeling(std::move(entries));
}

std::pair<Labeling, std::size_t> naive_min_propagation(const EdgeTable& table,
                                                       std::size_t max_steps) {
    // Same table discipline as the contraction rounds: sorted symmetric rows,
    // one grouped sweep per step, label lookups by binary search over a dense
    // index of the vertex set.
    const EdgeTable sym = symmetrize(table);
    std::span<const Edge> rows = sym.rows();
    const std::vector<VertexId> vertices = sym.distinct_vertices();

    auto index_of = [&](VertexId v) {
        return static_cast<std::size_t>(
            std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    };

    std::vector<std::uint64_t> label(vertices.begin(), vertices.end());
    std::vector<std::uint64_t> next(label.size());

    std::size_t steps = 0;
    for (;;) {
        bool changed = false;
        std::size_t i = 0;
        std::size_t group = 0;
        while (i < rows.size()) {
            const VertexId v = rows[i].v;
            while (vertices[group] != v) ++group;  // rows and vertices are both ascending
            std::uint64_t best = label[group];
            for (; i < rows.size() && rows[i].v == v; ++i)
                best = std::min(best, label[index_of(rows[i].w)]);
            if (best != label[group]) changed = true;
            next[group] = best;
        }
        if (!changed) break;
        if (steps == max_steps) {
            std::vector<Labeling::Entry> partial;
            partial.reserve(vertices.size());
            for (std::size_t k = 0; k < vertices.size(); ++k)
                partial.emplace_back(vertices[k], label[k]);
            throw truncation_error(max_steps, Labeling(std::move(partial)));
        }
        label.swap(next);
        ++steps;
    }

    std::vector<Labeling::Entry> entries;
    entries.reserve(vertices.size());
    for (std::size_t k = 0; k < vertices.size(); ++k) entries.emplace_back(vertices[k], label[k]);
    return {Labeling(std::move(entries)), steps};
}

}  // namespace randcc
