#include "randcc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "randcc/rng.hpp"

namespace randcc {

namespace {

// Permutation of 0..n-1 by seeded Fisher-Yates.
std::vector<std::uint64_t> random_permutation(std::uint64_t n, std::uint64_t seed) {
    std::vector<std::uint64_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::uint64_t{0});
    SplitMix64 gen(seed);
    for (std::uint64_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[gen.next_below(i)]);
    return perm;
}

// Vertex identifiers along an "optimal" path: every third position holds a
// local minimum of the numbering, so one round of identity-ordered contraction
// collapses each triple onto its centre.  Positions kept after truncation are
// rank-compressed back to 1..n, which preserves the local-minimum pattern.
std::vector<std::uint64_t> optimal_path_ids(std::uint64_t n) {
    const std::uint64_t triples = (n + 2) / 3;
    std::vector<std::uint64_t> ids;
    ids.reserve(triples * 3);
    for (std::uint64_t t = 0; t < triples; ++t) {
        ids.push_back(triples + 2 * t + 1);
        ids.push_back(t + 1);
        ids.push_back(triples + 2 * t + 2);
    }
    ids.resize(n);

    std::vector<std::uint64_t> sorted(ids);
    std::sort(sorted.begin(), sorted.end());
    for (std::uint64_t& id : ids)
        id = static_cast<std::uint64_t>(
                 std::lower_bound(sorted.begin(), sorted.end(), id) - sorted.begin()) +
             1;
    return ids;
}

EdgeTable path_from_ids(const std::vector<std::uint64_t>& ids) {
    std::vector<Edge> rows;
    if (ids.size() == 1) {
        rows.push_back(Edge{ids[0], ids[0]});
    } else {
        rows.reserve(ids.size() - 1);
        for (std::size_t i = 0; i + 1 < ids.size(); ++i)
            rows.push_back(Edge{ids[i], ids[i + 1]});
    }
    return EdgeTable(std::move(rows));
}

}  // namespace

EdgeTable gen_path(std::uint64_t n, PathNumbering numbering, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("a path needs at least one vertex");
    std::vector<std::uint64_t> ids(n);
    switch (numbering) {
        case PathNumbering::sequential:
            std::iota(ids.begin(), ids.end(), std::uint64_t{1});
            break;
        case PathNumbering::optimal:
            ids = optimal_path_ids(n);
            break;
        case PathNumbering::shuffled: {
            const std::vector<std::uint64_t> perm = random_permutation(n, seed);
            for (std::uint64_t i = 0; i < n; ++i) ids[i] = perm[i] + 1;
            break;
        }
    }
    return path_from_ids(ids);
}

EdgeTable gen_path_union(std::span<const std::uint64_t> lengths, std::uint64_t seed) {
    std::vector<Edge> rows;
    std::uint64_t offset = 0;
    for (const std::uint64_t len : lengths) {
        if (len == 0) throw std::invalid_argument("a path needs at least one vertex");
        if (len == 1) {
            rows.push_back(Edge{offset + 1, offset + 1});
        } else {
            for (std::uint64_t i = 1; i < len; ++i)
                rows.push_back(Edge{offset + i, offset + i + 1});
        }
        offset += len;
    }
    EdgeTable table(std::move(rows));
    return seed != 0 ? shuffle_ids(table, seed) : table;
}

EdgeTable gen_rmat(std::uint32_t scale, std::uint64_t edges, const RmatParams& params,
                   std::uint64_t seed, bool shuffle) {
    if (scale == 0 || scale > 30)
        throw std::invalid_argument("scale must be between 1 and 30");
    if (params.a < 0 || params.b < 0 || params.c < 0 || params.d < 0)
        throw std::invalid_argument("quadrant probabilities must be non-negative");
    if (std::abs(params.a + params.b + params.c + params.d - 1.0) > 1e-9)
        throw std::invalid_argument("quadrant probabilities must sum to 1");

    SplitMix64 gen(derive_seed(seed, 0));
    const double ab = params.a + params.b;
    const double abc = ab + params.c;
    std::vector<Edge> rows;
    rows.reserve(edges);
    for (std::uint64_t e = 0; e < edges; ++e) {
        std::uint64_t u = 0;
        std::uint64_t v = 0;
        for (std::uint32_t level = 0; level < scale; ++level) {
            const double r = gen.next_unit();
            const std::uint64_t bit = std::uint64_t{1} << (scale - 1 - level);
            if (r < params.a) {
                // upper-left: neither bit set
            } else if (r < ab) {
                v |= bit;
            } else if (r < abc) {
                u |= bit;
            } else {
                u |= bit;
                v |= bit;
            }
        }
        rows.push_back(Edge{u + 1, v + 1});
    }
    EdgeTable table(std::move(rows));
    return shuffle ? shuffle_ids(table, derive_seed(seed, 1)) : table;
}

EdgeTable gen_grid(std::uint32_t width, std::uint32_t height, double keep_probability,
                   std::uint64_t seed) {
    if (width == 0 || height == 0) throw std::invalid_argument("grid sides must be positive");
    if (!(keep_probability >= 0.0 && keep_probability <= 1.0))
        throw std::invalid_argument("keep probability must lie in [0, 1]");

    const std::uint64_t pixels = static_cast<std::uint64_t>(width) * height;
    auto id_at = [&](std::uint64_t x, std::uint64_t y) { return y * width + x + 1; };

    SplitMix64 gen(derive_seed(seed, 0));
    std::vector<bool> touched(pixels, false);
    std::vector<Edge> rows;
    for (std::uint64_t y = 0; y < height; ++y) {
        for (std::uint64_t x = 0; x < width; ++x) {
            if (x + 1 < width && gen.next_unit() < keep_probability) {
                rows.push_back(Edge{id_at(x, y), id_at(x + 1, y)});
                touched[id_at(x, y) - 1] = true;
                touched[id_at(x + 1, y) - 1] = true;
            }
            if (y + 1 < height && gen.next_unit() < keep_probability) {
                rows.push_back(Edge{id_at(x, y), id_at(x, y + 1)});
                touched[id_at(x, y) - 1] = true;
                touched[id_at(x, y + 1) - 1] = true;
            }
        }
    }
    for (std::uint64_t p = 0; p < pixels; ++p)
        if (!touched[p]) rows.push_back(Edge{p + 1, p + 1});

    // Identifiers must not encode the lattice geometry.
    return shuffle_ids(EdgeTable(std::move(rows)), derive_seed(seed, 1));
}

EdgeTable gen_erdos_renyi(std::uint64_t n, double p, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("vertex count must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");

    std::vector<Edge> rows;
    std::vector<bool> touched(n, false);
    if (p >= 1.0) {
        for (std::uint64_t i = 1; i <= n; ++i)
            for (std::uint64_t j = i + 1; j <= n; ++j) rows.push_back(Edge{i, j});
        std::fill(touched.begin(), touched.end(), n > 1);
    } else if (p > 0.0) {
        // Skip-sampling over the flattened pair index: the gap to the next
        // kept pair is geometric with parameter p.
        std::vector<std::uint64_t> row_start(n);
        for (std::uint64_t i = 0; i < n; ++i)
            row_start[i] = i * n - i * (i + 1) / 2;
        const std::uint64_t total = n * (n - 1) / 2;
        const double log_keep = std::log(1.0 - p);

        SplitMix64 gen(derive_seed(seed, 0));
        std::uint64_t cursor = 0;
        while (cursor < total) {
            const double skip_f = std::floor(std::log(1.0 - gen.next_unit()) / log_keep);
            if (skip_f >= static_cast<double>(total - cursor)) break;
            cursor += static_cast<std::uint64_t>(skip_f);
            if (cursor >= total) break;
            const std::uint64_t i =
                static_cast<std::uint64_t>(
                    std::upper_bound(row_start.begin(), row_start.end(), cursor) -
                    row_start.begin()) -
                1;
            const std::uint64_t j = i + 1 + (cursor - row_start[i]);
            rows.push_back(Edge{i + 1, j + 1});
            touched[i] = true;
            touched[j] = true;
            ++cursor;
        }
    }
    for (std::uint64_t v = 0; v < n; ++v)
        if (!touched[v]) rows.push_back(Edge{v + 1, v + 1});
    return EdgeTable(std::move(rows));
}

EdgeTable gen_fig11() {
    // 5-cycle, three pendant leaves per cycle vertex: 20 vertices, 20 rows.
    std::vector<Edge> rows;
    for (std::uint64_t c = 1; c <= 5; ++c) {
        rows.push_back(Edge{c, c % 5 + 1});
        for (std::uint64_t leaf = 0; leaf < 3; ++leaf)
            rows.push_back(Edge{c, 5 + 3 * (c - 1) + leaf + 1});
    }
    return EdgeTable(std::move(rows));
}

Digraph gen_directed_cycle(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("cycle length must be positive");
    std::vector<Digraph::Arc> arcs;
    arcs.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph(n, std::move(arcs));
}

Digraph gen_random_digraph(std::uint32_t n, double p, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability must lie in [0, 1]");

    SplitMix64 gen(derive_seed(seed, 0));
    std::vector<Digraph::Arc> arcs;
    std::vector<bool> has_out(n, false);
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = 0; v < n; ++v) {
            if (u == v) continue;
            if (gen.next_unit() < p) {
                arcs.emplace_back(u, v);
                has_out[u] = true;
            }
        }
    }
    // Every vertex must retain a non-trivial out-neighbourhood.
    SplitMix64 patch(derive_seed(seed, 1));
    for (std::uint32_t u = 0; u < n; ++u) {
        if (has_out[u]) continue;
        std::uint32_t v = static_cast<std::uint32_t>(patch.next_below(n - 1));
        if (v >= u) ++v;
        arcs.emplace_back(u, v);
    }
    return Digraph(n, std::move(arcs));
}

EdgeTable shuffle_ids(const EdgeTable& table, std::uint64_t seed) {
    const std::vector<VertexId> ids = table.distinct_vertices();
    const std::vector<std::uint64_t> perm = random_permutation(ids.size(), seed);

    auto renamed = [&](VertexId v) {
        const std::size_t idx = static_cast<std::size_t>(
            std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
        return ids[perm[idx]];
    };
    std::vector<Edge> rows;
    rows.reserve(table.row_count());
    for (const Edge& e : table.rows()) rows.push_back(Edge{renamed(e.v), renamed(e.w)});
    return EdgeTable(std::move(rows), table.symmetric());
}

}  // namespace randcc
