#include "randcc/kernels.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#include <parallel/algorithm>
#endif

namespace randcc::kernels {

namespace {

// Binary search in a representative table sorted by key.
const KV* find_entry(std::span<const KV> table, std::uint64_t key) {
    const auto it = std::lower_bound(
        table.begin(), table.end(), key,
        [](const KV& entry, std::uint64_t k) { return entry.first < k; });
    if (it == table.end() || it->first != key) return nullptr;
    return &*it;
}

std::uint64_t lookup_required(std::span<const KV> table, std::uint64_t key) {
    const KV* entry = find_entry(table, key);
    if (entry == nullptr)
        throw std::logic_error("representative table is missing vertex " + std::to_string(key));
    return entry->second;
}

#if defined(_OPENMP)

// Split [0, n) into per-thread ranges whose starts are aligned to group
// boundaries of the sorted edge rows (no group straddles two ranges).
std::vector<std::size_t> group_aligned_cuts(std::span<const Edge> rows, std::size_t pieces) {
    std::vector<std::size_t> cuts;
    cuts.push_back(0);
    for (std::size_t p = 1; p < pieces; ++p) {
        std::size_t at = rows.size() * p / pieces;
        while (at > 0 && at < rows.size() && rows[at].v == rows[at - 1].v) ++at;
        if (at > cuts.back() && at < rows.size()) cuts.push_back(at);
    }
    cuts.push_back(rows.size());
    return cuts;
}

// Exceptions must not unwind out of a parallel region; remember the first one
// and rethrow it after the join.
class ExceptionCollector {
public:
    template <typename F>
    void run(F&& body) noexcept {
        try {
            body();
        } catch (...) {
#pragma omp critical(randcc_kernel_exception)
            if (!first_) first_ = std::current_exception();
        }
    }

    void rethrow_if_any() const {
        if (first_) std::rethrow_exception(first_);
    }

private:
    std::exception_ptr first_ = nullptr;
};

#endif  // _OPENMP

}  // namespace

namespace serial {

void sort_edges(std::vector<Edge>& rows) { std::sort(rows.begin(), rows.end()); }

void sort_unique(std::vector<Edge>& rows) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

std::vector<VertexId> group_keys(std::span<const Edge> sorted_rows) {
    std::vector<VertexId> keys;
    for (std::size_t i = 0; i < sorted_rows.size(); ++i)
        if (i == 0 || sorted_rows[i].v != sorted_rows[i - 1].v)
            keys.push_back(sorted_rows[i].v);
    return keys;
}

std::vector<KV> group_min(std::span<const Edge> sorted_rows, const OrderingMethod& order) {
    std::vector<KV> reps;
    std::size_t i = 0;
    while (i < sorted_rows.size()) {
        const VertexId v = sorted_rows[i].v;
        std::uint64_t best = order.key_for(v);
        for (; i < sorted_rows.size() && sorted_rows[i].v == v; ++i)
            best = std::min(best, order.key_for(sorted_rows[i].w));
        reps.emplace_back(v, best);
    }
    return reps;
}

std::vector<Edge> relabel_edges(std::span<const Edge> rows, std::span<const KV> rep_sorted) {
    std::vector<Edge> out;
    out.reserve(rows.size());
    for (const Edge& e : rows) {
        const std::uint64_t rv = lookup_required(rep_sorted, e.v);
        const std::uint64_t rw = lookup_required(rep_sorted, e.w);
        if (rv != rw) out.push_back(Edge{rv, rw});
    }
    return out;
}

std::vector<KV> compose_labels(std::span<const KV> labels, std::span<const KV> rep_sorted,
                               const OrderingMethod& order) {
    std::vector<KV> out;
    out.reserve(labels.size());
    for (const KV& entry : labels) {
        const KV* hit = find_entry(rep_sorted, entry.second);
        out.emplace_back(entry.first,
                         hit != nullptr ? hit->second : order.key_for(entry.second));
    }
    return out;
}

}  // namespace serial

#if defined(_OPENMP)

void sort_edges(std::vector<Edge>& rows) { __gnu_parallel::sort(rows.begin(), rows.end()); }

void sort_unique(std::vector<Edge>& rows) {
    __gnu_parallel::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

std::vector<VertexId> group_keys(std::span<const Edge> sorted_rows) {
    const std::vector<std::size_t> cuts =
        group_aligned_cuts(sorted_rows, static_cast<std::size_t>(omp_get_max_threads()));
    const std::size_t pieces = cuts.size() - 1;
    std::vector<std::vector<VertexId>> parts(pieces);

#pragma omp parallel for schedule(static)
    for (std::size_t p = 0; p < pieces; ++p) {
        std::vector<VertexId>& local = parts[p];
        for (std::size_t i = cuts[p]; i < cuts[p + 1]; ++i)
            if (i == cuts[p] || sorted_rows[i].v != sorted_rows[i - 1].v)
                local.push_back(sorted_rows[i].v);
    }

    std::vector<VertexId> keys;
    for (const auto& part : parts) keys.insert(keys.end(), part.begin(), part.end());
    return keys;
}

std::vector<KV> group_min(std::span<const Edge> sorted_rows, const OrderingMethod& order) {
    const std::vector<std::size_t> cuts =
        group_aligned_cuts(sorted_rows, static_cast<std::size_t>(omp_get_max_threads()));
    const std::size_t pieces = cuts.size() - 1;
    std::vector<std::vector<KV>> parts(pieces);
    ExceptionCollector guard;

#pragma omp parallel for schedule(static)
    for (std::size_t p = 0; p < pieces; ++p) {
        guard.run([&, p] {
            std::vector<KV>& local = parts[p];
            std::size_t i = cuts[p];
            while (i < cuts[p + 1]) {
                const VertexId v = sorted_rows[i].v;
                std::uint64_t best = order.key_for(v);
                for (; i < cuts[p + 1] && sorted_rows[i].v == v; ++i)
                    best = std::min(best, order.key_for(sorted_rows[i].w));
                local.emplace_back(v, best);
            }
        });
    }
    guard.rethrow_if_any();

    std::vector<KV> reps;
    for (const auto& part : parts) reps.insert(reps.end(), part.begin(), part.end());
    return reps;
}

std::vector<Edge> relabel_edges(std::span<const Edge> rows, std::span<const KV> rep_sorted) {
    // Transform in place first (order-preserving), then compact out the loops.
    std::vector<Edge> mapped(rows.size());
    ExceptionCollector guard;

#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < rows.size(); ++i) {
        guard.run([&, i] {
            mapped[i].v = lookup_required(rep_sorted, rows[i].v);
            mapped[i].w = lookup_required(rep_sorted, rows[i].w);
        });
    }
    guard.rethrow_if_any();

    mapped.erase(std::remove_if(mapped.begin(), mapped.end(),
                                [](const Edge& e) { return e.v == e.w; }),
                 mapped.end());
    return mapped;
}

std::vector<KV> compose_labels(std::span<const KV> labels, std::span<const KV> rep_sorted,
                               const OrderingMethod& order) {
    std::vector<KV> out(labels.size());
    ExceptionCollector guard;

#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < labels.size(); ++i) {
        guard.run([&, i] {
            const KV* hit = find_entry(rep_sorted, labels[i].second);
            out[i] = KV(labels[i].first,
                        hit != nullptr ? hit->second : order.key_for(labels[i].second));
        });
    }
    guard.rethrow_if_any();
    return out;
}

#else  // no OpenMP: the public kernels are the serial ones

void sort_edges(std::vector<Edge>& rows) { serial::sort_edges(rows); }
void sort_unique(std::vector<Edge>& rows) { serial::sort_unique(rows); }

std::vector<VertexId> group_keys(std::span<const Edge> sorted_rows) {
    return serial::group_keys(sorted_rows);
}

std::vector<KV> group_min(std::span<const Edge> sorted_rows, const OrderingMethod& order) {
    return serial::group_min(sorted_rows, order);
}

std::vector<Edge> relabel_edges(std::span<const Edge> rows, std::span<const KV> rep_sorted) {
    return serial::relabel_edges(rows, rep_sorted);
}

std::vector<KV> compose_labels(std::span<const KV> labels, std::span<const KV> rep_sorted,
                               const OrderingMethod& order) {
    return serial::compose_labels(labels, rep_sorted, order);
}

#endif

}  // namespace randcc::kernels
