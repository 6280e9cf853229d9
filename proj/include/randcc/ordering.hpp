#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "randcc/edge_table.hpp"
#include "randcc/gf64.hpp"

namespace randcc {

// How a round draws its injective vertex ordering.
enum class OrderingFamily {
    min_id,             // identity: order by the vertex identifier itself
    random_keys,        // stored uniform keys, resampled until injective
    affine,             // h(x) = A*x + B over GF(2^64)
    keyed_permutation,  // seeded Feistel permutation of the 64-bit space
};

// Seeded permutation of the full 64-bit space: a 4-round balanced Feistel
// network over 32-bit halves whose round function is the splitmix64 mixer.
// Bijective for every seed.
std::uint64_t feistel_permute(std::uint64_t seed, std::uint64_t x);

// An injective map vertex -> 64-bit order key, fixed for one round.
// min_id / affine / keyed_permutation are total over the 64-bit space;
// random_keys is backed by a table over an explicit domain and throws
// missing_vertex_error for vertices outside it.
class OrderingMethod {
public:
    static OrderingMethod min_id();
    static OrderingMethod affine(gf64::AffineKey key);
    static OrderingMethod keyed_permutation(std::uint64_t seed);

    // Draws one key per domain vertex; collisions are rejected and redrawn, so
    // the stored table is exactly injective.  The domain is deduplicated.
    static OrderingMethod random_keys(std::uint64_t seed, std::span<const VertexId> domain);

    std::uint64_t key_for(VertexId v) const;

    OrderingFamily family() const noexcept { return family_; }

    // Key of the affine bijection; only valid for the affine family.
    const gf64::AffineKey& affine_key() const;

private:
    OrderingMethod() = default;

    using KeyTable = std::vector<std::pair<VertexId, std::uint64_t>>;  // sorted by vertex

    OrderingFamily family_ = OrderingFamily::min_id;
    gf64::AffineKey key_{};                    // affine
    std::uint64_t seed_ = 0;                   // keyed_permutation
    std::shared_ptr<const KeyTable> table_;    // random_keys
};

// Convenience free function mirroring OrderingMethod::key_for.
std::uint64_t order_key(const OrderingMethod& method, VertexId v);

// Instantiate the ordering a contraction round uses: round-specific key
// material is derived from (seed, round), and random_keys draws its table
// over the supplied domain.  The domain is ignored by the other families.
OrderingMethod make_round_ordering(OrderingFamily family, std::uint64_t seed,
                                   std::uint64_t round, std::span<const VertexId> domain);

}  // namespace randcc
