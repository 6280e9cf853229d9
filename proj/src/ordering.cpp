#include "randcc/ordering.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "randcc/errors.hpp"
#include "randcc/rng.hpp"

namespace randcc {

std::uint64_t feistel_permute(std::uint64_t seed, std::uint64_t x) {
    // Independent round keys from the seed.  A balanced Feistel network is a
    // bijection for any round function, so every seed yields a permutation.
    SplitMix64 gen(mix64(seed));
    std::uint32_t left = static_cast<std::uint32_t>(x >> 32);
    std::uint32_t right = static_cast<std::uint32_t>(x);
    for (int round = 0; round < 4; ++round) {
        const std::uint64_t key = gen.next();
        const std::uint32_t f = static_cast<std::uint32_t>(mix64(right ^ key));
        const std::uint32_t next_right = left ^ f;
        left = right;
        right = next_right;
    }
    return (static_cast<std::uint64_t>(left) << 32) | right;
}

OrderingMethod OrderingMethod::min_id() {
    OrderingMethod m;
    m.family_ = OrderingFamily::min_id;
    return m;
}

OrderingMethod OrderingMethod::affine(gf64::AffineKey key) {
    if (key.a == 0) throw invalid_key_error("affine key with a == 0 is not a bijection");
    OrderingMethod m;
    m.family_ = OrderingFamily::affine;
    m.key_ = key;
    return m;
}

OrderingMethod OrderingMethod::keyed_permutation(std::uint64_t seed) {
    OrderingMethod m;
    m.family_ = OrderingFamily::keyed_permutation;
    m.seed_ = seed;
    return m;
}

OrderingMethod OrderingMethod::random_keys(std::uint64_t seed,
                                           std::span<const VertexId> domain) {
    std::vector<VertexId> vertices(domain.begin(), domain.end());
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    // Draw one key per vertex; redraw any value already taken so the table is
    // injective by construction, not merely with high probability.
    SplitMix64 gen(seed);
    std::unordered_set<std::uint64_t> taken;
    taken.reserve(vertices.size() * 2);
    auto table = std::make_shared<KeyTable>();
    table->reserve(vertices.size());
    for (const VertexId v : vertices) {
        std::uint64_t key = gen.next();
        while (!taken.insert(key).second) key = gen.next();
        table->emplace_back(v, key);
    }

    OrderingMethod m;
    m.family_ = OrderingFamily::random_keys;
    m.table_ = std::move(table);
    return m;
}

std::uint64_t OrderingMethod::key_for(VertexId v) const {
    switch (family_) {
        case OrderingFamily::min_id:
            return v;
        case OrderingFamily::affine:
            return gf64::axb(key_, v);
        case OrderingFamily::keyed_permutation:
            return feistel_permute(seed_, v);
        case OrderingFamily::random_keys: {
            const auto it = std::lower_bound(
                table_->begin(), table_->end(), v,
                [](const auto& entry, VertexId x) { return entry.first < x; });
            if (it == table_->end() || it->first != v) throw missing_vertex_error(v);
            return it->second;
        }
    }
    throw std::logic_error("unreachable ordering family");
}

const gf64::AffineKey& OrderingMethod::affine_key() const {
    if (family_ != OrderingFamily::affine)
        throw std::logic_error("affine_key() called on a non-affine ordering");
    return key_;
}

std::uint64_t order_key(const OrderingMethod& method, VertexId v) {
    return method.key_for(v);
}

OrderingMethod make_round_ordering(OrderingFamily family, std::uint64_t seed,
                                   std::uint64_t round, std::span<const VertexId> domain) {
    switch (family) {
        case OrderingFamily::min_id:
            return OrderingMethod::min_id();
        case OrderingFamily::affine:
            return OrderingMethod::affine(gf64::sample_key(seed, round));
        case OrderingFamily::keyed_permutation:
            return OrderingMethod::keyed_permutation(derive_seed(seed, round));
        case OrderingFamily::random_keys:
            return OrderingMethod::random_keys(derive_seed(seed, round), domain);
    }
    throw std::logic_error("unreachable ordering family");
}

}  // namespace randcc
