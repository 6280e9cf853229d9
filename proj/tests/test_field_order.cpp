#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "randcc/errors.hpp"
#include "randcc/gf64.hpp"
#include "randcc/ordering.hpp"
#include "randcc/rng.hpp"

using namespace randcc;

namespace {

// Independent inverse oracle: extended Euclid over GF(2)[x], entirely separate
// from the Fermat-exponentiation path in the library.
using Poly = unsigned __int128;

constexpr Poly kModulus = (Poly{1} << 64) | gf64::kReductionLow;

int poly_degree(Poly p) {
    int d = -1;
    while (p != 0) {
        p >>= 1;
        ++d;
    }
    return d;
}

// Carry-less product (no reduction); operands small enough to fit 128 bits.
Poly poly_mul(Poly a, Poly b) {
    Poly acc = 0;
    while (b != 0) {
        if (b & 1) acc ^= a;
        a <<= 1;
        b >>= 1;
    }
    return acc;
}

// Quotient and remainder of polynomial division.
std::pair<Poly, Poly> poly_divmod(Poly num, Poly den) {
    Poly quot = 0;
    const int dd = poly_degree(den);
    for (int dn = poly_degree(num); dn >= dd; dn = poly_degree(num)) {
        const int shift = dn - dd;
        num ^= den << shift;
        quot |= Poly{1} << shift;
    }
    return {quot, num};
}

std::uint64_t euclid_inverse(std::uint64_t a) {
    // Invariants: r0 = s0*a (mod m), r1 = s1*a (mod m).
    Poly r0 = kModulus;
    Poly r1 = a;
    Poly s0 = 0;
    Poly s1 = 1;
    while (r1 != 0) {
        const auto [q, r] = poly_divmod(r0, r1);
        r0 = r1;
        r1 = r;
        const Poly s = s0 ^ poly_mul(q, s1);
        s0 = s1;
        s1 = s;
    }
    REQUIRE(r0 == 1);  // gcd with an irreducible modulus
    return static_cast<std::uint64_t>(s0);
}

}  // namespace

TEST_SUITE("field_order") {

TEST_CASE("multiplication matches the frozen reference values") {
    // One step past the high bit exercises the reduction fold.
    CHECK(gf64::mul_bitserial(0x2, std::uint64_t{1} << 63) == 0x1B);
    CHECK(gf64::mul(0x2, std::uint64_t{1} << 63) == 0x1B);
    CHECK(gf64::mul_windowed(0x2, std::uint64_t{1} << 63) == 0x1B);
    CHECK(gf64::mul(0x2, 0x3) == 0x6);
    CHECK(gf64::mul(0, 0xDEADBEEF) == 0);
    CHECK(gf64::mul(1, 0xDEADBEEF) == 0xDEADBEEF);
    CHECK(gf64::mul(0xFFFFFFFFFFFFFFFFULL, 0) == 0);
}

TEST_CASE("optimised multipliers agree with the bit-serial reference") {
    SplitMix64 gen(0x5EED);
    for (int i = 0; i < 20000; ++i) {
        const std::uint64_t a = gen.next();
        const std::uint64_t b = gen.next();
        const std::uint64_t expected = gf64::mul_bitserial(a, b);
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(gf64::mul(a, b) == expected);
        REQUIRE(gf64::mul_windowed(a, b) == expected);
    }
}

TEST_CASE("field axioms hold on random samples") {
    SplitMix64 gen(7);
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t a = gen.next();
        const std::uint64_t b = gen.next();
        const std::uint64_t c = gen.next();
        CHECK(gf64::mul(a, b) == gf64::mul(b, a));
        CHECK(gf64::mul(a, gf64::mul(b, c)) == gf64::mul(gf64::mul(a, b), c));
        CHECK(gf64::mul(a, b ^ c) == (gf64::mul(a, b) ^ gf64::mul(a, c)));
    }
}

TEST_CASE("inverse matches an extended-Euclid oracle and round-trips") {
    CHECK(gf64::inverse(1) == 1);
    CHECK(gf64::inverse(2) == 0x800000000000000DULL);
    CHECK(gf64::mul(2, 0x800000000000000DULL) == 1);
    CHECK_THROWS_AS(gf64::inverse(0), invalid_key_error);

    SplitMix64 gen(99);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t a = gen.next();
        if (a == 0) a = 1;
        const std::uint64_t inv = gf64::inverse(a);
        CAPTURE(a);
        REQUIRE(inv == euclid_inverse(a));
        REQUIRE(gf64::mul(a, inv) == 1);
    }
}

TEST_CASE("affine evaluation matches the frozen example and rejects a == 0") {
    CHECK(gf64::axb(gf64::AffineKey{0x2, 0x1}, std::uint64_t{1} << 63) == 0x1A);
    CHECK(gf64::axb(gf64::kIdentityKey, 0xABCD) == 0xABCD);
    CHECK_THROWS_AS(gf64::axb(gf64::AffineKey{0, 5}, 1), invalid_key_error);
}

TEST_CASE("key composition and inversion") {
    CHECK(gf64::compose_keys({0x2, 0x1}, {0x3, 0x0}) == gf64::AffineKey{0x6, 0x1});

    SplitMix64 gen(123);
    for (int i = 0; i < 2000; ++i) {
        const gf64::AffineKey outer = gf64::sample_key(11, i);
        const gf64::AffineKey inner = gf64::sample_key(13, i);
        const std::uint64_t x = gen.next();
        CHECK(gf64::axb(gf64::compose_keys(outer, inner), x) ==
              gf64::axb(outer, gf64::axb(inner, x)));

        const gf64::AffineKey inv = gf64::invert_key(outer);
        CHECK(gf64::axb(inv, gf64::axb(outer, x)) == x);
        CHECK(gf64::compose_keys(outer, inv) == gf64::kIdentityKey);
        CHECK(gf64::compose_keys(inv, outer) == gf64::kIdentityKey);
    }
    CHECK_THROWS_AS(gf64::invert_key(gf64::AffineKey{0, 1}), invalid_key_error);
}

TEST_CASE("sample_key is a pure function of seed and round") {
    const gf64::AffineKey k1 = gf64::sample_key(42, 1);
    CHECK(k1 == gf64::sample_key(42, 1));
    CHECK(k1.a != 0);
    CHECK_FALSE(k1 == gf64::sample_key(42, 2));
    CHECK_FALSE(k1 == gf64::sample_key(43, 1));
}

TEST_CASE("feistel permutation is injective and seed-dependent") {
    std::set<std::uint64_t> images;
    SplitMix64 gen(5);
    std::vector<std::uint64_t> inputs;
    for (int i = 0; i < 5000; ++i) inputs.push_back(gen.next());
    inputs.push_back(0);
    inputs.push_back(~std::uint64_t{0});
    for (const std::uint64_t x : inputs) {
        const std::uint64_t y = feistel_permute(77, x);
        CHECK(images.insert(y).second);  // no collisions on distinct inputs
        CHECK(y == feistel_permute(77, x));
    }
    CHECK(feistel_permute(1, 0x1234) != feistel_permute(2, 0x1234));
}

TEST_CASE("ordering families evaluate keys as documented") {
    const OrderingMethod ident = OrderingMethod::min_id();
    CHECK(ident.key_for(17) == 17);
    CHECK(order_key(ident, 0) == 0);

    const gf64::AffineKey key{0x2, 0x1};
    const OrderingMethod aff = OrderingMethod::affine(key);
    CHECK(aff.key_for(std::uint64_t{1} << 63) == 0x1A);
    CHECK(aff.affine_key() == key);
    CHECK_THROWS_AS(OrderingMethod::affine({0, 3}), invalid_key_error);
    CHECK_THROWS_AS(ident.affine_key(), std::logic_error);

    const OrderingMethod keyed = OrderingMethod::keyed_permutation(9);
    CHECK(keyed.key_for(4) == feistel_permute(9, 4));
}

TEST_CASE("stored random keys are injective and reject unknown vertices") {
    const std::vector<VertexId> domain{5, 1, 9, 1, 5, 200};  // duplicates collapse
    const OrderingMethod m = OrderingMethod::random_keys(31, domain);

    std::set<std::uint64_t> keys;
    for (const VertexId v : {1, 5, 9, 200}) CHECK(keys.insert(m.key_for(v)).second);
    CHECK(keys.size() == 4);
    CHECK(m.key_for(9) == m.key_for(9));
    CHECK_THROWS_AS(m.key_for(2), missing_vertex_error);

    // Same seed, same domain: identical table.
    const OrderingMethod again = OrderingMethod::random_keys(31, domain);
    for (const VertexId v : {1, 5, 9, 200}) CHECK(again.key_for(v) == m.key_for(v));
}

TEST_CASE("per-round orderings derive from seed and round deterministically") {
    const std::vector<VertexId> domain{1, 2, 3};
    for (const OrderingFamily family :
         {OrderingFamily::min_id, OrderingFamily::random_keys, OrderingFamily::affine,
          OrderingFamily::keyed_permutation}) {
        const OrderingMethod a = make_round_ordering(family, 42, 3, domain);
        const OrderingMethod b = make_round_ordering(family, 42, 3, domain);
        for (const VertexId v : domain) CHECK(a.key_for(v) == b.key_for(v));
        CHECK(a.family() == family);
    }
    // Distinct rounds draw distinct affine keys.
    const OrderingMethod r1 = make_round_ordering(OrderingFamily::affine, 42, 1, {});
    const OrderingMethod r2 = make_round_ordering(OrderingFamily::affine, 42, 2, {});
    CHECK_FALSE(r1.affine_key() == r2.affine_key());
}

}  // TEST_SUITE
