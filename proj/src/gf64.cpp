#include "randcc/gf64.hpp"

#include "randcc/rng.hpp"

#if defined(__PCLMUL__)
#include <immintrin.h>
#endif

namespace randcc::gf64 {

namespace {

// Reduce the 128-bit carry-less product (hi, lo) modulo x^64 + x^4 + x^3 + x + 1.
// Folding hi once leaves at most 4 overflow bits, so a second, cheap fold of
// those bits finishes the job.
std::uint64_t reduce128(std::uint64_t hi, std::uint64_t lo) {
    // hi * x^64 == hi * (x^4 + x^3 + x + 1)
    std::uint64_t mid = hi ^ (hi >> 60) ^ (hi >> 61) ^ (hi >> 63);
    lo ^= mid ^ (mid << 1) ^ (mid << 3) ^ (mid << 4);
    return lo;
}

}  // namespace

std::uint64_t mul_bitserial(std::uint64_t a, std::uint64_t b) {
    std::uint64_t acc = 0;
    while (b != 0) {
        if (b & 1) acc ^= a;
        b >>= 1;
        const bool carry = (a >> 63) & 1;
        a <<= 1;
        if (carry) a ^= kReductionLow;
    }
    return acc;
}

std::uint64_t mul_windowed(std::uint64_t a, std::uint64_t b) {
    // Precompute a * u for all 4-bit polynomials u, tracking the high words, and
    // consume b four bits per step.
    std::uint64_t tab_lo[16];
    std::uint64_t tab_hi[16];
    tab_lo[0] = 0;
    tab_hi[0] = 0;
    tab_lo[1] = a;
    tab_hi[1] = 0;
    for (int i = 2; i < 16; i += 2) {
        tab_lo[i] = tab_lo[i / 2] << 1;
        tab_hi[i] = (tab_hi[i / 2] << 1) | (tab_lo[i / 2] >> 63);
        tab_lo[i + 1] = tab_lo[i] ^ a;
        tab_hi[i + 1] = tab_hi[i];
    }
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    for (int shift = 60; shift >= 0; shift -= 4) {
        if (shift != 60) {
            hi = (hi << 4) | (lo >> 60);
            lo <<= 4;
        }
        const unsigned nib = static_cast<unsigned>((b >> shift) & 0xF);
        lo ^= tab_lo[nib];
        hi ^= tab_hi[nib];
    }
    return reduce128(hi, lo);
}

#if defined(__PCLMUL__)

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
    const __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
    const __m128i prod = _mm_clmulepi64_si128(va, vb, 0x00);
    const std::uint64_t lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(prod));
    const std::uint64_t hi = static_cast<std::uint64_t>(
        _mm_cvtsi128_si64(_mm_unpackhi_epi64(prod, prod)));
    return reduce128(hi, lo);
}

bool mul_uses_clmul() noexcept { return true; }

#else

std::uint64_t mul(std::uint64_t a, std::uint64_t b) { return mul_windowed(a, b); }

bool mul_uses_clmul() noexcept { return false; }

#endif

std::uint64_t inverse(std::uint64_t a) {
    if (a == 0) throw invalid_key_error("zero has no multiplicative inverse");
    // Fermat: a^(2^64 - 2) = a^-1 in a field of order 2^64.
    std::uint64_t result = 1;
    std::uint64_t base = a;
    std::uint64_t exponent = ~std::uint64_t{1};  // 2^64 - 2
    while (exponent != 0) {
        if (exponent & 1) result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1;
    }
    return result;
}

std::uint64_t axb(const AffineKey& key, std::uint64_t x) {
    if (key.a == 0) throw invalid_key_error("affine key with a == 0 is not a bijection");
    return mul(key.a, x) ^ key.b;
}

AffineKey invert_key(const AffineKey& key) {
    if (key.a == 0) throw invalid_key_error("affine key with a == 0 is not a bijection");
    const std::uint64_t a_inv = inverse(key.a);
    return AffineKey{a_inv, mul(a_inv, key.b)};
}

AffineKey compose_keys(const AffineKey& outer, const AffineKey& inner) {
    if (outer.a == 0 || inner.a == 0)
        throw invalid_key_error("affine key with a == 0 is not a bijection");
    return AffineKey{mul(outer.a, inner.a), mul(outer.a, inner.b) ^ outer.b};
}

AffineKey sample_key(std::uint64_t seed, std::uint64_t round) {
    SplitMix64 gen(derive_seed(seed, round));
    std::uint64_t a = gen.next();
    while (a == 0) a = gen.next();
    return AffineKey{a, gen.next()};
}

}  // namespace randcc::gf64
