#pragma once

#include <cstdint>

#include "randcc/errors.hpp"

namespace randcc::gf64 {

// Arithmetic in GF(2^64): carry-less polynomial multiplication reduced modulo
// x^64 + x^4 + x^3 + x + 1.  Only the low word of the modulus is stored; the
// x^64 term is implicit.
inline constexpr std::uint64_t kReductionLow = 0x1B;

// Product in GF(2^64).  Dispatches to the carry-less-multiply instruction when
// the build enables it, otherwise to the windowed portable routine.
std::uint64_t mul(std::uint64_t a, std::uint64_t b);

// Portable 4-bit-window multiplier.  Always compiled; used as the fallback for
// mul() and directly by the benchmark target.
std::uint64_t mul_windowed(std::uint64_t a, std::uint64_t b);

// Bit-serial shift-and-reduce reference multiplier.  Slow but obviously
// correct; the optimised paths are tested against it.
std::uint64_t mul_bitserial(std::uint64_t a, std::uint64_t b);

// True when mul() uses the hardware carry-less-multiply path.
bool mul_uses_clmul() noexcept;

// Multiplicative inverse of a != 0, computed as a^(2^64 - 2).
// Throws invalid_key_error for a == 0.
std::uint64_t inverse(std::uint64_t a);

// Key of the affine bijection h(x) = a*x + b over GF(2^64).  Bijective exactly
// when a != 0.
struct AffineKey {
    std::uint64_t a = 1;
    std::uint64_t b = 0;

    friend bool operator==(const AffineKey&, const AffineKey&) = default;
};

inline constexpr AffineKey kIdentityKey{1, 0};

// Evaluate h(x) = key.a * x + key.b.  Throws invalid_key_error if key.a == 0.
std::uint64_t axb(const AffineKey& key, std::uint64_t x);

// Key of the inverse bijection: h^-1(y) = a^-1 * y + a^-1 * b.
AffineKey invert_key(const AffineKey& key);

// Key of the composition outer . inner, i.e. x -> outer(inner(x)).
AffineKey compose_keys(const AffineKey& outer, const AffineKey& inner);

// Draw a uniformly random valid key (a != 0, b unrestricted) for the given
// round.  Pure function of (seed, round).
AffineKey sample_key(std::uint64_t seed, std::uint64_t round);

}  // namespace randcc::gf64
