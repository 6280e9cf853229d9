#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "randcc/engine.hpp"

namespace randcc {

// Arithmetic backend the emitted SQL assumes.
enum class SqlField {
    gf64_udf,       // calls a user-defined axb(A, x, B) over GF(2^64)
    prime_modulus,  // inlines mod(A * x + B, p) for a prime p
};

inline constexpr std::uint64_t kDefaultSqlPrime = 2305843009213693951ULL;  // 2^61 - 1

// Render the contraction loop as a commented SQL script against an edge table
// with columns (v, w).  The per-round key constants appear as the placeholders
// A and B; the surrounding comments say how to bind them.
std::string emit_sql(Variant variant, SqlField field, std::string_view table_name = "G",
                     std::uint64_t prime = kDefaultSqlPrime);

}  // namespace randcc
