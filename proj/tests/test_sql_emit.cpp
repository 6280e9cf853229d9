#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "randcc/sql_emit.hpp"

using namespace randcc;

namespace {

std::string read_golden(const char* name) {
    std::ifstream in(std::string(RANDCC_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file: " << name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool contains(const std::string& text, std::string_view needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("sql_emit") {

TEST_CASE("cumulative-variant script carries the join skeleton") {
    const std::string sql = emit_sql(Variant::lean, SqlField::gf64_udf);
    CHECK(contains(sql, "least(axb(A, v, B), min(axb(A, w, B)))"));
    CHECK(contains(sql, "V.r != W.r"));
    CHECK(contains(sql, "left outer join"));
    CHECK(contains(sql, "coalesce(R.r, axb(A, L.r, B))"));
    CHECK(contains(sql, "group by"));
    CHECK(contains(sql, "select distinct"));
}

TEST_CASE("stacked-variant script folds keys back to front") {
    const std::string sql = emit_sql(Variant::fast, SqlField::gf64_udf);
    CHECK(contains(sql, "least(axb(A, v, B), min(axb(A, w, B)))"));
    CHECK(contains(sql, "V.r != W.r"));
    CHECK(contains(sql, "(A,B) <- (A*alpha, A*beta+B)"));
    CHECK(contains(sql, "left outer join"));
    // The stacked variant renames per-round tables instead of rewriting one.
    CHECK(contains(sql, "rename"));
    CHECK_FALSE(contains(sql, "coalesce(R.r, axb(A, L.r, B))"));
}

TEST_CASE("prime-field scripts inline the modular map") {
    const std::string sql = emit_sql(Variant::lean, SqlField::prime_modulus);
    CHECK(contains(sql, "mod(A * v + B, 2305843009213693951)"));
    CHECK(contains(sql, "mod(A * w + B, 2305843009213693951)"));
    CHECK_FALSE(contains(sql, "axb("));

    const std::string other = emit_sql(Variant::fast, SqlField::prime_modulus, "G", 127);
    CHECK(contains(other, "mod(A * v + B, 127)"));
    CHECK_FALSE(contains(other, "2305843009213693951"));
}

TEST_CASE("the source table name is configurable") {
    const std::string sql = emit_sql(Variant::lean, SqlField::gf64_udf, "edges_2026");
    CHECK(contains(sql, "edges_2026"));
    CHECK_FALSE(contains(emit_sql(Variant::lean, SqlField::gf64_udf, "edges_2026"), "from G"));
}

TEST_CASE("emission is deterministic") {
    CHECK(emit_sql(Variant::lean, SqlField::gf64_udf) == emit_sql(Variant::lean, SqlField::gf64_udf));
    CHECK(emit_sql(Variant::fast, SqlField::prime_modulus) !=
          emit_sql(Variant::lean, SqlField::prime_modulus));
}

TEST_CASE("scripts match their frozen goldens byte for byte") {
    CHECK(emit_sql(Variant::lean, SqlField::gf64_udf) == read_golden("lean_gf64.sql"));
    CHECK(emit_sql(Variant::fast, SqlField::gf64_udf) == read_golden("fast_gf64.sql"));
    CHECK(emit_sql(Variant::lean, SqlField::prime_modulus) == read_golden("lean_prime.sql"));
    CHECK(emit_sql(Variant::fast, SqlField::prime_modulus) == read_golden("fast_prime.sql"));
}

}  // TEST_SUITE
