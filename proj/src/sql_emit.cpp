#include "randcc/sql_emit.hpp"

#include <string>

namespace randcc {

namespace {

std::string axb_expr(SqlField field, const std::string& x, std::uint64_t prime) {
    if (field == SqlField::gf64_udf) return "axb(A, " + x + ", B)";
    return "mod(A * " + x + " + B, " + std::to_string(prime) + ")";
}

std::string arithmetic_banner(SqlField field, std::uint64_t prime) {
    if (field == SqlField::gf64_udf)
        return
            "-- Arithmetic: axb(A, x, B) computes A*x + B in GF(2^64) with reduction\n"
            "-- polynomial x^64 + x^4 + x^3 + x + 1.  Register axb as a UDF before\n"
            "-- running; any A != 0 makes the map a bijection of the 64-bit space.\n";
    return
        "-- Arithmetic: A*x + B modulo the prime " + std::to_string(prime) + ".\n"
        "-- Any A in 1..p-1 makes the map a bijection of 0..p-1; vertex\n"
        "-- identifiers must stay below the prime.\n";
}

std::string round_body(SqlField field, const std::string& table, std::uint64_t prime) {
    const std::string hv = axb_expr(field, "v", prime);
    const std::string hw = axb_expr(field, "w", prime);
    std::string s;
    s += "-- Round body.  Draw a fresh key pair (A != 0), substitute the literals for\n";
    s += "-- A and B below, then execute the three statements.\n";
    s += "\n";
    s += "-- Representative of every vertex: the minimum of the keyed order over its\n";
    s += "-- closed neighbourhood.\n";
    s += "create table R as\n";
    s += "select v, least(" + hv + ", min(" + hw + ")) as r\n";
    s += "from E\n";
    s += "group by v;\n";
    s += "\n";
    s += "-- Contracted edge table: relabel both endpoints, drop loops, deduplicate.\n";
    s += "create table T as\n";
    s += "select distinct V.r as v, W.r as w\n";
    s += "from E, R as V, R as W\n";
    s += "where E.v = V.v and E.w = W.v and V.r != W.r;\n";
    (void)table;
    return s;
}

std::string setup(const std::string& table) {
    std::string s;
    s += "-- One-time setup: close the input under orientation reversal.\n";
    s += "create table E as\n";
    s += "select v, w from " + table + "\n";
    s += "union\n";
    s += "select w as v, v as w from " + table + ";\n";
    return s;
}

const char* kAdvance =
    "-- Advance to the next round.\n"
    "drop table E;\n"
    "alter table T rename to E;\n"
    "drop table R;\n";

}  // namespace

std::string emit_sql(Variant variant, SqlField field, std::string_view table_name,
                     std::uint64_t prime) {
    const std::string table(table_name);
    const std::string hl = axb_expr(field, "L.r", prime);
    const std::string hp = axb_expr(field, "P.r", prime);

    std::string s;
    if (variant == Variant::lean) {
        s += "-- Connected components by randomised contraction: cumulative-table\n";
        s += "-- variant.  One label table L is rewritten every round, so live space\n";
        s += "-- stays linear in the input deterministically.\n";
        s += arithmetic_banner(field, prime);
        s += "--\n";
        s += "-- Input: edge table " + table + "(v, w).  Repeat the round body until E is\n";
        s += "-- empty; L then maps every vertex to its component label.\n";
        s += "\n";
        s += setup(table);
        s += "\n";
        s += round_body(field, table, prime);
        s += "\n";
        s += "-- Fold the round into the cumulative table.  In the first round L does\n";
        s += "-- not exist yet: run the seed statement instead of the join.\n";
        s += "--   create table L as select v, r from R;\n";
        s += "create table L_next as\n";
        s += "select L.v, coalesce(R.r, " + hl + ") as r\n";
        s += "from L left outer join R on L.r = R.v;\n";
        s += "drop table L;\n";
        s += "alter table L_next rename to L;\n";
        s += "\n";
        s += kAdvance;
    } else {
        s += "-- Connected components by randomised contraction: stacked variant.\n";
        s += "-- Every round keeps its representative table R_i and key (A_i, B_i);\n";
        s += "-- a single back-to-front fold after the loop replaces the per-round\n";
        s += "-- rewrite of a cumulative table.\n";
        s += arithmetic_banner(field, prime);
        s += "--\n";
        s += "-- Input: edge table " + table + "(v, w).  Repeat the round body until E is\n";
        s += "-- empty, renaming R to R_1, R_2, ... as you go.\n";
        s += "\n";
        s += setup(table);
        s += "\n";
        s += round_body(field, table, prime);
        s += "\n";
        s += "-- Keep this round's table and key.\n";
        s += "alter table R rename to R_i;  -- i = current round number\n";
        s += "\n";
        s += "-- Advance to the next round.\n";
        s += "drop table E;\n";
        s += "alter table T rename to E;\n";
        s += "\n";
        s += "-- After the loop (k rounds ran): fold the stack back to front.\n";
        s += "-- S := R_k; (A,B) := (1, 0); then for i = k-1 down to 1, pop\n";
        s += "-- (alpha, beta), the key of round i+1, advance the accumulator\n";
        s += "--   (A,B) <- (A*alpha, A*beta+B)\n";
        s += "-- and merge.  The key of round 1 is never popped.  With k = 1 the fold\n";
        s += "-- body never runs and S = R_1 already holds the labels.\n";
        s += "create table M as\n";
        s += "select P.v, coalesce(S.r, " + hp + ") as r\n";
        s += "from R_i as P left outer join S on P.r = S.v;\n";
        s += "drop table S;\n";
        s += "alter table M rename to S;\n";
        s += "drop table R_i;\n";
        s += "\n";
        s += "-- S now maps every vertex to its component label.\n";
    }
    return s;
}

}  // namespace randcc
