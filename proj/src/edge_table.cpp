#include "randcc/edge_table.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "randcc/errors.hpp"
#include "randcc/kernels.hpp"

namespace randcc {

EdgeTable::EdgeTable(std::vector<Edge> rows, bool symmetric)
    : rows_(std::move(rows)), symmetric_(symmetric) {}

std::vector<VertexId> EdgeTable::distinct_vertices() const {
    std::vector<VertexId> ids;
    ids.reserve(rows_.size() * 2);
    for (const Edge& e : rows_) {
        ids.push_back(e.v);
        ids.push_back(e.w);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

std::size_t EdgeTable::distinct_vertex_count() const { return distinct_vertices().size(); }

bool EdgeTable::operator==(const EdgeTable& other) const {
    std::vector<Edge> a(rows_.begin(), rows_.end());
    std::vector<Edge> b(other.rows_.begin(), other.rows_.end());
    kernels::sort_unique(a);
    kernels::sort_unique(b);
    return a == b;
}

namespace {

bool blank_or_comment(std::string_view line) {
    const auto pos = line.find_first_not_of(" \t\r\f\v");
    return pos == std::string_view::npos || line[pos] == '#';
}

// Parse one unsigned 64-bit field starting at `pos`; advances `pos` past it.
std::uint64_t parse_field(std::string_view line, std::size_t& pos, std::size_t line_no) {
    pos = line.find_first_not_of(" \t\r\f\v", pos);
    if (pos == std::string_view::npos)
        throw parse_error(line_no, "expected two vertex identifiers");
    const char* begin = line.data() + pos;
    const char* end = line.data() + line.size();
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin)
        throw parse_error(line_no, "malformed vertex identifier");
    if (ptr != end && *ptr != ' ' && *ptr != '\t' && *ptr != '\r' && *ptr != '\f' && *ptr != '\v')
        throw parse_error(line_no, "malformed vertex identifier");
    pos = static_cast<std::size_t>(ptr - line.data());
    return value;
}

}  // namespace

EdgeTable parse_edge_list(std::istream& in) {
    std::vector<Edge> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        std::size_t pos = 0;
        Edge e;
        e.v = parse_field(line, pos, line_no);
        e.w = parse_field(line, pos, line_no);
        pos = line.find_first_not_of(" \t\r\f\v", pos);
        if (pos != std::string_view::npos)
            throw parse_error(line_no, "trailing characters after the second identifier");
        rows.push_back(e);
    }
    if (in.bad()) throw parse_error(line_no, "read failure");
    return EdgeTable(std::move(rows));
}

void write_edge_list(const EdgeTable& table, std::ostream& out) {
    for (const Edge& e : table.rows()) out << e.v << '\t' << e.w << '\n';
}

EdgeTable symmetrize(const EdgeTable& table) {
    std::vector<Edge> rows;
    rows.reserve(table.row_count() * 2);
    for (const Edge& e : table.rows()) {
        rows.push_back(e);
        if (e.v != e.w) rows.push_back(Edge{e.w, e.v});
    }
    kernels::sort_unique(rows);
    return EdgeTable(std::move(rows), /*symmetric=*/true);
}

EdgeTable strip_loops(const EdgeTable& table) {
    std::vector<Edge> rows;
    rows.reserve(table.row_count());
    for (const Edge& e : table.rows())
        if (e.v != e.w) rows.push_back(e);
    return EdgeTable(std::move(rows), table.symmetric());
}

}  // namespace randcc
