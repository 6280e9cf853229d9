#include "randcc/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>

#include "randcc/errors.hpp"

namespace randcc {

Labeling::Labeling(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    const auto dup = std::adjacent_find(
        entries_.begin(), entries_.end(),
        [](const Entry& a, const Entry& b) { return a.first == b.first; });
    if (dup != entries_.end())
        throw std::invalid_argument("vertex " + std::to_string(dup->first) +
                                    " labelled more than once");
}

std::optional<std::uint64_t> Labeling::label_of(VertexId v) const {
    const auto it = std::lower_bound(
        entries_.begin(), entries_.end(), v,
        [](const Entry& e, VertexId x) { return e.first < x; });
    if (it == entries_.end() || it->first != v) return std::nullopt;
    return it->second;
}

std::size_t Labeling::distinct_label_count() const {
    std::vector<std::uint64_t> labels;
    labels.reserve(entries_.size());
    for (const Entry& e : entries_) labels.push_back(e.second);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels.size();
}

std::size_t write_labeling(const Labeling& labeling, std::ostream& out) {
    for (const auto& [v, label] : labeling.entries()) out << v << '\t' << label << '\n';
    return labeling.size();
}

Labeling read_labeling(std::istream& in) {
    std::vector<Labeling::Entry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view view(line);
        const auto first = view.find_first_not_of(" \t\r\f\v");
        if (first == std::string_view::npos || view[first] == '#') continue;

        auto parse_u64 = [&](std::size_t& pos) {
            pos = view.find_first_not_of(" \t\r\f\v", pos);
            if (pos == std::string_view::npos)
                throw parse_error(line_no, "expected vertex and label");
            const char* begin = view.data() + pos;
            const char* end = view.data() + view.size();
            std::uint64_t value = 0;
            const auto [ptr, ec] = std::from_chars(begin, end, value);
            if (ec != std::errc{} || ptr == begin)
                throw parse_error(line_no, "malformed number");
            pos = static_cast<std::size_t>(ptr - view.data());
            return value;
        };

        std::size_t pos = first;
        const std::uint64_t v = parse_u64(pos);
        const std::uint64_t label = parse_u64(pos);
        pos = view.find_first_not_of(" \t\r\f\v", pos);
        if (pos != std::string_view::npos)
            throw parse_error(line_no, "trailing characters after the label");
        entries.emplace_back(v, label);
    }
    if (in.bad()) throw parse_error(line_no, "read failure");
    try {
        return Labeling(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw parse_error(line_no, e.what());
    }
}

namespace {

// Verify both labelings name the same vertices; entries are sorted, so a
// single sweep finds the difference.
void require_same_domain(const Labeling& a, const Labeling& b) {
    auto ea = a.entries();
    auto eb = b.entries();
    std::vector<std::uint64_t> only_a;
    std::vector<std::uint64_t> only_b;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first == eb[j].first) {
            ++i;
            ++j;
        } else if (ea[i].first < eb[j].first) {
            only_a.push_back(ea[i++].first);
        } else {
            only_b.push_back(eb[j++].first);
        }
    }
    while (i < ea.size()) only_a.push_back(ea[i++].first);
    while (j < eb.size()) only_b.push_back(eb[j++].first);
    if (only_a.empty() && only_b.empty()) return;

    auto summarize = [](const std::vector<std::uint64_t>& ids) {
        std::string s;
        for (std::size_t k = 0; k < ids.size() && k < 8; ++k) {
            if (k) s += ", ";
            s += std::to_string(ids[k]);
        }
        if (ids.size() > 8) s += ", ... (" + std::to_string(ids.size()) + " total)";
        return s;
    };
    std::string message = "labelings cover different vertex sets";
    if (!only_a.empty()) message += "; only in first: " + summarize(only_a);
    if (!only_b.empty()) message += "; only in second: " + summarize(only_b);
    std::vector<std::uint64_t> missing = std::move(only_a);
    missing.insert(missing.end(), only_b.begin(), only_b.end());
    throw domain_mismatch_error(message, std::move(missing));
}

}  // namespace

std::optional<PartitionMismatch> compare_partitions(const Labeling& a, const Labeling& b) {
    require_same_domain(a, b);
    // Walk vertices in ascending order.  For each new a-label remember the
    // first vertex carrying it together with that vertex's b-label, and
    // symmetrically.  The first inconsistency is the first differing pair.
    std::unordered_map<std::uint64_t, std::pair<VertexId, std::uint64_t>> a_first;
    std::unordered_map<std::uint64_t, std::pair<VertexId, std::uint64_t>> b_first;
    a_first.reserve(a.size());
    b_first.reserve(b.size());
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        const VertexId v = ea[i].first;
        const std::uint64_t la = ea[i].second;
        const std::uint64_t lb = eb[i].second;
        const auto [ia, inserted_a] = a_first.try_emplace(la, v, lb);
        if (!inserted_a && ia->second.second != lb)
            return PartitionMismatch{ia->second.first, v, /*together_in_first=*/true};
        const auto [ib, inserted_b] = b_first.try_emplace(lb, v, la);
        if (!inserted_b && ib->second.second != la)
            return PartitionMismatch{ib->second.first, v, /*together_in_first=*/false};
    }
    return std::nullopt;
}

bool partitions_equal(const Labeling& a, const Labeling& b) {
    return !compare_partitions(a, b).has_value();
}

Labeling canonicalize(const Labeling& labeling) {
    std::unordered_map<std::uint64_t, VertexId> min_member;
    min_member.reserve(labeling.size());
    for (const auto& [v, label] : labeling.entries()) {
        const auto [it, inserted] = min_member.try_emplace(label, v);
        if (!inserted && v < it->second) it->second = v;
    }
    std::vector<Labeling::Entry> entries;
    entries.reserve(labeling.size());
    for (const auto& [v, label] : labeling.entries())
        entries.emplace_back(v, min_member.at(label));
    return Labeling(std::move(entries));
}

}  // namespace randcc
