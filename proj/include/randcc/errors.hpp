#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace randcc {

// Input text could not be parsed. Line numbers are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class invalid_key_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Lookup of a vertex that was never entered into a prepared key table.
class missing_vertex_error : public std::runtime_error {
public:
    explicit missing_vertex_error(std::uint64_t v)
        : std::runtime_error("vertex " + std::to_string(v) +
                             " not present in the prepared key table"),
          vertex_(v) {}

    std::uint64_t vertex() const noexcept { return vertex_; }

private:
    std::uint64_t vertex_;
};

// Two labelings do not cover the same vertex set.
class domain_mismatch_error : public std::runtime_error {
public:
    domain_mismatch_error(const std::string& message, std::vector<std::uint64_t> missing)
        : std::runtime_error(message), missing_(std::move(missing)) {}

    const std::vector<std::uint64_t>& missing_vertices() const noexcept { return missing_; }

private:
    std::vector<std::uint64_t> missing_;
};

// Requested exhaustive computation exceeds the enumeration cap.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace randcc
