#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qgx {

/// Two operands come from different representation spaces (length, k, node
/// count, alphabet size...).
class DimensionMismatch : public std::invalid_argument {
public:
    DimensionMismatch(const std::string& what, std::size_t lhs, std::size_t rhs)
        : std::invalid_argument(what + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
          lhs_(lhs), rhs_(rhs) {}

    std::size_t lhs() const noexcept { return lhs_; }
    std::size_t rhs() const noexcept { return rhs_; }

private:
    std::size_t lhs_;
    std::size_t rhs_;
};

/// A value violates a representation invariant (label out of range,
/// asymmetric adjacency matrix, repeated element in a permutation...).
class InvalidRepresentation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact/enumerative routine was asked to go beyond its configured bound.
class CapacityError : public std::length_error {
public:
    CapacityError(const std::string& what, std::size_t requested, std::size_t bound)
        : std::length_error(what + ": " + std::to_string(requested) + " exceeds bound " +
                            std::to_string(bound)),
          requested_(requested), bound_(bound) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t requested_;
    std::size_t bound_;
};

/// Malformed input file (graph edge list, TSP coordinates, sequence corpus).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Bad run configuration; names the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error("config field '" + field + "': " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace qgx
