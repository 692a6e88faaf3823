#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace trendcast {

/// Dense user index, 0-based.
using UserId = std::uint32_t;
/// Dense object index, 0-based. Object ids live in their own space, disjoint from users.
using ObjectId = std::uint32_t;
/// Day index counted from the dataset epoch.
using Day = std::int32_t;

/// One user -> object interaction observed on `day`.
struct TemporalEdge {
    UserId user = 0;
    ObjectId object = 0;
    Day day = 0;

    friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

// Error hierarchy. The CLI maps each class to an exit status.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input file missing or unreadable.
class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input row; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Nothing survived filtering.
class EmptyDatasetError : public Error {
public:
    using Error::Error;
};

/// Out-of-range parameter, unknown id, or a query window outside the data.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A library invariant did not hold. Indicates a bug, not bad input.
class InvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace trendcast
