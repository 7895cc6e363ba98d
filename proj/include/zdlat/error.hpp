#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdlat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed lattice text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A spec that does not describe a bounded lattice.
class LatticeError : public Error {
public:
    enum class Kind { invalid_spec, not_a_poset, no_unique_bottom, no_unique_top, not_a_lattice, too_large };

    LatticeError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// An operation called outside its documented precondition (non-ideal passed
/// as an ideal, improper ideal where a proper one is required, etc.).
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace zdlat
