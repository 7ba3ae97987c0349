#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tworough {

// Root of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matrix shape or label-list inconsistencies at construction.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Unknown element label or out-of-range index.
class LookupError : public Error {
public:
    using Error::Error;
};

// Subset used with the wrong side or foreign universes.
class SideMismatchError : public Error {
public:
    using Error::Error;
};

// A measure whose denominator is zero.
class UndefinedMeasureError : public Error {
public:
    using Error::Error;
};

// Exhaustive enumeration requested beyond its size cap.
class CapExceededError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace tworough
