#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcthresh {

enum class ErrorKind {
    NegativeComponent,
    SumNotOne,
    DimensionTooSmall,
    DimensionMismatch,
    Overflow,
    EmptyThresholdSet,
    EmptyCloud,
    DegenerateClass,
    InvalidArgument,
    MalformedHeader,
    RowValidation,
    LabelOutOfRange,
    Io,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised by file parsers. row() is the 1-based line number in the file (header is line 1),
// cause() is the validation failure behind a RowValidation error.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t row, ErrorKind cause, const std::string& what)
        : Error(kind, what), row_(row), cause_(cause) {}

    std::size_t row() const noexcept { return row_; }
    ErrorKind cause() const noexcept { return cause_; }

private:
    std::size_t row_;
    ErrorKind cause_;
};

}  // namespace mcthresh
