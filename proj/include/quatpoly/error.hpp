#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quatpoly {

enum class ErrorKind {
    InvalidParams,
    AlgebraMismatch,
    NotInvertible,
    DegreeOverflow,
    NotInBaseField,
    Degenerate,
    AlgorithmFailure,
    DimensionMismatch,
    InternalInvariant,
    UnsupportedAlgebra,
    BlockNotInvertible,
    OffDiagonalZero,
    ParseError,
    DivisionByZeroLiteral,
    NonSquare,
    MissingAlgebra,
    Io,
    Usage,
};

/// Stable machine-readable name, used on the CLI's stderr.
std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by the expression parser. `position` is a 0-based byte offset
/// into the parsed text.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t position, const std::string& message)
        : Error(kind, message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A matrix-file entry failed to parse; row and column are 0-based.
class MatrixEntryError : public Error {
public:
    MatrixEntryError(ErrorKind kind, std::size_t row, std::size_t column, const std::string& message)
        : Error(kind, "entry [" + std::to_string(row) + "][" + std::to_string(column) +
                          "]: " + message),
          row_(row),
          column_(column) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::size_t column_;
};

}  // namespace quatpoly
