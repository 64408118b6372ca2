#pragma once

#include <stdexcept>
#include <string>

namespace signdet {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. Carries the 1-based row and column of the offending
/// cell where that is known; 0 means "not applicable".
class ParseError : public Error {
public:
    ParseError(const std::string& what, int row = 0, int col = 0)
        : Error(what), row_(row), col_(col) {}
    int row() const { return row_; }
    int col() const { return col_; }

private:
    int row_;
    int col_;
};

/// Input resolves to a matrix with no rows or no columns.
class EmptyMatrix : public ParseError {
public:
    explicit EmptyMatrix(const std::string& what) : ParseError(what) {}
};

/// Operation requires a square matrix or pattern.
class NotSquare : public Error {
public:
    explicit NotSquare(const std::string& what) : Error(what) {}
};

/// Row or column index outside the matrix.
class IndexOutOfRange : public Error {
public:
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

/// Inner dimensions of a product do not agree.
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/// Two related inputs have incompatible shapes.
class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

/// A square pattern admits no perfect matching between rows and columns.
class NoPerfectMatching : public Error {
public:
    explicit NoPerfectMatching(const std::string& what) : Error(what) {}
};

/// A matching handed in as a parameter does not cover the required side
/// of the graph, or uses edges that are not present.
class NotPerfectMatching : public Error {
public:
    explicit NotPerfectMatching(const std::string& what) : Error(what) {}
};

/// Instance exceeds the hard size cap of an exponential-cost operation.
class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what) : Error(what) {}
};

/// A documented precondition does not hold for the given arguments.
class PreconditionViolated : public Error {
public:
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

}  // namespace signdet
