#pragma once

#include <stdexcept>
#include <string>

#include "rascal/cell.hpp"

namespace rascal {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A builder was asked for zero rows.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// Cell, row or diagonal index outside the stored extent.
class PositionError : public Error {
public:
    using Error::Error;
};

/// Malformed triangle rows (row n must hold exactly n+1 entries).
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A generation step produced a non-integer value. Carries the cell.
class IntegralityError : public Error {
public:
    IntegralityError(Cell cell, const std::string& what)
        : Error(what), cell_(cell) {}
    Cell cell() const { return cell_; }

private:
    Cell cell_;
};

/// A rule cannot be applied, inferred or even stated (empty rule,
/// offsets escaping the triangle, too few sample cells).
class RuleError : public Error {
public:
    using Error::Error;
};

/// A pattern predictor was asked about a cell outside its domain.
class PatternError : public Error {
public:
    using Error::Error;
};

/// A diamond ring does not fit inside the triangle.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Sequence too short to analyze.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Unreadable or invalid serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace rascal
