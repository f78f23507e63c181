#pragma once

#include <stdexcept>
#include <string>

namespace affex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over frames of different dimension.
class FrameMismatch : public Error {
public:
    using Error::Error;
};

/// Wrong number of arguments (coordinates, points, ...).
class ArityError : public Error {
public:
    using Error::Error;
};

/// Grade out of range, non-homogeneous input, or grades that do not match.
class GradeError : public Error {
public:
    using Error::Error;
};

/// A degree-1 form of unit mass was required.
class NotAPoint : public Error {
public:
    using Error::Error;
};

/// Weighted system with total weight zero.
class NoBarycenter : public Error {
public:
    using Error::Error;
};

/// Axis given by two coincident points.
class DegenerateAxis : public Error {
public:
    using Error::Error;
};

/// Simplex basis with vanishing top product.
class DegenerateBasis : public Error {
public:
    using Error::Error;
};

/// Triangle list whose boundary does not cancel.
class NotClosed : public Error {
public:
    using Error::Error;
};

/// Operation only defined for n = 3.
class UnsupportedDimension : public Error {
public:
    using Error::Error;
};

/// Syntax error in expression text or structured input, with position when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, int line = 0, int column = 0)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& message, int line, int column) {
        if (line <= 0) return message;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    }

    int line_;
    int column_;
};

}  // namespace affex
