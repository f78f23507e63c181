#pragma once

#include <string_view>
#include <vector>

#include "affex/form.hpp"

namespace affex {

/// Parse tree of the expression language:
///
///   primary  := rational | P(expr, ...) | V(expr, ...) | ( expr )
///   rational := INT [ '/' INT ]
///   wedge    := primary { '^' primary }
///   unary    := [ '+' | '-' ] unary | wedge
///   term     := unary { '*' unary }        -- scalar on the left
///   expr     := term { ('+' | '-') term }
///
/// '^' binds tighter than '*', which binds tighter than '+'/'-'; all binary
/// operators are left-associative. A signed wedge operand needs parentheses.
struct Expression {
    enum class Op {
        RationalLit,  // value
        Point,        // children = coordinates
        Vector,       // children = coordinates
        Add,          // children = {lhs, rhs}
        Sub,          // children = {lhs, rhs}
        Neg,          // children = {operand}
        Scale,        // children = {scalar, form}
        Wedge,        // children = {lhs, rhs}
    };

    Op op;
    Rational value;
    std::vector<Expression> children;
};

/// Parses expression text for a frame of the given dimension (point/vector
/// literal arities are checked here). Throws ParseError with line/column.
Expression parse_form(std::string_view text, int dimension);

/// Evaluates a parse tree over the frame. Scalar literals become grade-0
/// forms; '*' requires a grade-0 left operand.
GeometricForm evaluate(const Expression& expr, const Frame& frame);

/// parse_form + evaluate in one step.
GeometricForm evaluate_text(std::string_view text, const Frame& frame);

}  // namespace affex
