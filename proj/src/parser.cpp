#include "affex/parser.hpp"

#include <cctype>
#include <string>
#include <utility>

#include "affex/error.hpp"

namespace affex {

namespace {

struct Token {
    enum class Kind {
        Number,
        PointKeyword,
        VectorKeyword,
        LParen,
        RParen,
        Comma,
        Plus,
        Minus,
        Star,
        Slash,
        Caret,
        End,
    };

    Kind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& current() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
            ++pos_;
        }

        current_.line = line_;
        current_.column = column_;
        current_.text.clear();

        if (pos_ >= text_.size()) {
            current_.kind = Token::Kind::End;
            return;
        }

        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++column_;
            }
            current_.kind = Token::Kind::Number;
            current_.text = std::string(text_.substr(start, pos_ - start));
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++column_;
            }
            const std::string word(text_.substr(start, pos_ - start));
            if (word == "P")
                current_.kind = Token::Kind::PointKeyword;
            else if (word == "V")
                current_.kind = Token::Kind::VectorKeyword;
            else
                throw ParseError("unknown identifier '" + word + "'", line_,
                                 current_.column);
            return;
        }

        ++pos_;
        ++column_;
        switch (c) {
            case '(': current_.kind = Token::Kind::LParen; return;
            case ')': current_.kind = Token::Kind::RParen; return;
            case ',': current_.kind = Token::Kind::Comma; return;
            case '+': current_.kind = Token::Kind::Plus; return;
            case '-': current_.kind = Token::Kind::Minus; return;
            case '*': current_.kind = Token::Kind::Star; return;
            case '/': current_.kind = Token::Kind::Slash; return;
            case '^': current_.kind = Token::Kind::Caret; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'",
                                 line_, current_.column);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_{Token::Kind::End, "", 1, 1};
};

class Parser {
public:
    Parser(std::string_view text, int dimension)
        : lexer_(text), dimension_(dimension) {}

    Expression parse() {
        Expression e = parse_expr();
        if (lexer_.current().kind != Token::Kind::End)
            fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, lexer_.current().line, lexer_.current().column);
    }

    Token expect(Token::Kind kind, const char* what) {
        if (lexer_.current().kind != kind) fail(std::string("expected ") + what);
        return lexer_.take();
    }

    Expression parse_expr() {
        Expression lhs = parse_term();
        while (lexer_.current().kind == Token::Kind::Plus ||
               lexer_.current().kind == Token::Kind::Minus) {
            const bool plus = lexer_.take().kind == Token::Kind::Plus;
            Expression rhs = parse_term();
            Expression node{plus ? Expression::Op::Add : Expression::Op::Sub, 0, {}};
            node.children.push_back(std::move(lhs));
            node.children.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    Expression parse_term() {
        Expression lhs = parse_unary();
        while (lexer_.current().kind == Token::Kind::Star) {
            lexer_.take();
            Expression rhs = parse_unary();
            Expression node{Expression::Op::Scale, 0, {}};
            node.children.push_back(std::move(lhs));
            node.children.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    Expression parse_unary() {
        if (lexer_.current().kind == Token::Kind::Plus) {
            lexer_.take();
            return parse_unary();
        }
        if (lexer_.current().kind == Token::Kind::Minus) {
            lexer_.take();
            Expression node{Expression::Op::Neg, 0, {}};
            node.children.push_back(parse_unary());
            return node;
        }
        return parse_wedge();
    }

    Expression parse_wedge() {
        Expression lhs = parse_primary();
        while (lexer_.current().kind == Token::Kind::Caret) {
            lexer_.take();
            Expression rhs = parse_primary();
            Expression node{Expression::Op::Wedge, 0, {}};
            node.children.push_back(std::move(lhs));
            node.children.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    Expression parse_primary() {
        const Token::Kind kind = lexer_.current().kind;
        if (kind == Token::Kind::Number) return parse_rational();
        if (kind == Token::Kind::PointKeyword || kind == Token::Kind::VectorKeyword)
            return parse_literal(kind == Token::Kind::PointKeyword);
        if (kind == Token::Kind::LParen) {
            lexer_.take();
            Expression inner = parse_expr();
            expect(Token::Kind::RParen, "')'");
            return inner;
        }
        fail("expected expression");
    }

    Expression parse_rational() {
        const Token num = expect(Token::Kind::Number, "number");
        std::string text = num.text;
        if (lexer_.current().kind == Token::Kind::Slash) {
            lexer_.take();
            const Token den = expect(Token::Kind::Number, "denominator");
            if (den.text.find_first_not_of('0') == std::string::npos)
                throw ParseError("zero denominator", den.line, den.column);
            text += "/" + den.text;
        }
        return {Expression::Op::RationalLit, rational_from_string(text), {}};
    }

    Expression parse_literal(bool point) {
        const Token keyword = lexer_.take();
        expect(Token::Kind::LParen, "'('");
        Expression node{point ? Expression::Op::Point : Expression::Op::Vector,
                        0,
                        {}};
        node.children.push_back(parse_expr());
        while (lexer_.current().kind == Token::Kind::Comma) {
            lexer_.take();
            node.children.push_back(parse_expr());
        }
        expect(Token::Kind::RParen, "')'");
        if (static_cast<int>(node.children.size()) != dimension_)
            throw ParseError(std::string(point ? "point" : "vector") +
                                 " literal needs exactly " +
                                 std::to_string(dimension_) + " coordinates",
                             keyword.line, keyword.column);
        return node;
    }

    Lexer lexer_;
    int dimension_;
};

Rational scalar_value(const GeometricForm& x, const char* context) {
    if (x.is_zero()) return 0;
    if (x.homogeneous_grade() != 0)
        throw GradeError(std::string(context) + " must be a scalar");
    return x.coefficient(Blade{0});
}

}  // namespace

Expression parse_form(std::string_view text, int dimension) {
    if (dimension < 1 || dimension > kMaxDimension)
        throw Error("dimension out of range");
    return Parser(text, dimension).parse();
}

GeometricForm evaluate(const Expression& expr, const Frame& frame) {
    switch (expr.op) {
        case Expression::Op::RationalLit:
            return make_scalar(frame, expr.value);
        case Expression::Op::Point:
        case Expression::Op::Vector: {
            std::vector<Rational> coords;
            coords.reserve(expr.children.size());
            for (const auto& c : expr.children)
                coords.push_back(scalar_value(evaluate(c, frame), "coordinate"));
            return expr.op == Expression::Op::Point ? make_point(frame, coords)
                                                    : make_vector(frame, coords);
        }
        case Expression::Op::Add:
            return evaluate(expr.children[0], frame) +
                   evaluate(expr.children[1], frame);
        case Expression::Op::Sub:
            return evaluate(expr.children[0], frame) -
                   evaluate(expr.children[1], frame);
        case Expression::Op::Neg:
            return -evaluate(expr.children[0], frame);
        case Expression::Op::Scale: {
            const Rational scale =
                scalar_value(evaluate(expr.children[0], frame),
                             "left operand of '*'");
            return scale * evaluate(expr.children[1], frame);
        }
        case Expression::Op::Wedge:
            return wedge(evaluate(expr.children[0], frame),
                         evaluate(expr.children[1], frame));
    }
    throw Error("unknown expression node");
}

GeometricForm evaluate_text(std::string_view text, const Frame& frame) {
    return evaluate(parse_form(text, frame.dimension()), frame);
}

}  // namespace affex
