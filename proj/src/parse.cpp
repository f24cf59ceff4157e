#include <cctype>
#include <limits>
#include <string>

#include "quatpoly/io.hpp"

namespace quatpoly {

namespace {

PolyExpr node(PolyExpr::Kind kind, std::size_t position) {
    PolyExpr e;
    e.kind = kind;
    e.position = position;
    return e;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    PolyExpr parse() {
        PolyExpr e = poly();
        skip_space();
        if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(ErrorKind::ParseError, pos_, what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string digits() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    PolyExpr poly() {
        PolyExpr sum = node(PolyExpr::Kind::Sum, pos_);
        sum.children.push_back(term());
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                sum.children.push_back(term());
            } else if (c == '-') {
                std::size_t at = pos_++;
                PolyExpr neg = node(PolyExpr::Kind::Negate, at);
                neg.children.push_back(term());
                sum.children.push_back(std::move(neg));
            } else {
                break;
            }
        }
        if (sum.children.size() == 1) return std::move(sum.children.front());
        return sum;
    }

    PolyExpr term() {
        skip_space();
        std::size_t at = pos_;
        bool negate = accept('-');
        PolyExpr prod = node(PolyExpr::Kind::Product, at);
        prod.children.push_back(factor());
        while (accept('*')) prod.children.push_back(factor());
        PolyExpr body = prod.children.size() == 1 ? std::move(prod.children.front()) : std::move(prod);
        if (!negate) return body;
        PolyExpr neg = node(PolyExpr::Kind::Negate, at);
        neg.children.push_back(std::move(body));
        return neg;
    }

    PolyExpr factor() {
        PolyExpr base = atom();
        skip_space();
        std::size_t at = pos_;
        if (!accept('^')) return base;
        std::string n = digits();
        unsigned long value = 0;
        try {
            value = std::stoul(n);
        } catch (const std::exception&) {
            pos_ = at;
            fail("exponent too large");
        }
        if (value > std::numeric_limits<unsigned>::max()) {
            pos_ = at;
            fail("exponent too large");
        }
        PolyExpr power = node(PolyExpr::Kind::Power, at);
        power.exponent = static_cast<unsigned>(value);
        power.children.push_back(std::move(base));
        return power;
    }

    PolyExpr atom() {
        char c = peek();
        std::size_t at = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            PolyExpr lit = node(PolyExpr::Kind::Rational, at);
            mpz_class num(digits());
            mpz_class den(1);
            if (accept('/')) {
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
                std::size_t den_at = pos_;
                den = mpz_class(digits());
                if (den == 0)
                    throw ParseError(ErrorKind::DivisionByZeroLiteral, den_at, "zero denominator");
            }
            lit.value = Scalar(num, den);
            lit.value.canonicalize();
            return lit;
        }
        switch (c) {
            case 'i':
            case 'j':
            case 'k': {
                ++pos_;
                PolyExpr b = node(PolyExpr::Kind::Basis, at);
                b.basis = c == 'i' ? kI : c == 'j' ? kJ : kIJ;
                return b;
            }
            case 'z':
                ++pos_;
                return node(PolyExpr::Kind::Variable, at);
            case '(': {
                ++pos_;
                PolyExpr inner = poly();
                if (!accept(')')) fail("expected ')'");
                return inner;
            }
            case '\0':
                fail("unexpected end of input");
            default:
                fail("unexpected '" + std::string(1, c) + "'");
        }
    }
};

}  // namespace

PolyExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

GenPoly lower(const PolyExpr& expr, const AlgebraPtr& alg, bool allow_z) {
    switch (expr.kind) {
        case PolyExpr::Kind::Rational:
            return GenPoly::constant(alg, expr.value);
        case PolyExpr::Kind::Basis:
            return GenPoly::constant(alg, Quat::basis(expr.basis));
        case PolyExpr::Kind::Variable:
            if (!allow_z)
                throw ParseError(ErrorKind::ParseError, expr.position, "variable z not allowed here");
            return GenPoly::z(alg);
        case PolyExpr::Kind::Negate:
            return -lower(expr.children.at(0), alg, allow_z);
        case PolyExpr::Kind::Sum: {
            GenPoly acc(alg);
            for (const auto& child : expr.children) acc += lower(child, alg, allow_z);
            return acc;
        }
        case PolyExpr::Kind::Product: {
            GenPoly acc = lower(expr.children.at(0), alg, allow_z);
            for (std::size_t t = 1; t < expr.children.size(); ++t)
                acc = acc * lower(expr.children[t], alg, allow_z);
            return acc;
        }
        case PolyExpr::Kind::Power:
            return pow(lower(expr.children.at(0), alg, allow_z), expr.exponent);
    }
    throw Error(ErrorKind::InternalInvariant, "unknown expression node");
}

GenPoly parse_poly(const AlgebraPtr& alg, std::string_view text) {
    return lower(parse_expr(text), alg, true);
}

Quat parse_quat(const AlgebraPtr& alg, std::string_view text) {
    // z-free expressions lower to degree-0 polynomials, whose value is the element.
    return substitute(lower(parse_expr(text), alg, false), Quat{});
}

Scalar parse_scalar(std::string_view text) {
    std::size_t start = 0;
    while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
    bool negative = start < text.size() && text[start] == '-';
    PolyExpr e = parse_expr(text.substr(start + (negative ? 1 : 0)));
    if (e.kind != PolyExpr::Kind::Rational)
        throw ParseError(ErrorKind::ParseError, start, "expected a rational number");
    return negative ? Scalar(-e.value) : e.value;
}

AlgebraPtr parse_algebra(std::string_view text) {
    std::size_t comma = text.find(',');
    if (comma == std::string_view::npos)
        throw ParseError(ErrorKind::ParseError, text.size(), "expected 'a,b'");
    return Algebra::make(parse_scalar(text.substr(0, comma)), parse_scalar(text.substr(comma + 1)));
}

}  // namespace quatpoly
