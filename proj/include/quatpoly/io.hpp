#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quatpoly/freepoly.hpp"
#include "quatpoly/genpoly.hpp"
#include "quatpoly/matquat.hpp"

namespace quatpoly {

/// Syntax tree of the expression language
///
///   poly     := term (('+' | '-') term)*
///   term     := '-'? factor ('*' factor)*
///   factor   := atom ('^' nat)?
///   atom     := rational | 'i' | 'j' | 'k' | 'z' | '(' poly ')'
///   rational := int ('/' posint)?
///
/// 'k' stands for ij. Multiplication is explicit and order-preserving.
struct PolyExpr {
    enum class Kind { Rational, Basis, Variable, Negate, Sum, Product, Power };

    Kind kind = Kind::Rational;
    std::size_t position = 0;
    Scalar value;
    BasisIndex basis = 0;
    unsigned exponent = 0;
    std::vector<PolyExpr> children;
};

/// Throws ParseError / DivisionByZeroLiteral with the offending position.
PolyExpr parse_expr(std::string_view text);

/// Lowers a syntax tree. With `allow_z` false a 'z' node is a ParseError.
GenPoly lower(const PolyExpr& expr, const AlgebraPtr& alg, bool allow_z = true);

GenPoly parse_poly(const AlgebraPtr& alg, std::string_view text);
/// A z-free expression evaluated in the algebra.
Quat parse_quat(const AlgebraPtr& alg, std::string_view text);
/// "p" or "p/q" with an optional leading '-'.
Scalar parse_scalar(std::string_view text);
/// "a,b" -> (a,b/Q).
AlgebraPtr parse_algebra(std::string_view text);

std::string format_scalar(const Scalar& s);
/// Terms ordered by (degree, word), joined by " + ".
std::string format_poly(const GenPoly& p);
std::string format_quat(const Quat& q);
/// Terms like "2*i*x2*x4".
std::string format_free(const FreePoly& p);
std::string format_comm(const CommPoly& p);

/// {"algebra": [a, b], "entries": [["i", "0"], ["0", "j"]]}
///
/// `fallback` is used when the document has no "algebra" key; without one
/// that case raises MissingAlgebra. Non-square input raises NonSquare and
/// bad entries raise MatrixEntryError.
MatD parse_matrix_json(std::string_view text, const AlgebraPtr& fallback = nullptr);
MatD load_matrix(const std::filesystem::path& path, const AlgebraPtr& fallback = nullptr);
std::string matrix_to_json(const MatD& x);
void save_matrix(const std::filesystem::path& path, const MatD& x);

/// Runs one CLI invocation (args exclude the program name). Returns the
/// process exit code: 0 success, 1 for a negative eigcheck, 2 for a library
/// error (reported as "error: <Kind>: <message>"), 64 for usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quatpoly
