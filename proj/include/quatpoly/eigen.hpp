#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "quatpoly/freepoly.hpp"
#include "quatpoly/genpoly.hpp"
#include "quatpoly/matquat.hpp"

namespace quatpoly {

/// embed(A) - embed(lambda I) with lambda = x1 + x2 i + x3 j + x4 ij symbolic;
/// every entry has degree at most 1.
CommMatrix build_symbolic(const MatD& x);

/// p_A(z) = h^-1(det(embed(A - lambda I))), of degree 2k. Its roots in D are
/// exactly the left eigenvalues of A.
GenPoly char_poly(const MatD& x);

/// True iff A - lambda I is singular, i.e. A v = lambda v for some v != 0.
bool is_left_eigenvalue(const MatD& x, const Quat& lambda);

/// Replaces column m of `base` so that M v = lambda v holds exactly. When
/// `column` is empty the first coordinate of v with nonzero norm is used.
/// Throws NotInvertible if v_m (or every coordinate) is not invertible.
MatD plant_eigenpair(const MatD& base, const std::vector<Quat>& v, const Quat& lambda,
                     std::optional<std::size_t> column = std::nullopt);

/// Four-by-four reduction for M = [[A, B], [C, D]] with 2x2 blocks and C
/// invertible:
///   C (A - zI) C^-1 (D - zI) - C B = [[e, f], [g, h]],
///   sextic = e conj(e) h - g conj(e) f.
struct SchurData {
    GenPoly e;
    GenPoly f;
    GenPoly g;
    GenPoly h;
    GenPoly sextic;
};

/// Throws DimensionMismatch unless M is 4x4, BlockNotInvertible if C is
/// singular.
SchurData schur_sextic(const MatD& x);

/// lambda is a left eigenvalue of M iff either e(lambda) = 0 and
/// f(lambda) g(lambda) = 0, or e(lambda) != 0 and sextic(lambda) = 0.
bool sextic_eigen_test(const SchurData& s, const Quat& lambda);

/// Triangular 2x2 input: the left eigenvalues are the diagonal entries.
struct TriangularEigenvalues {
    Quat first;
    Quat second;
};

using QuadraticReduction = std::variant<GenPoly, TriangularEigenvalues>;

/// For M = [[a, b], [c, d]] with c != 0: c (a - z) c^-1 (d - z) - c b, whose
/// roots are the left eigenvalues. For c = 0 the eigenvalues {a, d}.
QuadraticReduction quadratic_2x2(const MatD& x);

}  // namespace quatpoly
