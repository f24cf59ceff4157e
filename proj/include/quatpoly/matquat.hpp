#pragma once

#include <cstddef>
#include <vector>

#include "quatpoly/algebra.hpp"
#include "quatpoly/freepoly.hpp"

namespace quatpoly {

/// Dense k x k matrix over a quaternion algebra, row-major.
class MatD {
public:
    MatD(AlgebraPtr alg, std::size_t k);
    MatD(AlgebraPtr alg, std::size_t k, std::vector<Quat> entries);

    static MatD identity(AlgebraPtr alg, std::size_t k);
    /// lambda on the diagonal.
    static MatD scalar(AlgebraPtr alg, std::size_t k, const Quat& lambda);

    std::size_t size() const { return k_; }
    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<Quat>& entries() const { return entries_; }

    Quat& at(std::size_t r, std::size_t c) { return entries_[r * k_ + c]; }
    const Quat& at(std::size_t r, std::size_t c) const { return entries_[r * k_ + c]; }

    /// The s x s submatrix with top-left corner (r0, c0).
    MatD block(std::size_t r0, std::size_t c0, std::size_t s) const;

    bool operator==(const MatD& o) const { return k_ == o.k_ && entries_ == o.entries_; }

private:
    AlgebraPtr alg_;
    std::size_t k_;
    std::vector<Quat> entries_;
};

MatD operator+(const MatD& x, const MatD& y);
MatD operator-(const MatD& x, const MatD& y);
MatD operator*(const MatD& x, const MatD& y);
/// Entry-wise left scaling d * A.
MatD operator*(const Quat& d, const MatD& x);
MatD operator*(const Scalar& s, const MatD& x);

/// A v for a column vector v.
std::vector<Quat> mat_vec(const MatD& x, const std::vector<Quat>& v);

/// A - lambda I.
MatD shift(const MatD& x, const Quat& lambda);

/// Image of A = B + C j in M_2k(K): [[B, b C], [conj C, conj B]].
/// A ring homomorphism M_k(D) -> M_2k(K).
MatK embed_matrix(const MatD& x);

/// Constant polynomial matrix.
CommMatrix to_comm(const MatK& x, const AlgebraPtr& alg);

KElem det(const MatK& x, const AlgebraPtr& alg);

/// det of the embedded matrix; throws InternalInvariant if not in Q.
Scalar reduced_norm(const MatD& x);

/// sqrt of the reduced norm, for definite algebras only (UnsupportedAlgebra
/// otherwise).
double dieudonne_det(const MatD& x);

bool is_invertible(const MatD& x);

/// Two-sided inverse by Gauss-Jordan elimination over D. Throws
/// NotInvertible for singular input.
MatD inverse(const MatD& x);

}  // namespace quatpoly
