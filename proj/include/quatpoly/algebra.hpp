#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "quatpoly/error.hpp"

namespace quatpoly {

/// Exact rational in lowest terms with positive denominator.
using Scalar = mpq_class;

/// Index into the ordered basis 1 < i < j < ij of a quaternion algebra.
using BasisIndex = std::uint8_t;

inline constexpr BasisIndex kOne = 0;
inline constexpr BasisIndex kI = 1;
inline constexpr BasisIndex kJ = 2;
inline constexpr BasisIndex kIJ = 3;
inline constexpr std::size_t kBasisSize = 4;

/// Structure constants of (a,b/Q): i^2 = a, j^2 = b, ji = -ij.
struct AlgebraParams {
    Scalar a;
    Scalar b;

    bool operator==(const AlgebraParams&) const = default;
};

/// Element c1 + c2 i + c3 j + c4 ij.
struct Quat {
    std::array<Scalar, 4> c{};

    Quat() = default;
    Quat(Scalar c1, Scalar c2, Scalar c3, Scalar c4) : c{c1, c2, c3, c4} {}

    static Quat scalar(const Scalar& s) { return Quat(s, 0, 0, 0); }
    static Quat basis(BasisIndex index, const Scalar& s = 1);

    bool is_zero() const;
    /// True when the element lies in the centre Q (no i, j, ij part).
    bool is_central() const;

    Quat& operator+=(const Quat& o);
    Quat& operator-=(const Quat& o);
    Quat& operator*=(const Scalar& s);

    bool operator==(const Quat&) const = default;
};

Quat operator+(Quat p, const Quat& q);
Quat operator-(Quat p, const Quat& q);
Quat operator-(Quat p);
Quat operator*(Quat p, const Scalar& s);
Quat operator*(const Scalar& s, Quat p);

/// Element u + v i of the maximal subfield K = Q(i), i^2 = a.
struct KElem {
    Scalar u;
    Scalar v;

    KElem() = default;
    KElem(Scalar re, Scalar im = 0) : u(std::move(re)), v(std::move(im)) {}

    bool is_zero() const { return sgn(u) == 0 && sgn(v) == 0; }
    KElem conj() const { return {u, -v}; }

    KElem& operator+=(const KElem& o);
    KElem& operator-=(const KElem& o);

    bool operator==(const KElem&) const = default;
};

KElem operator+(KElem x, const KElem& y);
KElem operator-(KElem x, const KElem& y);
KElem operator-(KElem x);
KElem operator*(const Scalar& s, const KElem& x);

/// Dense square matrix over K, row-major.
struct MatK {
    std::size_t m = 0;
    std::vector<KElem> entries;

    MatK() = default;
    explicit MatK(std::size_t dim) : m(dim), entries(dim * dim) {}

    KElem& at(std::size_t r, std::size_t c) { return entries[r * m + c]; }
    const KElem& at(std::size_t r, std::size_t c) const { return entries[r * m + c]; }

    bool operator==(const MatK&) const = default;
};

/// e_x * e_y = scale * e_index.
struct BasisProduct {
    Scalar scale;
    BasisIndex index = 0;
};

/// A quaternion algebra (a,b/Q) with its precomputed multiplication table.
/// Shared immutably by every polynomial and matrix built over it.
class Algebra {
public:
    /// Throws InvalidParams if a or b is zero.
    explicit Algebra(AlgebraParams params);

    static std::shared_ptr<const Algebra> make(const Scalar& a, const Scalar& b);
    /// Hamilton's quaternions over Q, (-1,-1/Q).
    static std::shared_ptr<const Algebra> hamilton();

    const AlgebraParams& params() const { return params_; }
    const Scalar& a() const { return params_.a; }
    const Scalar& b() const { return params_.b; }

    /// Both structure constants negative: the norm form is anisotropic and
    /// the algebra is a division algebra.
    bool is_definite() const { return sgn(params_.a) < 0 && sgn(params_.b) < 0; }

    const BasisProduct& basis_product(BasisIndex x, BasisIndex y) const {
        return table_[x][y];
    }

    Quat mul(const Quat& p, const Quat& q) const;
    Quat conj(const Quat& q) const;
    /// c1^2 - a c2^2 - b c3^2 + ab c4^2 = q * conj(q).
    Scalar nrd(const Quat& q) const;
    /// Throws NotInvertible when nrd(q) = 0.
    Quat inv(const Quat& q) const;
    Quat commutator(const Quat& p, const Quat& q) const;

    KElem kmul(const KElem& x, const KElem& y) const;
    /// Throws NotInvertible for zero or, in a split K, a norm-zero element.
    KElem kinv(const KElem& x) const;

    /// The 2x2 matrix of left multiplication by q on D = K + jK:
    /// with q = z1 + z2 j, returns [[z1, b z2], [conj z2, conj z1]].
    MatK k_embed(const Quat& q) const;

    /// Splits q = z1 + z2 j with z1, z2 in K.
    static std::pair<KElem, KElem> split(const Quat& q);

    bool operator==(const Algebra& o) const { return params_ == o.params_; }

private:
    AlgebraParams params_;
    std::array<std::array<BasisProduct, 4>, 4> table_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Throws AlgebraMismatch unless both sides share structure constants.
void require_same_algebra(const Algebra& x, const Algebra& y);

MatK mul(const Algebra& alg, const MatK& x, const MatK& y);

}  // namespace quatpoly
