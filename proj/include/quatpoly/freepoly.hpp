#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "quatpoly/algebra.hpp"

namespace quatpoly {

inline constexpr std::size_t kNumVars = 4;

/// Central coordinates (x1, x2, x3, x4) of lambda = x1 + x2 i + x3 j + x4 ij.
using Coords = std::array<Scalar, kNumVars>;

/// lambda(c) = c1 + c2 i + c3 j + c4 ij.
Quat quat_from_coords(const Coords& c);

/// The monomial e_basis * x_{v1} x_{v2} ... x_{vn}.
///
/// Variables are numbered 1..4 in the interface and packed as 0..3, two bits
/// each, first variable most significant.
class FreeWord {
public:
    static constexpr std::size_t kMaxLength = 32;

    FreeWord() = default;
    FreeWord(BasisIndex basis, std::span<const std::uint8_t> vars);
    FreeWord(BasisIndex basis, std::initializer_list<std::uint8_t> vars)
        : FreeWord(basis, std::span<const std::uint8_t>(vars.begin(), vars.size())) {}

    BasisIndex basis() const { return basis_; }
    std::size_t degree() const { return len_; }
    /// 1-based variable number at position t.
    std::uint8_t var(std::size_t t) const {
        return static_cast<std::uint8_t>(((bits_ >> (2 * (len_ - 1 - t))) & 3u) + 1);
    }
    std::vector<std::uint8_t> vars() const;

    FreeWord with_basis(BasisIndex b) const {
        FreeWord w = *this;
        w.basis_ = b;
        return w;
    }
    /// Concatenated variable words, carrying the given basis element.
    static FreeWord concat(const FreeWord& u, const FreeWord& v, BasisIndex basis);
    /// The word with its first variable removed.
    FreeWord drop_first() const;

    auto operator<=>(const FreeWord& o) const {
        if (auto c = len_ <=> o.len_; c != 0) return c;
        if (auto c = bits_ <=> o.bits_; c != 0) return c;
        return basis_ <=> o.basis_;
    }
    bool operator==(const FreeWord&) const = default;

private:
    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 0;
    BasisIndex basis_ = 0;
};

/// Element of D<x1..x4>: the x's commute with D but not with each other.
class FreePoly {
public:
    using Terms = std::map<FreeWord, Scalar>;

    explicit FreePoly(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static FreePoly constant(AlgebraPtr alg, const Quat& d);
    /// x_k (k in 1..4).
    static FreePoly var(AlgebraPtr alg, std::uint8_t k);
    static FreePoly monomial(AlgebraPtr alg, const FreeWord& w, const Scalar& c);

    const Terms& terms() const { return terms_; }
    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::optional<std::size_t> degree() const;

    void add_term(const FreeWord& w, const Scalar& c);

    FreePoly& operator+=(const FreePoly& o);
    FreePoly& operator-=(const FreePoly& o);
    FreePoly& operator*=(const Scalar& s);

    /// For a degree-1 polynomial sum d_m x_m, the coefficient d_k of x_k;
    /// terms of other degrees are ignored.
    Quat linear_coefficient(std::uint8_t k) const;

    bool operator==(const FreePoly& o) const { return terms_ == o.terms_; }

private:
    AlgebraPtr alg_;
    Terms terms_;
};

FreePoly operator+(FreePoly p, const FreePoly& q);
FreePoly operator-(FreePoly p, const FreePoly& q);
FreePoly operator-(FreePoly p);
FreePoly operator*(const FreePoly& p, const FreePoly& q);
FreePoly operator*(FreePoly p, const Scalar& s);
FreePoly operator*(const Quat& d, const FreePoly& p);

/// Substitutes central scalars for the variables and evaluates in D.
Quat evaluate(const FreePoly& q, const Coords& coords);

/// Exponent vector (n1, n2, n3, n4) of x1^n1 x2^n2 x3^n3 x4^n4.
using Exponents = std::array<std::uint8_t, kNumVars>;

/// Commutative polynomial in x1..x4 with coefficients in K = Q(i).
class CommPoly {
public:
    using Terms = std::map<Exponents, KElem>;

    explicit CommPoly(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static CommPoly constant(AlgebraPtr alg, const KElem& c);
    /// x_k (k in 1..4).
    static CommPoly var(AlgebraPtr alg, std::uint8_t k);

    const Terms& terms() const { return terms_; }
    const AlgebraPtr& algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<std::size_t> degree() const;

    void add_term(const Exponents& e, const KElem& c);

    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);

    /// Adds x * y into *this.
    void add_product(const CommPoly& x, const CommPoly& y);

    KElem evaluate(const Coords& coords) const;
    /// The polynomial with every coefficient conjugated over K.
    CommPoly conj() const;

    bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }

private:
    AlgebraPtr alg_;
    Terms terms_;
};

CommPoly operator+(CommPoly p, const CommPoly& q);
CommPoly operator-(CommPoly p, const CommPoly& q);
CommPoly operator-(CommPoly p);
CommPoly operator*(const CommPoly& p, const CommPoly& q);

/// Square matrix of commutative polynomials, row-major.
struct CommMatrix {
    std::size_t m = 0;
    std::vector<CommPoly> entries;

    const CommPoly& at(std::size_t r, std::size_t c) const { return entries[r * m + c]; }
    CommPoly& at(std::size_t r, std::size_t c) { return entries[r * m + c]; }
};

/// Exact determinant by cofactor expansion along rows, memoised on the set
/// of remaining columns. Throws DimensionMismatch for m > 20.
CommPoly det(const CommMatrix& mat, const AlgebraPtr& alg);

/// Lifts x1^n1 .. x4^n4 to the sorted word x1..x1 x2..x2 .. x4..x4.
/// Throws NotInBaseField if any coefficient has a nonzero i-part.
FreePoly lift_to_free(const CommPoly& q);

}  // namespace quatpoly
