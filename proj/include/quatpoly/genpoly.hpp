#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "quatpoly/algebra.hpp"

namespace quatpoly {

/// The monomial e_{b0} z e_{b1} z ... z e_{bn} of degree n.
///
/// Indices are packed two bits each with b0 in the most significant
/// position, so ordering by (length, bits) is ordering by (degree, word).
/// Degrees above kMaxDegree raise DegreeOverflow.
class GenWord {
public:
    static constexpr std::size_t kMaxDegree = 31;

    GenWord() = default;
    explicit GenWord(std::span<const BasisIndex> indices);
    GenWord(std::initializer_list<BasisIndex> indices)
        : GenWord(std::span<const BasisIndex>(indices.begin(), indices.size())) {}

    std::size_t degree() const { return len_ - 1u; }
    std::size_t length() const { return len_; }
    BasisIndex operator[](std::size_t t) const {
        return static_cast<BasisIndex>((bits_ >> (2 * (len_ - 1 - t))) & 3u);
    }
    BasisIndex front() const { return (*this)[0]; }
    BasisIndex back() const { return static_cast<BasisIndex>(bits_ & 3u); }
    std::vector<BasisIndex> indices() const;

    /// u * v with the boundary pair (u.back, v.front) replaced by `merged`.
    static GenWord join(const GenWord& u, const GenWord& v, BasisIndex merged);

    /// Same word with the first (resp. last) index replaced.
    GenWord with_front(BasisIndex b) const;
    GenWord with_back(BasisIndex b) const;

    std::uint64_t bits() const { return bits_; }

    auto operator<=>(const GenWord& o) const {
        if (auto c = len_ <=> o.len_; c != 0) return c;
        return bits_ <=> o.bits_;
    }
    bool operator==(const GenWord&) const = default;

private:
    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 1;
};

/// Element of D_G[z]: the variable z commutes with the centre Q only.
/// Stored as a sparse map from basis words to nonzero rationals, which is a
/// unique normal form.
class GenPoly {
public:
    using Terms = std::map<GenWord, Scalar>;

    explicit GenPoly(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static GenPoly constant(AlgebraPtr alg, const Quat& d);
    static GenPoly constant(AlgebraPtr alg, const Scalar& s);
    /// The variable z.
    static GenPoly z(AlgebraPtr alg);
    static GenPoly monomial(AlgebraPtr alg, const GenWord& w, const Scalar& c);
    /// Adopts a term map, dropping zero coefficients.
    static GenPoly from_terms(AlgebraPtr alg, Terms terms);

    const Terms& terms() const { return terms_; }
    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Highest word degree; nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;

    /// Adds c * w in place, dropping the term if it cancels.
    void add_term(const GenWord& w, const Scalar& c);

    GenPoly& operator+=(const GenPoly& o);
    GenPoly& operator-=(const GenPoly& o);
    GenPoly& operator*=(const Scalar& s);

    /// The homogeneous component of degree n.
    GenPoly homogeneous(std::size_t n) const;

    bool operator==(const GenPoly& o) const { return terms_ == o.terms_; }

private:
    AlgebraPtr alg_;
    Terms terms_;
};

GenPoly operator+(GenPoly p, const GenPoly& q);
GenPoly operator-(GenPoly p, const GenPoly& q);
GenPoly operator-(GenPoly p);
GenPoly operator*(const GenPoly& p, const GenPoly& q);
GenPoly operator*(GenPoly p, const Scalar& s);
GenPoly operator*(const Scalar& s, GenPoly p);
/// Constant factors on either side.
GenPoly operator*(const Quat& d, const GenPoly& p);
GenPoly operator*(const GenPoly& p, const Quat& d);

GenPoly pow(const GenPoly& p, unsigned exponent);

/// The substitution homomorphism S_d : D_G[z] -> D.
Quat substitute(const GenPoly& p, const Quat& d);

/// P -> (-P + i P i^-1 + j P j^-1 + ij P (ij)^-1) / 2; the polynomial whose
/// value at every point is the conjugate of P's value there.
GenPoly conjugate(const GenPoly& p);

}  // namespace quatpoly
