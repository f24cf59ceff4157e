#include "quatpoly/freepoly.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace quatpoly {

Quat quat_from_coords(const Coords& c) { return Quat(c[0], c[1], c[2], c[3]); }

FreeWord::FreeWord(BasisIndex basis, std::span<const std::uint8_t> vars) : basis_(basis) {
    if (basis > 3) throw Error(ErrorKind::InvalidParams, "basis index out of range");
    if (vars.size() > kMaxLength)
        throw Error(ErrorKind::DegreeOverflow,
                    "free word longer than " + std::to_string(kMaxLength));
    len_ = static_cast<std::uint8_t>(vars.size());
    for (std::uint8_t v : vars) {
        if (v < 1 || v > kNumVars) throw Error(ErrorKind::InvalidParams, "variable index out of range");
        bits_ = (bits_ << 2) | std::uint64_t(v - 1);
    }
}

std::vector<std::uint8_t> FreeWord::vars() const {
    std::vector<std::uint8_t> out(len_);
    for (std::size_t t = 0; t < len_; ++t) out[t] = var(t);
    return out;
}

FreeWord FreeWord::concat(const FreeWord& u, const FreeWord& v, BasisIndex basis) {
    std::size_t len = std::size_t{u.len_} + v.len_;
    if (len > kMaxLength)
        throw Error(ErrorKind::DegreeOverflow,
                    "free word longer than " + std::to_string(kMaxLength));
    FreeWord w;
    w.len_ = static_cast<std::uint8_t>(len);
    w.basis_ = basis;
    std::size_t shift = 2 * std::size_t{v.len_};
    w.bits_ = (shift >= 64 ? 0 : u.bits_ << shift) | v.bits_;
    return w;
}

FreeWord FreeWord::drop_first() const {
    FreeWord w = *this;
    if (len_ == 0) return w;
    w.len_ = static_cast<std::uint8_t>(len_ - 1);
    std::size_t nbits = 2 * std::size_t{w.len_};
    w.bits_ = nbits >= 64 ? bits_ : bits_ & ((std::uint64_t{1} << nbits) - 1);
    return w;
}

FreePoly FreePoly::constant(AlgebraPtr alg, const Quat& d) {
    FreePoly p(std::move(alg));
    for (BasisIndex b = 0; b < 4; ++b)
        if (sgn(d.c[b]) != 0) p.terms_.emplace(FreeWord(b, {}), d.c[b]);
    return p;
}

FreePoly FreePoly::var(AlgebraPtr alg, std::uint8_t k) {
    return monomial(std::move(alg), FreeWord(kOne, {k}), 1);
}

FreePoly FreePoly::monomial(AlgebraPtr alg, const FreeWord& w, const Scalar& c) {
    FreePoly p(std::move(alg));
    p.add_term(w, c);
    return p;
}

std::optional<std::size_t> FreePoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

void FreePoly::add_term(const FreeWord& w, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
    require_same_algebra(*alg_, *o.alg_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
    require_same_algebra(*alg_, *o.alg_);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreePoly& FreePoly::operator*=(const Scalar& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

Quat FreePoly::linear_coefficient(std::uint8_t k) const {
    Quat d;
    for (const auto& [w, c] : terms_)
        if (w.degree() == 1 && w.var(0) == k) d.c[w.basis()] += c;
    return d;
}

FreePoly operator+(FreePoly p, const FreePoly& q) { return p += q; }
FreePoly operator-(FreePoly p, const FreePoly& q) { return p -= q; }
FreePoly operator-(FreePoly p) { return p *= Scalar(-1); }
FreePoly operator*(FreePoly p, const Scalar& s) { return p *= s; }

FreePoly operator*(const FreePoly& p, const FreePoly& q) {
    require_same_algebra(*p.algebra(), *q.algebra());
    const Algebra& alg = *p.algebra();
    FreePoly r(p.algebra());
    Scalar t;
    for (const auto& [u, cu] : p.terms()) {
        for (const auto& [v, cv] : q.terms()) {
            const BasisProduct& bp = alg.basis_product(u.basis(), v.basis());
            t = cu * cv;
            t *= bp.scale;
            r.add_term(FreeWord::concat(u, v, bp.index), t);
        }
    }
    return r;
}

FreePoly operator*(const Quat& d, const FreePoly& p) {
    return FreePoly::constant(p.algebra(), d) * p;
}

Quat evaluate(const FreePoly& q, const Coords& coords) {
    Quat r;
    Scalar t;
    for (const auto& [w, c] : q.terms()) {
        t = c;
        for (std::size_t pos = 0; pos < w.degree(); ++pos) t *= coords[w.var(pos) - 1];
        r.c[w.basis()] += t;
    }
    return r;
}

CommPoly CommPoly::constant(AlgebraPtr alg, const KElem& c) {
    CommPoly p(std::move(alg));
    p.add_term(Exponents{}, c);
    return p;
}

CommPoly CommPoly::var(AlgebraPtr alg, std::uint8_t k) {
    if (k < 1 || k > kNumVars) throw Error(ErrorKind::InvalidParams, "variable index out of range");
    CommPoly p(std::move(alg));
    Exponents e{};
    e[k - 1] = 1;
    p.add_term(e, KElem(1));
    return p;
}

std::optional<std::size_t> CommPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max<std::size_t>(d, e[0] + e[1] + e[2] + e[3]);
    return d;
}

void CommPoly::add_term(const Exponents& e, const KElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

void CommPoly::add_product(const CommPoly& x, const CommPoly& y) {
    const Algebra& alg = *alg_;
    for (const auto& [ex, cx] : x.terms_) {
        for (const auto& [ey, cy] : y.terms_) {
            Exponents e;
            for (std::size_t v = 0; v < kNumVars; ++v) {
                unsigned s = unsigned(ex[v]) + ey[v];
                if (s > 255) throw Error(ErrorKind::DegreeOverflow, "exponent exceeds 255");
                e[v] = static_cast<std::uint8_t>(s);
            }
            add_term(e, alg.kmul(cx, cy));
        }
    }
}

KElem CommPoly::evaluate(const Coords& coords) const {
    KElem r;
    Scalar t;
    for (const auto& [e, c] : terms_) {
        t = 1;
        for (std::size_t v = 0; v < kNumVars; ++v)
            for (unsigned n = 0; n < e[v]; ++n) t *= coords[v];
        r += t * c;
    }
    return r;
}

CommPoly CommPoly::conj() const {
    CommPoly r(alg_);
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.conj());
    return r;
}

CommPoly operator+(CommPoly p, const CommPoly& q) { return p += q; }
CommPoly operator-(CommPoly p, const CommPoly& q) { return p -= q; }
CommPoly operator-(CommPoly p) {
    CommPoly r(p.algebra());
    r -= p;
    return r;
}

CommPoly operator*(const CommPoly& p, const CommPoly& q) {
    CommPoly r(p.algebra());
    r.add_product(p, q);
    return r;
}

CommPoly det(const CommMatrix& mat, const AlgebraPtr& alg) {
    const std::size_t m = mat.m;
    if (mat.entries.size() != m * m)
        throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
    if (m > 20) throw Error(ErrorKind::DimensionMismatch, "determinant size limited to 20");

    // minors[S] = det of the last |S| rows restricted to the columns in S.
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    std::vector<CommPoly> minors(std::size_t{full} + 1, CommPoly(alg));
    minors[0] = CommPoly::constant(alg, KElem(1));
    for (std::uint32_t set = 1; set <= full; ++set) {
        std::size_t row = m - static_cast<std::size_t>(std::popcount(set));
        CommPoly& acc = minors[set];
        std::size_t rank = 0;
        for (std::size_t col = 0; col < m; ++col) {
            if (!(set & (std::uint32_t{1} << col))) continue;
            const CommPoly& entry = mat.at(row, col);
            const CommPoly& sub = minors[set & ~(std::uint32_t{1} << col)];
            if (!entry.is_zero() && !sub.is_zero()) {
                if (rank % 2 == 0) {
                    acc.add_product(entry, sub);
                } else {
                    acc.add_product(-entry, sub);
                }
            }
            ++rank;
        }
    }
    return minors[full];
}

FreePoly lift_to_free(const CommPoly& q) {
    FreePoly r(q.algebra());
    for (const auto& [e, c] : q.terms()) {
        if (sgn(c.v) != 0)
            throw Error(ErrorKind::NotInBaseField,
                        "commutative polynomial has a coefficient outside the base field");
        std::vector<std::uint8_t> vars;
        for (std::uint8_t v = 0; v < kNumVars; ++v)
            for (unsigned n = 0; n < e[v]; ++n) vars.push_back(static_cast<std::uint8_t>(v + 1));
        r.add_term(FreeWord(kOne, vars), c.u);
    }
    return r;
}

}  // namespace quatpoly
