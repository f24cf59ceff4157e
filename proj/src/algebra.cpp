#include "quatpoly/algebra.hpp"

#include <string>

namespace quatpoly {

std::string_view kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::DegreeOverflow: return "DegreeOverflow";
        case ErrorKind::NotInBaseField: return "NotInBaseField";
        case ErrorKind::Degenerate: return "Degenerate";
        case ErrorKind::AlgorithmFailure: return "AlgorithmFailure";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::InternalInvariant: return "InternalInvariant";
        case ErrorKind::UnsupportedAlgebra: return "UnsupportedAlgebra";
        case ErrorKind::BlockNotInvertible: return "BlockNotInvertible";
        case ErrorKind::OffDiagonalZero: return "OffDiagonalZero";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::DivisionByZeroLiteral: return "DivisionByZeroLiteral";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::MissingAlgebra: return "MissingAlgebra";
        case ErrorKind::Io: return "Io";
        case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

Quat Quat::basis(BasisIndex index, const Scalar& s) {
    Quat q;
    q.c[index] = s;
    return q;
}

bool Quat::is_zero() const {
    for (const auto& x : c)
        if (sgn(x) != 0) return false;
    return true;
}

bool Quat::is_central() const {
    return sgn(c[1]) == 0 && sgn(c[2]) == 0 && sgn(c[3]) == 0;
}

Quat& Quat::operator+=(const Quat& o) {
    for (std::size_t t = 0; t < 4; ++t) c[t] += o.c[t];
    return *this;
}

Quat& Quat::operator-=(const Quat& o) {
    for (std::size_t t = 0; t < 4; ++t) c[t] -= o.c[t];
    return *this;
}

Quat& Quat::operator*=(const Scalar& s) {
    for (auto& x : c) x *= s;
    return *this;
}

Quat operator+(Quat p, const Quat& q) { return p += q; }
Quat operator-(Quat p, const Quat& q) { return p -= q; }
Quat operator-(Quat p) {
    for (auto& x : p.c) x = -x;
    return p;
}
Quat operator*(Quat p, const Scalar& s) { return p *= s; }
Quat operator*(const Scalar& s, Quat p) { return p *= s; }

KElem& KElem::operator+=(const KElem& o) {
    u += o.u;
    v += o.v;
    return *this;
}

KElem& KElem::operator-=(const KElem& o) {
    u -= o.u;
    v -= o.v;
    return *this;
}

KElem operator+(KElem x, const KElem& y) { return x += y; }
KElem operator-(KElem x, const KElem& y) { return x -= y; }
KElem operator-(KElem x) { return {-x.u, -x.v}; }
KElem operator*(const Scalar& s, const KElem& x) { return {s * x.u, s * x.v}; }

Algebra::Algebra(AlgebraParams params) : params_(std::move(params)) {
    if (sgn(params_.a) == 0 || sgn(params_.b) == 0)
        throw Error(ErrorKind::InvalidParams, "structure constants a and b must be nonzero");

    const Scalar& a = params_.a;
    const Scalar& b = params_.b;
    auto set = [&](BasisIndex x, BasisIndex y, Scalar s, BasisIndex idx) {
        table_[x][y] = BasisProduct{std::move(s), idx};
    };
    for (BasisIndex y = 0; y < 4; ++y) {
        set(kOne, y, 1, y);
        set(y, kOne, 1, y);
    }
    set(kI, kI, a, kOne);
    set(kI, kJ, 1, kIJ);
    set(kI, kIJ, a, kJ);
    set(kJ, kI, -1, kIJ);
    set(kJ, kJ, b, kOne);
    set(kJ, kIJ, -b, kI);
    set(kIJ, kI, -a, kJ);
    set(kIJ, kJ, b, kI);
    set(kIJ, kIJ, -a * b, kOne);
}

AlgebraPtr Algebra::make(const Scalar& a, const Scalar& b) {
    return std::make_shared<const Algebra>(AlgebraParams{a, b});
}

AlgebraPtr Algebra::hamilton() {
    static const AlgebraPtr h = make(-1, -1);
    return h;
}

Quat Algebra::mul(const Quat& p, const Quat& q) const {
    Quat r;
    Scalar t;
    for (BasisIndex x = 0; x < 4; ++x) {
        if (sgn(p.c[x]) == 0) continue;
        for (BasisIndex y = 0; y < 4; ++y) {
            if (sgn(q.c[y]) == 0) continue;
            const auto& bp = table_[x][y];
            t = p.c[x] * q.c[y];
            t *= bp.scale;
            r.c[bp.index] += t;
        }
    }
    return r;
}

Quat Algebra::conj(const Quat& q) const {
    return Quat(q.c[0], -q.c[1], -q.c[2], -q.c[3]);
}

Scalar Algebra::nrd(const Quat& q) const {
    const Scalar& a = params_.a;
    const Scalar& b = params_.b;
    Scalar r = q.c[0] * q.c[0];
    r -= a * q.c[1] * q.c[1];
    r -= b * q.c[2] * q.c[2];
    r += a * b * q.c[3] * q.c[3];
    return r;
}

Quat Algebra::inv(const Quat& q) const {
    Scalar n = nrd(q);
    if (sgn(n) == 0) throw Error(ErrorKind::NotInvertible, "element has zero reduced norm");
    Quat r = conj(q);
    Scalar ninv = 1 / n;
    return r *= ninv;
}

Quat Algebra::commutator(const Quat& p, const Quat& q) const {
    return mul(p, q) - mul(q, p);
}

KElem Algebra::kmul(const KElem& x, const KElem& y) const {
    return {x.u * y.u + params_.a * x.v * y.v, x.u * y.v + x.v * y.u};
}

KElem Algebra::kinv(const KElem& x) const {
    Scalar n = x.u * x.u - params_.a * x.v * x.v;
    if (sgn(n) == 0) throw Error(ErrorKind::NotInvertible, "element of K has zero norm");
    return {x.u / n, -x.v / n};
}

std::pair<KElem, KElem> Algebra::split(const Quat& q) {
    return {KElem(q.c[0], q.c[1]), KElem(q.c[2], q.c[3])};
}

MatK Algebra::k_embed(const Quat& q) const {
    auto [z1, z2] = split(q);
    MatK r(2);
    r.at(0, 0) = z1;
    r.at(0, 1) = params_.b * z2;
    r.at(1, 0) = z2.conj();
    r.at(1, 1) = z1.conj();
    return r;
}

void require_same_algebra(const Algebra& x, const Algebra& y) {
    if (&x != &y && !(x == y))
        throw Error(ErrorKind::AlgebraMismatch, "operands belong to different algebras");
}

MatK mul(const Algebra& alg, const MatK& x, const MatK& y) {
    if (x.m != y.m) throw Error(ErrorKind::DimensionMismatch, "MatK dimensions differ");
    MatK r(x.m);
    for (std::size_t i = 0; i < x.m; ++i)
        for (std::size_t l = 0; l < x.m; ++l) {
            const KElem& xil = x.at(i, l);
            if (xil.is_zero()) continue;
            for (std::size_t j = 0; j < x.m; ++j) r.at(i, j) += alg.kmul(xil, y.at(l, j));
        }
    return r;
}

}  // namespace quatpoly
