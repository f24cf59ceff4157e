#include "quatpoly/matquat.hpp"

#include <cmath>
#include <utility>

namespace quatpoly {

namespace {

void require_same_shape(const MatD& x, const MatD& y) {
    require_same_algebra(*x.algebra(), *y.algebra());
    if (x.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "matrix dimensions differ");
}

}  // namespace

MatD::MatD(AlgebraPtr alg, std::size_t k) : alg_(std::move(alg)), k_(k), entries_(k * k) {}

MatD::MatD(AlgebraPtr alg, std::size_t k, std::vector<Quat> entries)
    : alg_(std::move(alg)), k_(k), entries_(std::move(entries)) {
    if (entries_.size() != k * k) throw Error(ErrorKind::NonSquare, "entry count is not k*k");
}

MatD MatD::identity(AlgebraPtr alg, std::size_t k) {
    return scalar(std::move(alg), k, Quat::scalar(1));
}

MatD MatD::scalar(AlgebraPtr alg, std::size_t k, const Quat& lambda) {
    MatD r(std::move(alg), k);
    for (std::size_t t = 0; t < k; ++t) r.at(t, t) = lambda;
    return r;
}

MatD MatD::block(std::size_t r0, std::size_t c0, std::size_t s) const {
    if (r0 + s > k_ || c0 + s > k_) throw Error(ErrorKind::DimensionMismatch, "block out of range");
    MatD r(alg_, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

MatD operator+(const MatD& x, const MatD& y) {
    require_same_shape(x, y);
    MatD r = x;
    for (std::size_t t = 0; t < x.entries().size(); ++t)
        r.at(t / x.size(), t % x.size()) += y.entries()[t];
    return r;
}

MatD operator-(const MatD& x, const MatD& y) {
    require_same_shape(x, y);
    MatD r = x;
    for (std::size_t t = 0; t < x.entries().size(); ++t)
        r.at(t / x.size(), t % x.size()) -= y.entries()[t];
    return r;
}

MatD operator*(const MatD& x, const MatD& y) {
    require_same_shape(x, y);
    const Algebra& alg = *x.algebra();
    const std::size_t k = x.size();
    MatD r(x.algebra(), k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            const Quat& xil = x.at(i, l);
            if (xil.is_zero()) continue;
            for (std::size_t j = 0; j < k; ++j) r.at(i, j) += alg.mul(xil, y.at(l, j));
        }
    return r;
}

MatD operator*(const Quat& d, const MatD& x) {
    MatD r = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r.at(i, j) = x.algebra()->mul(d, x.at(i, j));
    return r;
}

MatD operator*(const Scalar& s, const MatD& x) {
    MatD r = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r.at(i, j) *= s;
    return r;
}

std::vector<Quat> mat_vec(const MatD& x, const std::vector<Quat>& v) {
    if (v.size() != x.size()) throw Error(ErrorKind::DimensionMismatch, "vector length differs");
    std::vector<Quat> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t l = 0; l < x.size(); ++l) r[i] += x.algebra()->mul(x.at(i, l), v[l]);
    return r;
}

MatD shift(const MatD& x, const Quat& lambda) {
    MatD r = x;
    for (std::size_t t = 0; t < x.size(); ++t) r.at(t, t) -= lambda;
    return r;
}

MatK embed_matrix(const MatD& x) {
    const std::size_t k = x.size();
    const Scalar& b = x.algebra()->b();
    MatK r(2 * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto [z1, z2] = Algebra::split(x.at(i, j));
            r.at(i, j) = z1;
            r.at(i, k + j) = b * z2;
            r.at(k + i, j) = z2.conj();
            r.at(k + i, k + j) = z1.conj();
        }
    return r;
}

CommMatrix to_comm(const MatK& x, const AlgebraPtr& alg) {
    CommMatrix r{x.m, {}};
    r.entries.reserve(x.entries.size());
    for (const auto& e : x.entries) r.entries.push_back(CommPoly::constant(alg, e));
    return r;
}

KElem det(const MatK& x, const AlgebraPtr& alg) {
    CommPoly d = det(to_comm(x, alg), alg);
    if (d.is_zero()) return KElem{};
    return d.terms().begin()->second;
}

Scalar reduced_norm(const MatD& x) {
    KElem d = det(embed_matrix(x), x.algebra());
    if (sgn(d.v) != 0)
        throw Error(ErrorKind::InternalInvariant, "reduced norm has a nonzero i-part");
    return d.u;
}

double dieudonne_det(const MatD& x) {
    if (!x.algebra()->is_definite())
        throw Error(ErrorKind::UnsupportedAlgebra,
                    "Dieudonne determinant requires a < 0 and b < 0");
    return std::sqrt(reduced_norm(x).get_d());
}

bool is_invertible(const MatD& x) { return sgn(reduced_norm(x)) != 0; }

MatD inverse(const MatD& x) {
    const Algebra& alg = *x.algebra();
    const std::size_t k = x.size();
    MatD work = x;
    MatD inv = MatD::identity(x.algebra(), k);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        while (pivot < k && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == k) throw Error(ErrorKind::NotInvertible, "matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < k; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        // Row operations act from the left: row <- p^-1 row.
        const Quat pinv = alg.inv(work.at(col, col));
        for (std::size_t j = 0; j < k; ++j) {
            work.at(col, j) = alg.mul(pinv, work.at(col, j));
            inv.at(col, j) = alg.mul(pinv, inv.at(col, j));
        }
        for (std::size_t r = 0; r < k; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            const Quat f = work.at(r, col);
            for (std::size_t j = 0; j < k; ++j) {
                work.at(r, j) -= alg.mul(f, work.at(col, j));
                inv.at(r, j) -= alg.mul(f, inv.at(col, j));
            }
        }
    }
    return inv;
}

}  // namespace quatpoly
