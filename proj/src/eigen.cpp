#include "quatpoly/eigen.hpp"

#include <array>
#include <utility>

#include "quatpoly/isomorphism.hpp"

namespace quatpoly {

namespace {

CommPoly linear(const AlgebraPtr& alg, const KElem& constant,
                std::initializer_list<std::pair<std::uint8_t, KElem>> vars) {
    CommPoly p = CommPoly::constant(alg, constant);
    for (const auto& [v, c] : vars) p += CommPoly::constant(alg, c) * CommPoly::var(alg, v);
    return p;
}

// 2x2 matrices with general polynomial entries; factor order is kept as
// written, nothing is commuted past z.
using PolyMat2 = std::array<GenPoly, 4>;

PolyMat2 to_poly(const MatD& x) {
    const AlgebraPtr& alg = x.algebra();
    return {GenPoly::constant(alg, x.at(0, 0)), GenPoly::constant(alg, x.at(0, 1)),
            GenPoly::constant(alg, x.at(1, 0)), GenPoly::constant(alg, x.at(1, 1))};
}

PolyMat2 mul(const PolyMat2& x, const PolyMat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

PolyMat2 minus_z(PolyMat2 x) {
    const GenPoly z = GenPoly::z(x[0].algebra());
    x[0] -= z;
    x[3] -= z;
    return x;
}

}  // namespace

CommMatrix build_symbolic(const MatD& x) {
    const AlgebraPtr& alg = x.algebra();
    const std::size_t k = x.size();
    const Scalar& b = alg->b();
    CommMatrix r = to_comm(embed_matrix(x), alg);

    // embed(lambda) = [[z1, b z2], [conj z2, conj z1]], z1 = x1 + x2 i, z2 = x3 + x4 i
    const KElem one(1), unit_i(0, 1);
    const CommPoly z1 = linear(alg, KElem{}, {{1, one}, {2, unit_i}});
    const CommPoly bz2 = linear(alg, KElem{}, {{3, KElem(b)}, {4, KElem(0, b)}});
    const CommPoly z2_bar = linear(alg, KElem{}, {{3, one}, {4, -unit_i}});
    const CommPoly z1_bar = linear(alg, KElem{}, {{1, one}, {2, -unit_i}});
    for (std::size_t t = 0; t < k; ++t) {
        r.at(t, t) -= z1;
        r.at(t, k + t) -= bz2;
        r.at(k + t, t) -= z2_bar;
        r.at(k + t, k + t) -= z1_bar;
    }
    return r;
}

GenPoly char_poly(const MatD& x) {
    CommPoly d = det(build_symbolic(x), x.algebra());
    return h_inv(lift_to_free(d));
}

bool is_left_eigenvalue(const MatD& x, const Quat& lambda) {
    return sgn(reduced_norm(shift(x, lambda))) == 0;
}

MatD plant_eigenpair(const MatD& base, const std::vector<Quat>& v, const Quat& lambda,
                     std::optional<std::size_t> column) {
    const Algebra& alg = *base.algebra();
    const std::size_t k = base.size();
    if (v.size() != k) throw Error(ErrorKind::DimensionMismatch, "vector length differs");
    std::size_t m = 0;
    if (column) {
        m = *column;
        if (m >= k) throw Error(ErrorKind::DimensionMismatch, "column out of range");
    } else {
        while (m < k && sgn(alg.nrd(v[m])) == 0) ++m;
        if (m == k) throw Error(ErrorKind::NotInvertible, "vector has no invertible coordinate");
    }
    const Quat vm_inv = alg.inv(v[m]);

    MatD r = base;
    for (std::size_t row = 0; row < k; ++row) {
        Quat rhs = alg.mul(lambda, v[row]);
        for (std::size_t l = 0; l < k; ++l)
            if (l != m) rhs -= alg.mul(base.at(row, l), v[l]);
        r.at(row, m) = alg.mul(rhs, vm_inv);
    }
    return r;
}

SchurData schur_sextic(const MatD& x) {
    if (x.size() != 4) throw Error(ErrorKind::DimensionMismatch, "Schur reduction needs a 4x4 matrix");
    const MatD a = x.block(0, 0, 2);
    const MatD b = x.block(0, 2, 2);
    const MatD c = x.block(2, 0, 2);
    const MatD d = x.block(2, 2, 2);
    if (!is_invertible(c))
        throw Error(ErrorKind::BlockNotInvertible, "lower-left block C is singular");

    const PolyMat2 pc = to_poly(c);
    PolyMat2 m = mul(mul(mul(pc, minus_z(to_poly(a))), to_poly(inverse(c))), minus_z(to_poly(d)));
    const PolyMat2 cb = to_poly(c * b);
    for (std::size_t t = 0; t < 4; ++t) m[t] -= cb[t];

    GenPoly e_bar = conjugate(m[0]);
    GenPoly sextic = m[0] * e_bar * m[3] - m[2] * e_bar * m[1];
    return SchurData{std::move(m[0]), std::move(m[1]), std::move(m[2]), std::move(m[3]),
                     std::move(sextic)};
}

bool sextic_eigen_test(const SchurData& s, const Quat& lambda) {
    const Quat e = substitute(s.e, lambda);
    if (!e.is_zero()) return substitute(s.sextic, lambda).is_zero();
    const Algebra& alg = *s.e.algebra();
    return alg.mul(substitute(s.f, lambda), substitute(s.g, lambda)).is_zero();
}

QuadraticReduction quadratic_2x2(const MatD& x) {
    if (x.size() != 2) throw Error(ErrorKind::DimensionMismatch, "quadratic reduction needs a 2x2 matrix");
    const AlgebraPtr& alg = x.algebra();
    const Quat& a = x.at(0, 0);
    const Quat& b = x.at(0, 1);
    const Quat& c = x.at(1, 0);
    const Quat& d = x.at(1, 1);
    if (c.is_zero()) return TriangularEigenvalues{a, d};

    const GenPoly z = GenPoly::z(alg);
    GenPoly left = c * (GenPoly::constant(alg, a) - z);
    GenPoly right = alg->inv(c) * (GenPoly::constant(alg, d) - z);
    return left * right - GenPoly::constant(alg, alg->mul(c, b));
}

}  // namespace quatpoly
