#pragma once

// Integer arithmetic for algebras whose structure constants a, b are
// integers. Hot loops clear denominators once and work in mpz, which avoids
// a gcd per operation.

#include <array>

#include <gmpxx.h>

#include "quatpoly/algebra.hpp"

namespace quatpoly::detail {

inline bool is_integral(const Scalar& s) { return s.get_den() == 1; }

inline bool has_integral_structure(const Algebra& alg) {
    return is_integral(alg.a()) && is_integral(alg.b());
}

struct ZQuat {
    std::array<mpz_class, 4> c;
};

/// Basis structure constants as integers; valid only for integral algebras.
class IntegralTable {
public:
    explicit IntegralTable(const Algebra& alg) {
        for (BasisIndex x = 0; x < 4; ++x)
            for (BasisIndex y = 0; y < 4; ++y) {
                const BasisProduct& bp = alg.basis_product(x, y);
                scale_[x][y] = bp.scale.get_num();
                index_[x][y] = bp.index;
            }
    }

    const mpz_class& scale(BasisIndex x, BasisIndex y) const { return scale_[x][y]; }
    BasisIndex index(BasisIndex x, BasisIndex y) const { return index_[x][y]; }

    /// r += p * q
    void mul_add(ZQuat& r, const ZQuat& p, const ZQuat& q, mpz_class& tmp) const {
        for (BasisIndex x = 0; x < 4; ++x) {
            if (sgn(p.c[x]) == 0) continue;
            for (BasisIndex y = 0; y < 4; ++y) {
                if (sgn(q.c[y]) == 0) continue;
                mpz_mul(tmp.get_mpz_t(), p.c[x].get_mpz_t(), q.c[y].get_mpz_t());
                mpz_addmul(r.c[index_[x][y]].get_mpz_t(), tmp.get_mpz_t(),
                           scale_[x][y].get_mpz_t());
            }
        }
    }

private:
    std::array<std::array<mpz_class, 4>, 4> scale_;
    std::array<std::array<BasisIndex, 4>, 4> index_{};
};

}  // namespace quatpoly::detail
