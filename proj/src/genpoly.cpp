#include "quatpoly/genpoly.hpp"

#include <string>

#include "integral.hpp"

namespace quatpoly {

namespace {

std::uint64_t low_mask(std::size_t nbits) {
    return nbits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << nbits) - 1;
}

void check_length(std::size_t len) {
    if (len == 0 || len > GenWord::kMaxDegree + 1)
        throw Error(ErrorKind::DegreeOverflow,
                    "general polynomial degree exceeds " + std::to_string(GenWord::kMaxDegree));
}

}  // namespace

GenWord::GenWord(std::span<const BasisIndex> indices) {
    check_length(indices.size());
    len_ = static_cast<std::uint8_t>(indices.size());
    for (BasisIndex b : indices) {
        if (b > 3) throw Error(ErrorKind::InvalidParams, "basis index out of range");
        bits_ = (bits_ << 2) | b;
    }
}

std::vector<BasisIndex> GenWord::indices() const {
    std::vector<BasisIndex> out(len_);
    for (std::size_t t = 0; t < len_; ++t) out[t] = (*this)[t];
    return out;
}

GenWord GenWord::join(const GenWord& u, const GenWord& v, BasisIndex merged) {
    std::size_t len = std::size_t{u.len_} + v.len_ - 1;
    check_length(len);
    std::size_t tail = 2 * (std::size_t{v.len_} - 1);
    GenWord w;
    w.len_ = static_cast<std::uint8_t>(len);
    std::uint64_t head = (u.bits_ & ~std::uint64_t{3}) | merged;
    w.bits_ = (tail >= 64 ? 0 : head << tail) | (v.bits_ & low_mask(tail));
    return w;
}

GenWord GenWord::with_front(BasisIndex b) const {
    GenWord w = *this;
    std::size_t shift = 2 * (std::size_t{len_} - 1);
    w.bits_ = (bits_ & ~(std::uint64_t{3} << shift)) | (std::uint64_t{b} << shift);
    return w;
}

GenWord GenWord::with_back(BasisIndex b) const {
    GenWord w = *this;
    w.bits_ = (bits_ & ~std::uint64_t{3}) | b;
    return w;
}

GenPoly GenPoly::constant(AlgebraPtr alg, const Quat& d) {
    GenPoly p(std::move(alg));
    for (BasisIndex b = 0; b < 4; ++b)
        if (sgn(d.c[b]) != 0) p.terms_.emplace(GenWord{b}, d.c[b]);
    return p;
}

GenPoly GenPoly::constant(AlgebraPtr alg, const Scalar& s) {
    return constant(std::move(alg), Quat::scalar(s));
}

GenPoly GenPoly::z(AlgebraPtr alg) {
    return monomial(std::move(alg), GenWord{kOne, kOne}, 1);
}

GenPoly GenPoly::monomial(AlgebraPtr alg, const GenWord& w, const Scalar& c) {
    GenPoly p(std::move(alg));
    p.add_term(w, c);
    return p;
}

GenPoly GenPoly::from_terms(AlgebraPtr alg, Terms terms) {
    std::erase_if(terms, [](const auto& term) { return sgn(term.second) == 0; });
    GenPoly p(std::move(alg));
    p.terms_ = std::move(terms);
    return p;
}

std::optional<std::size_t> GenPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
}

void GenPoly::add_term(const GenWord& w, const Scalar& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

GenPoly& GenPoly::operator+=(const GenPoly& o) {
    require_same_algebra(*alg_, *o.alg_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

GenPoly& GenPoly::operator-=(const GenPoly& o) {
    require_same_algebra(*alg_, *o.alg_);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

GenPoly& GenPoly::operator*=(const Scalar& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

GenPoly GenPoly::homogeneous(std::size_t n) const {
    GenPoly out(alg_);
    for (const auto& [w, c] : terms_)
        if (w.degree() == n) out.terms_.emplace_hint(out.terms_.end(), w, c);
    return out;
}

GenPoly operator+(GenPoly p, const GenPoly& q) { return p += q; }
GenPoly operator-(GenPoly p, const GenPoly& q) { return p -= q; }
GenPoly operator-(GenPoly p) { return p *= Scalar(-1); }
GenPoly operator*(GenPoly p, const Scalar& s) { return p *= s; }
GenPoly operator*(const Scalar& s, GenPoly p) { return p *= s; }

GenPoly operator*(const GenPoly& p, const GenPoly& q) {
    require_same_algebra(*p.algebra(), *q.algebra());
    const Algebra& alg = *p.algebra();
    GenPoly r(p.algebra());
    Scalar t;
    for (const auto& [u, cu] : p.terms()) {
        for (const auto& [v, cv] : q.terms()) {
            const BasisProduct& bp = alg.basis_product(u.back(), v.front());
            t = cu * cv;
            t *= bp.scale;
            r.add_term(GenWord::join(u, v, bp.index), t);
        }
    }
    return r;
}

GenPoly operator*(const Quat& d, const GenPoly& p) {
    return GenPoly::constant(p.algebra(), d) * p;
}

GenPoly operator*(const GenPoly& p, const Quat& d) {
    return p * GenPoly::constant(p.algebra(), d);
}

GenPoly pow(const GenPoly& p, unsigned exponent) {
    GenPoly result = GenPoly::constant(p.algebra(), Scalar(1));
    GenPoly base = p;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

namespace {

using TermPtr = const GenPoly::Terms::value_type*;

// Evaluates sum c * e_{w[t]} d e_{w[t+1]} ... d e_{w[L-1]} over a run of
// same-length words sharing their first t indices. Runs with equal index at
// position t are contiguous because words sort with the front index most
// significant.
Quat eval_run(const Algebra& alg, std::span<const TermPtr> run, std::size_t t,
              const std::array<Quat, 4>& basis_times_d) {
    Quat r;
    std::size_t len = run.front()->first.length();
    if (t + 1 == len) {
        for (TermPtr term : run) r.c[term->first.back()] += term->second;
        return r;
    }
    std::size_t start = 0;
    while (start < run.size()) {
        BasisIndex b = run[start]->first[t];
        std::size_t stop = start + 1;
        while (stop < run.size() && run[stop]->first[t] == b) ++stop;
        Quat tail = eval_run(alg, run.subspan(start, stop - start), t + 1, basis_times_d);
        r += alg.mul(basis_times_d[b], tail);
        start = stop;
    }
    return r;
}

// Integer variant of eval_run: numerators[t] belongs to run[t].
detail::ZQuat eval_run_integral(const detail::IntegralTable& table, std::span<const TermPtr> run,
                                std::span<const mpz_class> numerators, std::size_t t,
                                const std::array<detail::ZQuat, 4>& basis_times_d, mpz_class& tmp) {
    detail::ZQuat r;
    std::size_t len = run.front()->first.length();
    if (t + 1 == len) {
        for (std::size_t s = 0; s < run.size(); ++s) r.c[run[s]->first.back()] += numerators[s];
        return r;
    }
    std::size_t start = 0;
    while (start < run.size()) {
        BasisIndex b = run[start]->first[t];
        std::size_t stop = start + 1;
        while (stop < run.size() && run[stop]->first[t] == b) ++stop;
        detail::ZQuat tail =
            eval_run_integral(table, run.subspan(start, stop - start),
                              numerators.subspan(start, stop - start), t + 1, basis_times_d, tmp);
        table.mul_add(r, basis_times_d[b], tail, tmp);
        start = stop;
    }
    return r;
}

Quat substitute_integral(const Algebra& alg, std::span<const TermPtr> ordered, const Quat& d) {
    const detail::IntegralTable table(alg);
    mpz_class d_den = 1;
    for (const auto& x : d.c) mpz_lcm(d_den.get_mpz_t(), d_den.get_mpz_t(), x.get_den_mpz_t());
    detail::ZQuat scaled_d;
    for (std::size_t t = 0; t < 4; ++t) scaled_d.c[t] = Scalar(d.c[t] * d_den).get_num();
    std::array<detail::ZQuat, 4> basis_times_d;
    mpz_class tmp;
    for (BasisIndex b = 0; b < 4; ++b) {
        detail::ZQuat e;
        e.c[b] = 1;
        table.mul_add(basis_times_d[b], e, scaled_d, tmp);
    }

    Quat r;
    std::vector<mpz_class> numerators;
    std::size_t start = 0;
    while (start < ordered.size()) {
        std::size_t len = ordered[start]->first.length();
        std::size_t stop = start + 1;
        while (stop < ordered.size() && ordered[stop]->first.length() == len) ++stop;

        mpz_class common = 1;
        for (std::size_t t = start; t < stop; ++t)
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), ordered[t]->second.get_den_mpz_t());
        numerators.resize(stop - start);
        for (std::size_t t = start; t < stop; ++t) {
            const Scalar& c = ordered[t]->second;
            mpz_divexact(tmp.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
            numerators[t - start] = c.get_num() * tmp;
        }
        detail::ZQuat sum = eval_run_integral(table, ordered.subspan(start, stop - start),
                                              numerators, 0, basis_times_d, tmp);
        // Degree len-1 words carry d_den^(len-1) from the scaled value.
        mpz_class den;
        mpz_pow_ui(den.get_mpz_t(), d_den.get_mpz_t(), len - 1);
        den *= common;
        for (std::size_t t = 0; t < 4; ++t) {
            Scalar part(sum.c[t], den);
            part.canonicalize();
            r.c[t] += part;
        }
        start = stop;
    }
    return r;
}

}  // namespace

Quat substitute(const GenPoly& p, const Quat& d) {
    const Algebra& alg = *p.algebra();
    std::vector<TermPtr> ordered;
    ordered.reserve(p.size());
    for (const auto& term : p.terms()) ordered.push_back(&term);
    if (detail::has_integral_structure(alg)) return substitute_integral(alg, ordered, d);

    std::array<Quat, 4> basis_times_d;
    for (BasisIndex b = 0; b < 4; ++b) basis_times_d[b] = alg.mul(Quat::basis(b), d);
    Quat r;
    std::size_t start = 0;
    while (start < ordered.size()) {
        std::size_t len = ordered[start]->first.length();
        std::size_t stop = start + 1;
        while (stop < ordered.size() && ordered[stop]->first.length() == len) ++stop;
        r += eval_run(alg, std::span<const TermPtr>(ordered).subspan(start, stop - start), 0,
                      basis_times_d);
        start = stop;
    }
    return r;
}

GenPoly conjugate(const GenPoly& p) {
    const Algebra& alg = *p.algebra();
    GenPoly r = -p;
    Scalar t;
    for (BasisIndex x : {kI, kJ, kIJ}) {
        // e_x^{-1} = e_x / e_x^2
        Scalar inv_square = 1 / alg.basis_product(x, x).scale;
        for (const auto& [w, c] : p.terms()) {
            const BasisProduct& left = alg.basis_product(x, w.front());
            GenWord mid = w.with_front(left.index);
            const BasisProduct& right = alg.basis_product(mid.back(), x);
            t = c * left.scale;
            t *= right.scale;
            t *= inv_square;
            r.add_term(mid.with_back(right.index), t);
        }
    }
    return r * Scalar(1, 2);
}

}  // namespace quatpoly
