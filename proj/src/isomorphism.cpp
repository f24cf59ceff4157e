#include "quatpoly/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "integral.hpp"

namespace quatpoly {

namespace {

// Expands c e_{b0} z e_{b1} ... z e_{bn} under z -> sum_m e_{m-1} x_m,
// walking every choice of variable and folding basis products as we go.
void expand_word(const Algebra& alg, const GenWord& w, std::size_t pos, BasisIndex basis,
                 Scalar scale, std::vector<std::uint8_t>& vars, FreePoly& out) {
    if (pos == w.length()) {
        out.add_term(FreeWord(basis, vars), scale);
        return;
    }
    for (std::uint8_t m = 1; m <= kNumVars; ++m) {
        const BasisProduct& with_var = alg.basis_product(basis, BasisIndex(m - 1));
        const BasisProduct& with_next = alg.basis_product(with_var.index, w[pos]);
        vars.push_back(m);
        expand_word(alg, w, pos + 1, with_next.index, scale * with_var.scale * with_next.scale,
                    vars, out);
        vars.pop_back();
    }
}

std::array<Quat, kNumVars + 1> linear_coefficients(const GenPoly& p) {
    FreePoly image = h_map(p);
    std::array<Quat, kNumVars + 1> d;
    for (std::uint8_t m = 1; m <= kNumVars; ++m) d[m] = image.linear_coefficient(m);
    return d;
}

struct Search {
    const AlgebraPtr& alg;
    std::uint8_t k;
    std::size_t degenerate_states = 0;

    // p' = left p right - p
    GenPoly step(const GenPoly& p, const Quat& left, const Quat& right) const {
        return left * p * right - p;
    }

    std::optional<std::pair<GenPoly, std::size_t>> run(const GenPoly& p, std::size_t depth) {
        const Algebra& a = *alg;
        auto d = linear_coefficients(p);
        const Quat& c = d[k];
        if (c.is_zero()) return std::nullopt;

        std::size_t live = 0;
        for (std::uint8_t m = 1; m <= kNumVars; ++m) live += d[m].is_zero() ? 0 : 1;
        if (live == 1) return std::make_pair(a.inv(c) * p, depth);

        auto descend = [&](const GenPoly& next) -> std::optional<std::pair<GenPoly, std::size_t>> {
            auto nd = linear_coefficients(next);
            std::size_t next_live = 0;
            for (std::uint8_t m = 1; m <= kNumVars; ++m) next_live += nd[m].is_zero() ? 0 : 1;
            if (nd[k].is_zero() || next_live >= live) return std::nullopt;
            return run(next, depth + 1);
        };

        bool rule_one = false;
        for (std::uint8_t m = 1; m <= kNumVars; ++m) {
            if (m == k || d[m].is_zero()) continue;
            if (a.commutator(d[m], c).is_zero()) continue;
            rule_one = true;
            if (auto found = descend(step(p, d[m], a.inv(d[m])))) return found;
        }
        if (rule_one) return std::nullopt;

        bool rule_two = false;
        for (std::uint8_t m = 1; m <= kNumVars; ++m) {
            if (m == k || d[m].is_zero()) continue;
            const Quat target_inv = a.inv(d[m]);
            const Quat ratio = a.mul(c, target_inv);
            if (ratio.is_central()) continue;
            for (BasisIndex conj : {kI, kJ, kIJ}) {
                const Quat u = Quat::basis(conj);
                if (a.commutator(u, ratio).is_zero()) continue;
                rule_two = true;
                if (auto found = descend(step(p, a.mul(d[m], u), a.mul(target_inv, a.inv(u)))))
                    return found;
            }
        }
        if (!rule_two) ++degenerate_states;
        return std::nullopt;
    }
};

using PreimageTable = std::array<GenPoly, kNumVars>;

struct ParamsLess {
    bool operator()(const AlgebraParams& x, const AlgebraParams& y) const {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

}  // namespace

FreePoly h_map(const GenPoly& p) {
    const Algebra& alg = *p.algebra();
    FreePoly out(p.algebra());
    std::vector<std::uint8_t> vars;
    for (const auto& [w, c] : p.terms()) {
        vars.clear();
        expand_word(alg, w, 1, w.front(), c, vars, out);
    }
    return out;
}

PreimageSearch find_preimage(const AlgebraPtr& alg, std::uint8_t k) {
    if (k < 1 || k > kNumVars) throw Error(ErrorKind::InvalidParams, "generator index must be 1..4");
    Search search{alg, k};
    auto found = search.run(GenPoly::z(alg), 0);
    if (!found)
        throw Error(ErrorKind::AlgorithmFailure,
                    "annihilation search exhausted for x" + std::to_string(k) + " (" +
                        std::to_string(search.degenerate_states) + " degenerate states)");
    if (!(h_map(found->first) == FreePoly::var(alg, k)))
        throw Error(ErrorKind::InternalInvariant, "preimage does not map to its generator");
    return PreimageSearch{std::move(found->first), found->second, search.degenerate_states};
}

const GenPoly& preimage_generator(const AlgebraPtr& alg, std::uint8_t k) {
    if (k < 1 || k > kNumVars) throw Error(ErrorKind::InvalidParams, "generator index must be 1..4");
    static std::mutex mutex;
    static std::map<AlgebraParams, std::unique_ptr<const PreimageTable>, ParamsLess> cache;

    const PreimageTable* table = nullptr;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(alg->params());
        if (it == cache.end()) {
            auto fresh = std::make_unique<PreimageTable>(PreimageTable{
                find_preimage(alg, 1).preimage, find_preimage(alg, 2).preimage,
                find_preimage(alg, 3).preimage, find_preimage(alg, 4).preimage});
            it = cache.emplace(alg->params(), std::move(fresh)).first;
        }
        table = it->second.get();
    }
    return (*table)[k - 1];
}

namespace {

using Item = std::pair<FreeWord, Scalar>;

// h^-1 of sum c x_w over Q-coefficients, factoring out the first variable:
// R = r0 + sum_k x_k R_k  maps to  r0 + sum_k q_k h^-1(R_k).
GenPoly invert_central(const AlgebraPtr& alg, const std::vector<Item>& items) {
    GenPoly out(alg);
    std::array<std::vector<Item>, kNumVars> rest;
    for (const auto& [w, c] : items) {
        if (w.degree() == 0) {
            out.add_term(GenWord{kOne}, c);
        } else {
            rest[w.var(0) - 1].emplace_back(w.drop_first(), c);
        }
    }
    for (std::uint8_t m = 1; m <= kNumVars; ++m) {
        if (rest[m - 1].empty()) continue;
        out += preimage_generator(alg, m) * invert_central(alg, rest[m - 1]);
    }
    return out;
}

// Dense integer route for integral algebras and moderate degree. A
// homogeneous degree-n result is a vector over all 4^(n+1) words, indexed by
// the packed word bits.
constexpr std::size_t kDenseMaxDegree = 10;

using ZItem = std::pair<FreeWord, mpz_class>;

struct DenseInverse {
    const detail::IntegralTable& table;
    // Integer multiples D q_k of the generator preimages (all of degree 1).
    std::array<std::vector<std::pair<GenWord, mpz_class>>, kNumVars> scaled_preimages;

    std::vector<mpz_class> run(const std::vector<ZItem>& items, std::size_t n) const {
        std::vector<mpz_class> out(std::size_t{1} << (2 * (n + 1)));
        if (n == 0) {
            for (const auto& [w, c] : items) out[0] += c;
            return out;
        }
        std::array<std::vector<ZItem>, kNumVars> rest;
        for (const auto& [w, c] : items) rest[w.var(0) - 1].emplace_back(w.drop_first(), c);

        const std::size_t block = std::size_t{1} << (2 * (n - 1));
        mpz_class s;
        for (std::uint8_t m = 1; m <= kNumVars; ++m) {
            if (rest[m - 1].empty()) continue;
            std::vector<mpz_class> tail = run(rest[m - 1], n - 1);
            // (e_u0 z e_u1) * (e_f z ...) = scale * e_u0 z e_g z ...
            for (const auto& [u, cu] : scaled_preimages[m - 1]) {
                for (BasisIndex f = 0; f < 4; ++f) {
                    s = cu * table.scale(u.back(), f);
                    const BasisIndex g = table.index(u.back(), f);
                    const mpz_class* src = tail.data() + f * block;
                    mpz_class* dst = out.data() + (std::size_t{u.front()} * 4 + g) * block;
                    for (std::size_t t = 0; t < block; ++t)
                        if (sgn(src[t]) != 0)
                            mpz_addmul(dst[t].get_mpz_t(), src[t].get_mpz_t(), s.get_mpz_t());
                }
            }
        }
        return out;
    }
};

GenPoly invert_central_dense(const AlgebraPtr& alg, const std::vector<Item>& items) {
    const detail::IntegralTable table(*alg);
    DenseInverse engine{table, {}};
    mpz_class scale = 1;
    for (std::uint8_t m = 1; m <= kNumVars; ++m)
        for (const auto& [w, c] : preimage_generator(alg, m).terms())
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    for (std::uint8_t m = 1; m <= kNumVars; ++m)
        for (const auto& [w, c] : preimage_generator(alg, m).terms())
            engine.scaled_preimages[m - 1].emplace_back(w, Scalar(c * scale).get_num());

    std::size_t top = 0;
    for (const auto& [w, c] : items) top = std::max(top, w.degree());
    std::vector<std::vector<ZItem>> by_degree(top + 1);
    std::vector<mpz_class> common(top + 1, mpz_class(1));
    for (const auto& [w, c] : items)
        mpz_lcm(common[w.degree()].get_mpz_t(), common[w.degree()].get_mpz_t(),
                c.get_den_mpz_t());
    for (const auto& [w, c] : items)
        by_degree[w.degree()].emplace_back(w, Scalar(c * common[w.degree()]).get_num());

    GenPoly::Terms terms;
    for (std::size_t n = 0; n <= top; ++n) {
        if (by_degree[n].empty()) continue;
        std::vector<mpz_class> dense = engine.run(by_degree[n], n);
        mpz_class den;
        mpz_pow_ui(den.get_mpz_t(), scale.get_mpz_t(), n);
        den *= common[n];
        std::vector<BasisIndex> word(n + 1);
        for (std::size_t idx = 0; idx < dense.size(); ++idx) {
            if (sgn(dense[idx]) == 0) continue;
            for (std::size_t t = 0; t <= n; ++t)
                word[t] = static_cast<BasisIndex>((idx >> (2 * (n - t))) & 3u);
            Scalar c(dense[idx], den);
            c.canonicalize();
            terms.emplace_hint(terms.end(), GenWord(word), std::move(c));
        }
    }
    return GenPoly::from_terms(alg, std::move(terms));
}

}  // namespace

GenPoly h_inv(const FreePoly& q) {
    const AlgebraPtr& alg = q.algebra();
    std::array<std::vector<Item>, kBasisSize> by_basis;
    for (const auto& [w, c] : q.terms()) by_basis[w.basis()].emplace_back(w.with_basis(kOne), c);
    const bool dense = detail::has_integral_structure(*alg) && q.degree().value_or(0) <= kDenseMaxDegree;

    GenPoly out(alg);
    for (BasisIndex b = 0; b < kBasisSize; ++b) {
        if (by_basis[b].empty()) continue;
        GenPoly part = dense ? invert_central_dense(alg, by_basis[b]) : invert_central(alg, by_basis[b]);
        if (b == kOne) {
            out += part;
        } else {
            out += Quat::basis(b) * part;
        }
    }
    return out;
}

}  // namespace quatpoly
