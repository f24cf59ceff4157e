#pragma once

// Random instance generators and independent reference implementations
// shared by the unit and acceptance suites.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "quatpoly/algebra.hpp"
#include "quatpoly/eigen.hpp"
#include "quatpoly/freepoly.hpp"
#include "quatpoly/genpoly.hpp"
#include "quatpoly/io.hpp"
#include "quatpoly/matquat.hpp"

namespace quatpoly {

// Readable values in assertion failures.
inline void PrintTo(const Quat& q, std::ostream* os) { *os << format_quat(q); }
inline void PrintTo(const KElem& x, std::ostream* os) {
    *os << format_scalar(x.u) << " + " << format_scalar(x.v) << "*i";
}
inline void PrintTo(const GenPoly& p, std::ostream* os) { *os << format_poly(p); }
inline void PrintTo(const FreePoly& p, std::ostream* os) { *os << format_free(p); }
inline void PrintTo(const CommPoly& p, std::ostream* os) { *os << format_comm(p); }
inline void PrintTo(const MatD& m, std::ostream* os) { *os << matrix_to_json(m); }

}  // namespace quatpoly

namespace qtest {

using namespace quatpoly;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    /// Integer in {-3..3}; with `fractions`, occasionally divided by 2 or 3.
    Scalar scalar(bool fractions = false) {
        Scalar s(uniform(-3, 3));
        if (fractions && uniform(0, 3) == 0) s /= uniform(2, 3);
        return s;
    }

    Scalar nonzero_scalar(bool fractions = false) {
        for (;;) {
            Scalar s = scalar(fractions);
            if (sgn(s) != 0) return s;
        }
    }

    Quat quat(bool fractions = false) {
        return Quat(scalar(fractions), scalar(fractions), scalar(fractions), scalar(fractions));
    }

    Quat invertible_quat(const Algebra& alg, bool fractions = false) {
        for (;;) {
            Quat q = quat(fractions);
            if (sgn(alg.nrd(q)) != 0) return q;
        }
    }

    Coords coords(bool fractions = false) {
        return {scalar(fractions), scalar(fractions), scalar(fractions), scalar(fractions)};
    }

    GenWord gen_word(std::size_t degree) {
        std::vector<BasisIndex> idx(degree + 1);
        for (auto& b : idx) b = static_cast<BasisIndex>(uniform(0, 3));
        return GenWord(idx);
    }

    GenPoly gen_poly(const AlgebraPtr& alg, std::size_t max_degree, int max_terms = 6,
                     bool fractions = false) {
        GenPoly p(alg);
        int n = uniform(1, max_terms);
        for (int t = 0; t < n; ++t)
            p.add_term(gen_word(static_cast<std::size_t>(uniform(0, static_cast<int>(max_degree)))),
                       nonzero_scalar(fractions));
        return p;
    }

    /// Like gen_poly but guaranteed nonzero and containing a term of exactly
    /// `degree`.
    GenPoly gen_poly_of_degree(const AlgebraPtr& alg, std::size_t degree, int max_terms = 6,
                               bool fractions = false) {
        for (;;) {
            GenPoly p = gen_poly(alg, degree, max_terms, fractions);
            p.add_term(gen_word(degree), nonzero_scalar(fractions));
            if (p.degree() == degree) return p;
        }
    }

    FreeWord free_word(std::size_t degree) {
        std::vector<std::uint8_t> vars(degree);
        for (auto& v : vars) v = static_cast<std::uint8_t>(uniform(1, 4));
        return FreeWord(static_cast<BasisIndex>(uniform(0, 3)), vars);
    }

    FreePoly free_poly(const AlgebraPtr& alg, std::size_t max_degree, int max_terms = 6,
                       bool fractions = false) {
        FreePoly p(alg);
        int n = uniform(1, max_terms);
        for (int t = 0; t < n; ++t)
            p.add_term(free_word(static_cast<std::size_t>(uniform(0, static_cast<int>(max_degree)))),
                       nonzero_scalar(fractions));
        return p;
    }

    MatD matrix(const AlgebraPtr& alg, std::size_t k, bool fractions = false) {
        MatD m(alg, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) m.at(r, c) = quat(fractions);
        return m;
    }

    MatD invertible_matrix(const AlgebraPtr& alg, std::size_t k, bool fractions = false) {
        for (;;) {
            MatD m = matrix(alg, k, fractions);
            if (sgn(reduced_norm(m)) != 0) return m;
        }
    }

    /// Random vector whose first coordinate is invertible.
    std::vector<Quat> eigenvector(const Algebra& alg, std::size_t k) {
        std::vector<Quat> v(k);
        v[0] = invertible_quat(alg);
        for (std::size_t t = 1; t < k; ++t) v[t] = quat();
        return v;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// Products written out coordinate by coordinate from i^2 = a, j^2 = b,
// ji = -ij, independent of the library's structure table.
inline Quat mul_ref(const Algebra& alg, const Quat& p, const Quat& q) {
    const Scalar& a = alg.a();
    const Scalar& b = alg.b();
    const auto& [p1, p2, p3, p4] = p.c;
    const auto& [q1, q2, q3, q4] = q.c;
    Scalar r1 = p1 * q1 + a * p2 * q2 + b * p3 * q3 - a * b * p4 * q4;
    Scalar r2 = p1 * q2 + p2 * q1 - b * p3 * q4 + b * p4 * q3;
    Scalar r3 = p1 * q3 + p3 * q1 + a * p2 * q4 - a * p4 * q2;
    Scalar r4 = p1 * q4 + p4 * q1 + p2 * q3 - p3 * q2;
    return Quat(r1, r2, r3, r4);
}

inline Quat pow_ref(const Algebra& alg, const Quat& q, unsigned n) {
    Quat r = Quat::scalar(1);
    for (unsigned t = 0; t < n; ++t) r = mul_ref(alg, r, q);
    return r;
}

inline Scalar nrd_ref(const Algebra& alg, const Quat& q) {
    const auto& [c1, c2, c3, c4] = q.c;
    return c1 * c1 - alg.a() * c2 * c2 - alg.b() * c3 * c3 + alg.a() * alg.b() * c4 * c4;
}

inline Quat inv_ref(const Algebra& alg, const Quat& q) {
    Scalar n = nrd_ref(alg, q);
    return Quat(q.c[0] / n, -q.c[1] / n, -q.c[2] / n, -q.c[3] / n);
}

/// Word-by-word evaluation of P at d.
inline Quat substitute_ref(const GenPoly& p, const Quat& d) {
    const Algebra& alg = *p.algebra();
    Quat sum;
    for (const auto& [w, c] : p.terms()) {
        Quat t = Quat::basis(w[0]);
        for (std::size_t s = 1; s < w.length(); ++s)
            t = mul_ref(alg, mul_ref(alg, t, d), Quat::basis(w[s]));
        sum += c * t;
    }
    return sum;
}

/// h built from the images of its generators and FreePoly multiplication.
inline FreePoly h_map_ref(const GenPoly& p) {
    const AlgebraPtr& alg = p.algebra();
    FreePoly zimg(alg);
    for (std::uint8_t m = 1; m <= 4; ++m)
        zimg += Quat::basis(static_cast<BasisIndex>(m - 1)) * FreePoly::var(alg, m);
    FreePoly out(alg);
    for (const auto& [w, c] : p.terms()) {
        FreePoly t = FreePoly::constant(alg, Quat::basis(w[0]));
        for (std::size_t s = 1; s < w.length(); ++s)
            t = t * zimg * FreePoly::constant(alg, Quat::basis(w[s]));
        out += t * c;
    }
    return out;
}

/// Leibniz expansion over all permutations.
inline CommPoly det_leibniz(const CommMatrix& m, const AlgebraPtr& alg) {
    std::vector<std::size_t> perm(m.m);
    std::iota(perm.begin(), perm.end(), 0);
    CommPoly out(alg);
    do {
        int inversions = 0;
        for (std::size_t s = 0; s < m.m; ++s)
            for (std::size_t t = s + 1; t < m.m; ++t) inversions += perm[s] > perm[t];
        CommPoly term = CommPoly::constant(alg, KElem(inversions % 2 ? -1 : 1));
        for (std::size_t r = 0; r < m.m; ++r) term = term * m.at(r, perm[r]);
        out += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Rank of a matrix over a division algebra by left row reduction.
inline std::size_t rank_ref(const MatD& x) {
    const Algebra& alg = *x.algebra();
    const std::size_t k = x.size();
    std::vector<std::vector<Quat>> rows(k, std::vector<Quat>(k));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) rows[r][c] = x.at(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < k && rank < k; ++c) {
        std::size_t p = rank;
        while (p < k && rows[p][c].is_zero()) ++p;
        if (p == k) continue;
        std::swap(rows[p], rows[rank]);
        Quat inv = inv_ref(alg, rows[rank][c]);
        for (auto& e : rows[rank]) e = mul_ref(alg, inv, e);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Quat f = rows[r][c];
            for (std::size_t t = 0; t < k; ++t) rows[r][t] -= mul_ref(alg, f, rows[rank][t]);
        }
        ++rank;
    }
    return rank;
}

inline bool singular_ref(const MatD& x) { return rank_ref(x) < x.size(); }

inline std::vector<Quat> apply_ref(const MatD& x, const std::vector<Quat>& v) {
    std::vector<Quat> out(x.size());
    for (std::size_t r = 0; r < x.size(); ++r)
        for (std::size_t c = 0; c < x.size(); ++c) out[r] += mul_ref(*x.algebra(), x.at(r, c), v[c]);
    return out;
}

/// Runs a shell command, returning its exit status and standard output.
struct CommandResult {
    int status = -1;
    std::string output;
};

inline CommandResult run_command(const std::string& command) {
    CommandResult r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), n);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

}  // namespace qtest
