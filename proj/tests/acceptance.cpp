// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "quatpoly/eigen.hpp"
#include "quatpoly/io.hpp"
#include "quatpoly/isomorphism.hpp"
#include "support.hpp"

using namespace quatpoly;
using qtest::Rng;

namespace {

constexpr double kRelTol = 1e-9;

const AlgebraPtr H = Algebra::hamilton();

GenPoly P(const std::string& text) { return parse_poly(H, text); }

struct Outcome {
    bool ok = true;
    std::string detail;

    void check(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool rel_close(double x, double y) {
    return std::fabs(x - y) <= kRelTol * std::max({1.0, std::fabs(x), std::fabs(y)});
}

std::string str(const Quat& q) { return format_quat(q); }

Outcome golden() {
    Outcome o;
    const char* expected[] = {
        "1/4*(z - i*z*i - j*z*j - i*j*z*i*j)",
        "-1/4*(i*z + i*j*z*j - j*z*i*j + z*i)",
        "-1/4*(j*z - i*j*z*i + i*z*i*j + z*j)",
        "-1/4*(i*j*z - i*z*j + j*z*i + z*i*j)",
    };
    for (std::uint8_t k = 1; k <= 4; ++k)
        o.check(preimage_generator(H, k) == P(expected[k - 1]),
                "h^-1(x" + std::to_string(k) + ") = " + format_poly(preimage_generator(H, k)));
    FreePoly conj_image = FreePoly::var(H, 1) - Quat::basis(kI) * FreePoly::var(H, 2) -
                          Quat::basis(kJ) * FreePoly::var(H, 3) - Quat::basis(kIJ) * FreePoly::var(H, 4);
    o.check(h_inv(conj_image) == P("-1/2*(z + i*z*i + j*z*j + i*j*z*i*j)"), "h^-1 of conjugate image");
    if (o.ok) o.detail = "4 generator preimages and conj(z) exact";
    return o;
}

Outcome isomorphism_suite() {
    Outcome o;
    Rng rng(1001);
    for (int t = 0; t < 100 && o.ok; ++t) {
        GenPoly p = rng.gen_poly(H, 3);
        o.check(h_inv(h_map(p)) == p, "h^-1(h(P)) != P for " + format_poly(p));
        FreePoly q = rng.free_poly(H, 3);
        o.check(h_map(h_inv(q)) == q, "h(h^-1(Q)) != Q for " + format_free(q));
    }
    for (int t = 0; t < 100 && o.ok; ++t) {
        GenPoly p = rng.gen_poly(H, 3), q = rng.gen_poly(H, 3);
        o.check(h_map(p * q) == h_map(p) * h_map(q), "h(PQ) != h(P)h(Q)");
    }
    for (int t = 0; t < 100 && o.ok; ++t) {
        GenPoly p = rng.gen_poly(H, 3);
        Coords c = rng.coords();
        o.check(evaluate(h_map(p), c) == substitute(p, quat_from_coords(c)), "evaluation compatibility");
    }
    if (o.ok) o.detail = "100 round trips each way, 100 products, 100 evaluations";
    return o;
}

Outcome substitution_homomorphism() {
    Outcome o;
    Rng rng(1002);
    for (int t = 0; t < 200 && o.ok; ++t) {
        GenPoly p = rng.gen_poly(H, 3), q = rng.gen_poly(H, 3);
        Quat d = rng.quat();
        o.check(substitute(p * q, d) == H->mul(substitute(p, d), substitute(q, d)),
                "S_d(PQ) != S_d(P)S_d(Q) at d = " + str(d));
    }
    if (o.ok) o.detail = "200 random (P, Q, d)";
    return o;
}

Outcome master_identity() {
    Outcome o;
    Rng rng(1003);
    int evaluations = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
        for (int m = 0; m < 10 && o.ok; ++m) {
            MatD a = rng.matrix(H, k);
            GenPoly p = char_poly(a);
            o.check(p.degree() == 2 * k, "degree of char_poly for k = " + std::to_string(k));
            for (int s = 0; s < 20 && o.ok; ++s, ++evaluations) {
                Quat lam = rng.quat();
                o.check(substitute(p, lam) == Quat::scalar(reduced_norm(shift(a, lam))),
                        "p_A(lambda) != nrd(A - lambda) at " + str(lam));
            }
        }
    }
    if (o.ok) o.detail = std::to_string(evaluations) + " evaluations, degree 2k for k = 1..3";
    return o;
}

MatD planted(Rng& rng, std::size_t k, Quat& lambda) {
    auto v = rng.eigenvector(*H, k);
    lambda = rng.quat();
    return plant_eigenpair(rng.matrix(H, k), v, lambda);
}

Outcome planted_eigenpairs() {
    Outcome o;
    Rng rng(1004);
    int nonzero = 0;
    for (std::size_t k = 2; k <= 4; ++k) {
        for (int m = 0; m < 10 && o.ok; ++m) {
            Quat lam;
            MatD a = planted(rng, k, lam);
            GenPoly p = char_poly(a);
            o.check(substitute(p, lam).is_zero(), "p_M(lambda) != 0 for planted pair");
            o.check(is_left_eigenvalue(a, lam), "planted lambda not a left eigenvalue");
            for (int s = 0; s < 10 && o.ok;) {
                Quat mu = rng.quat();
                if (sgn(reduced_norm(shift(a, mu))) == 0) continue;
                o.check(!substitute(p, mu).is_zero(), "p_M vanishes at a non-eigenvalue");
                ++s;
                ++nonzero;
            }
        }
    }
    if (o.ok) o.detail = "30 planted pairs vanish, " + std::to_string(nonzero) + " non-eigenvalues do not";
    return o;
}

void check_schur_point(Outcome& o, const MatD& m, const SchurData& s, const Quat& lam,
                       const std::string& label) {
    bool singular = sgn(reduced_norm(shift(m, lam))) == 0;
    o.check(sextic_eigen_test(s, lam) == singular, label + ": sextic test disagrees at " + str(lam));
}

Outcome schur_proposition() {
    Outcome o;
    Rng rng(1005);
    int degree_six = 0, points = 0;
    for (int m = 0; m < 10 && o.ok; ++m) {
        Quat lam;
        MatD a = [&] {
            for (;;) {
                MatD c = planted(rng, 4, lam);
                if (is_invertible(c.block(2, 0, 2))) return c;
            }
        }();
        SchurData s = schur_sextic(a);
        for (const GenPoly* p : {&s.e, &s.f, &s.g, &s.h})
            o.check(p->degree().value_or(0) <= 2, "entry of degree > 2");
        o.check(s.sextic.degree().value_or(0) <= 6, "sextic of degree > 6");
        degree_six += s.sextic.degree() == 6u;
        o.check(char_poly(a).degree() == 8u, "char_poly degree != 8");
        check_schur_point(o, a, s, lam, "planted");
        ++points;
        for (int t = 0; t < 5; ++t, ++points) check_schur_point(o, a, s, rng.quat(), "random");
    }
    o.check(degree_six == 10, "sextic degree 6 in only " + std::to_string(degree_six) + " of 10");

    MatD closed(H, 4);
    closed.at(2, 0) = Quat::scalar(1);
    closed.at(3, 1) = Quat::scalar(1);
    SchurData s = schur_sextic(closed);
    o.check(s.e == P("z^2") && s.h == P("z^2") && s.f.is_zero() && s.g.is_zero(), "closed-form e, f, g, h");
    o.check(char_poly(closed).degree() == 8u, "closed-form char_poly degree");
    check_schur_point(o, closed, s, Quat{}, "closed form");
    o.check(sextic_eigen_test(s, Quat{}), "closed form: lambda = 0 rejected");
    for (int t = 0; t < 10; ++t, ++points) check_schur_point(o, closed, s, rng.quat(), "closed form");
    points += 1;
    if (o.ok)
        o.detail = "11 matrices, " + std::to_string(points) + " points, sextic degree 6 in " +
                   std::to_string(degree_six) + "/10";
    return o;
}

Outcome determinant_relations() {
    Outcome o;
    Rng rng(1006);
    for (std::size_t k = 2; k <= 3; ++k)
        for (int t = 0; t < 20 && o.ok; ++t) {
            MatD a = rng.matrix(H, k), b = rng.matrix(H, k);
            o.check(reduced_norm(a * b) == reduced_norm(a) * reduced_norm(b), "nrd(AB) != nrd(A)nrd(B)");
        }
    double worst = 0;
    for (std::size_t k = 1; k <= 4; ++k)
        for (int t = 0; t < 10 && o.ok; ++t) {
            MatD a = rng.matrix(H, k), b = rng.matrix(H, k);
            double da = dieudonne_det(a), db = dieudonne_det(b), dab = dieudonne_det(a * b);
            double rn = reduced_norm(a).get_d();
            o.check(rel_close(da * da, rn), "Ddet^2 != nrd");
            o.check(rel_close(dab, da * db), "Ddet(AB) != Ddet(A)Ddet(B)");
            if (dab > 0) worst = std::max(worst, std::fabs(dab - da * db) / dab);
        }
    if (o.ok) {
        std::ostringstream d;
        d << "40 exact products; Ddet within rel " << kRelTol << " (worst " << worst << ")";
        o.detail = d.str();
    }
    return o;
}

Outcome quadratic() {
    Outcome o;
    MatD swap(H, 2, {Quat{}, Quat::scalar(1), Quat::scalar(1), Quat{}});
    GenPoly sp = std::get<GenPoly>(quadratic_2x2(swap));
    o.check(sp == P("z^2 - 1"), "swap quadratic = " + format_poly(sp));
    for (int sign : {1, -1}) {
        o.check(substitute(sp, Quat::scalar(sign)).is_zero(), "swap root missing");
        o.check(is_left_eigenvalue(swap, Quat::scalar(sign)), "swap eigenvalue missing");
    }
    Rng rng(1007);
    for (int t = 0; t < 10 && o.ok; ++t) {
        Quat lam;
        MatD m = [&] {
            for (;;) {
                MatD c = planted(rng, 2, lam);
                if (!c.at(1, 0).is_zero()) return c;
            }
        }();
        GenPoly p = std::get<GenPoly>(quadratic_2x2(m));
        o.check(p.degree() == 2u, "quadratic degree");
        o.check(substitute(p, lam).is_zero(), "planted 2x2 pair does not vanish");
        for (int s = 0; s < 5; ++s) {
            Quat mu = rng.quat();
            o.check(substitute(p, mu).is_zero() == is_left_eigenvalue(m, mu), "2x2 zero set mismatch");
        }
    }
    Quat i = Quat::basis(kI), j = Quat::basis(kJ);
    auto tri = quadratic_2x2(MatD(H, 2, {i, Quat::scalar(1), Quat{}, j}));
    const auto* pair = std::get_if<TriangularEigenvalues>(&tri);
    o.check(pair && pair->first == i && pair->second == j, "triangular case");
    if (o.ok) o.detail = "swap roots +-1, 10 planted pairs, triangular {i, j}";
    return o;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_conformance() {
    Outcome o;
    Rng rng(1008);
    for (int t = 0; t < 100 && o.ok; ++t) {
        GenPoly p = rng.gen_poly(H, 3, 8, true);
        o.check(parse_poly(H, format_poly(p)) == p, "format round trip: " + format_poly(p));
    }

    const std::string cli = qtest::shell_quote(QUATPOLY_CLI);
    auto hinv = qtest::run_command(cli + " hinv --var 2 --algebra -1,-1");
    std::string golden = read_file(std::filesystem::path(QUATPOLY_GOLDEN_DIR) / "hinv_x2.txt");
    o.check(hinv.status == 0 && hinv.output == golden, "hinv --var 2 differs from golden");
    o.check(!golden.empty() && parse_poly(H, golden.substr(0, golden.find('\n'))) ==
                                   P("-1/4*(i*z + i*j*z*j - j*z*i*j + z*i)"),
            "golden does not match the generator formula");

    auto dir = std::filesystem::temp_directory_path() / "quatpoly_acceptance";
    std::filesystem::create_directories(dir);
    int agree = 0;
    for (int t = 0; t < 10; ++t) {
        std::size_t k = static_cast<std::size_t>(1 + t % 4);
        Quat lam;
        MatD m = t % 2 == 0 ? planted(rng, k, lam) : rng.matrix(H, k);
        if (t % 2 == 1) lam = rng.quat();
        auto path = dir / ("case" + std::to_string(t) + ".json");
        save_matrix(path, m);
        auto r = qtest::run_command(cli + " eigcheck --matrix " + qtest::shell_quote(path.string()) +
                                    " --lambda " + qtest::shell_quote(format_quat(lam)));
        int expected = is_left_eigenvalue(m, lam) ? 0 : 1;
        o.check(r.status == expected, "eigcheck exit " + std::to_string(r.status) + " on case " +
                                          std::to_string(t));
        agree += r.status == expected;
    }
    std::filesystem::remove_all(dir);
    if (o.ok) o.detail = "100 round trips, hinv golden, eigcheck " + std::to_string(agree) + "/10";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "generator preimage goldens", golden},
        {2, "isomorphism round trips and homomorphism", isomorphism_suite},
        {3, "substitution homomorphism", substitution_homomorphism},
        {4, "characteristic polynomial identity", master_identity},
        {5, "planted eigenpair correspondence", planted_eigenpairs},
        {6, "4x4 sextic reduction", schur_proposition},
        {7, "determinant relations", determinant_relations},
        {8, "2x2 quadratic", quadratic},
        {9, "CLI conformance", cli_conformance},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.ok;
        std::printf("%s criterion %d: %s -- %s [%.2fs]\n", o.ok ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed;
}
