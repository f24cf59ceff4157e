#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quatpoly/eigen.hpp"
#include "quatpoly/io.hpp"
#include "quatpoly/isomorphism.hpp"

namespace quatpoly {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotEigenvalue = 1;
constexpr int kExitError = 2;
constexpr int kExitUsage = 64;

struct Options {
    std::string algebra = "-1,-1";
    bool algebra_given = false;
    int var = 0;
    std::string poly;
    std::string at;
    std::string matrix;
    std::string lambda;
};

std::string print_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact general polynomials over quaternion algebras"};
    app.name("quatpoly");
    app.require_subcommand(1);

    Options opt;
    std::function<int()> action;

    auto with_algebra = [&](CLI::App* sub) {
        sub->add_option("--algebra", opt.algebra, "structure constants a,b (default -1,-1)")
            ->each([&](const std::string&) { opt.algebra_given = true; });
    };
    auto algebra = [&] { return parse_algebra(opt.algebra); };
    auto matrix = [&] {
        return load_matrix(opt.matrix, opt.algebra_given ? algebra() : Algebra::make(-1, -1));
    };

    auto* hinv = app.add_subcommand("hinv", "print h^-1(x_k)");
    with_algebra(hinv);
    hinv->add_option("--var", opt.var, "generator index 1..4")->required()->check(CLI::Range(1, 4));
    hinv->callback([&] {
        action = [&] {
            out << format_poly(preimage_generator(algebra(), static_cast<std::uint8_t>(opt.var)))
                << '\n';
            return kExitOk;
        };
    });

    auto* hmap = app.add_subcommand("hmap", "print h(P) in D<x1..x4>");
    with_algebra(hmap);
    hmap->add_option("--poly", opt.poly, "general polynomial")->required();
    hmap->callback([&] {
        action = [&] {
            out << format_free(h_map(parse_poly(algebra(), opt.poly))) << '\n';
            return kExitOk;
        };
    });

    auto* eval = app.add_subcommand("eval", "substitute a value for z");
    with_algebra(eval);
    eval->add_option("--poly", opt.poly, "general polynomial")->required();
    eval->add_option("--at", opt.at, "z-free expression")->required();
    eval->callback([&] {
        action = [&] {
            auto alg = algebra();
            out << format_quat(substitute(parse_poly(alg, opt.poly), parse_quat(alg, opt.at)))
                << '\n';
            return kExitOk;
        };
    });

    auto matrix_command = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        with_algebra(sub);
        sub->add_option("--matrix", opt.matrix, "matrix JSON file")->required();
        return sub;
    };

    matrix_command("charpoly", "print the characteristic polynomial")->callback([&] {
        action = [&] {
            out << format_poly(char_poly(matrix())) << '\n';
            return kExitOk;
        };
    });

    auto* eigcheck = matrix_command("eigcheck", "exit 0 iff lambda is a left eigenvalue");
    eigcheck->add_option("--lambda", opt.lambda, "z-free expression")->required();
    eigcheck->callback([&] {
        action = [&] {
            MatD m = matrix();
            Scalar n = reduced_norm(shift(m, parse_quat(m.algebra(), opt.lambda)));
            out << format_scalar(n) << '\n';
            return sgn(n) == 0 ? kExitOk : kExitNotEigenvalue;
        };
    });

    matrix_command("sextic", "print e, f, g, h and the sextic of a 4x4 matrix")->callback([&] {
        action = [&] {
            SchurData s = schur_sextic(matrix());
            out << "e = " << format_poly(s.e) << '\n'
                << "f = " << format_poly(s.f) << '\n'
                << "g = " << format_poly(s.g) << '\n'
                << "h = " << format_poly(s.h) << '\n'
                << "sextic = " << format_poly(s.sextic) << '\n';
            return kExitOk;
        };
    });

    matrix_command("quad2", "print the quadratic of a 2x2 matrix")->callback([&] {
        action = [&] {
            QuadraticReduction r = quadratic_2x2(matrix());
            if (const auto* poly = std::get_if<GenPoly>(&r)) {
                out << format_poly(*poly) << '\n';
            } else {
                const auto& tri = std::get<TriangularEigenvalues>(r);
                out << kind_name(ErrorKind::OffDiagonalZero) << '\n'
                    << "eigenvalue = " << format_quat(tri.first) << '\n'
                    << "eigenvalue = " << format_quat(tri.second) << '\n';
            }
            return kExitOk;
        };
    });

    matrix_command("nrd", "print the reduced norm")->callback([&] {
        action = [&] {
            out << format_scalar(reduced_norm(matrix())) << '\n';
            return kExitOk;
        };
    });

    matrix_command("ddet", "print the Dieudonne determinant")->callback([&] {
        action = [&] {
            out << print_double(dieudonne_det(matrix())) << '\n';
            return kExitOk;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << kind_name(ErrorKind::Usage) << ": " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const Error& e) {
        err << "error: " << kind_name(e.kind()) << ": " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace quatpoly
