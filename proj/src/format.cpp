#include <sstream>
#include <string>
#include <vector>

#include "quatpoly/io.hpp"

namespace quatpoly {

namespace {

constexpr const char* kSymbols[] = {"1", "i", "j", "k"};

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t t = 0; t < parts.size(); ++t) {
        if (t) out += " + ";
        out += parts[t];
    }
    return out;
}

// c*sym1*sym2..., with a unit coefficient folded into the symbols.
std::string monomial(const Scalar& c, const std::vector<std::string>& symbols) {
    if (symbols.empty()) return c.get_str();
    std::string body;
    for (std::size_t t = 0; t < symbols.size(); ++t) {
        if (t) body += '*';
        body += symbols[t];
    }
    if (c == 1) return body;
    if (c == -1) return "-" + body;
    return c.get_str() + "*" + body;
}

}  // namespace

std::string format_scalar(const Scalar& s) { return s.get_str(); }

std::string format_poly(const GenPoly& p) {
    std::vector<std::string> parts;
    parts.reserve(p.size());
    std::vector<std::string> symbols;
    for (const auto& [w, c] : p.terms()) {
        symbols.clear();
        for (std::size_t t = 0; t < w.length(); ++t) {
            if (t) symbols.emplace_back("z");
            if (w[t] != kOne) symbols.emplace_back(kSymbols[w[t]]);
        }
        parts.push_back(monomial(c, symbols));
    }
    return join_terms(parts);
}

std::string format_quat(const Quat& q) {
    std::vector<std::string> parts;
    for (BasisIndex b = 0; b < 4; ++b) {
        if (sgn(q.c[b]) == 0) continue;
        if (b == kOne) {
            parts.push_back(q.c[b].get_str());
        } else {
            parts.push_back(monomial(q.c[b], {kSymbols[b]}));
        }
    }
    return join_terms(parts);
}

std::string format_free(const FreePoly& p) {
    std::vector<std::string> parts;
    std::vector<std::string> symbols;
    for (const auto& [w, c] : p.terms()) {
        symbols.clear();
        if (w.basis() != kOne) symbols.emplace_back(kSymbols[w.basis()]);
        for (std::size_t t = 0; t < w.degree(); ++t)
            symbols.push_back("x" + std::to_string(int(w.var(t))));
        parts.push_back(monomial(c, symbols));
    }
    return join_terms(parts);
}

std::string format_comm(const CommPoly& p) {
    std::vector<std::string> parts;
    std::vector<std::string> symbols;
    for (const auto& [e, c] : p.terms()) {
        symbols.clear();
        for (std::size_t v = 0; v < kNumVars; ++v) {
            if (e[v] == 0) continue;
            std::string s = "x" + std::to_string(v + 1);
            if (e[v] > 1) s += "^" + std::to_string(int(e[v]));
            symbols.push_back(std::move(s));
        }
        if (sgn(c.v) == 0) {
            parts.push_back(monomial(c.u, symbols));
        } else {
            std::string coeff = "(" + c.u.get_str() + " + " + c.v.get_str() + "*i)";
            for (const auto& s : symbols) coeff += "*" + s;
            parts.push_back(std::move(coeff));
        }
    }
    return join_terms(parts);
}

}  // namespace quatpoly
