#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "quatpoly/io.hpp"

namespace quatpoly {

namespace {

using nlohmann::json;

Scalar scalar_from_json(const json& node) {
    if (node.is_number_integer()) return Scalar(mpz_class(node.dump()));
    if (node.is_string()) return parse_scalar(node.get<std::string>());
    throw Error(ErrorKind::ParseError, "algebra parameters must be integers or rational strings");
}

}  // namespace

MatD parse_matrix_json(std::string_view text, const AlgebraPtr& fallback) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(ErrorKind::ParseError, e.byte, "malformed matrix document");
    }
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "matrix document must be an object");

    AlgebraPtr alg = fallback;
    if (auto it = doc.find("algebra"); it != doc.end()) {
        if (!it->is_array() || it->size() != 2)
            throw Error(ErrorKind::ParseError, "\"algebra\" must be a pair [a, b]");
        alg = Algebra::make(scalar_from_json((*it)[0]), scalar_from_json((*it)[1]));
    }
    if (!alg) throw Error(ErrorKind::MissingAlgebra, "matrix document has no \"algebra\"");

    auto rows = doc.find("entries");
    if (rows == doc.end() || !rows->is_array())
        throw Error(ErrorKind::ParseError, "\"entries\" must be an array of rows");
    const std::size_t k = rows->size();
    if (k == 0) throw Error(ErrorKind::NonSquare, "matrix has no rows");

    std::vector<Quat> entries;
    entries.reserve(k * k);
    for (std::size_t r = 0; r < k; ++r) {
        const json& row = (*rows)[r];
        if (!row.is_array() || row.size() != k)
            throw Error(ErrorKind::NonSquare, "row " + std::to_string(r) + " does not have " +
                                                  std::to_string(k) + " entries");
        for (std::size_t c = 0; c < k; ++c) {
            const json& cell = row[c];
            std::string expr;
            if (cell.is_string()) {
                expr = cell.get<std::string>();
            } else if (cell.is_number_integer()) {
                expr = cell.dump();
            } else {
                throw MatrixEntryError(ErrorKind::ParseError, r, c, "entry must be a string");
            }
            try {
                entries.push_back(parse_quat(alg, expr));
            } catch (const ParseError& e) {
                throw MatrixEntryError(e.kind(), r, c, e.what());
            }
        }
    }
    return MatD(alg, k, std::move(entries));
}

MatD load_matrix(const std::filesystem::path& path, const AlgebraPtr& fallback) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str(), fallback);
}

std::string matrix_to_json(const MatD& x) {
    json doc;
    doc["algebra"] = {format_scalar(x.algebra()->a()), format_scalar(x.algebra()->b())};
    json rows = json::array();
    for (std::size_t r = 0; r < x.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < x.size(); ++c) row.push_back(format_quat(x.at(r, c)));
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc.dump();
}

void save_matrix(const std::filesystem::path& path, const MatD& x) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
    out << matrix_to_json(x) << '\n';
}

}  // namespace quatpoly
