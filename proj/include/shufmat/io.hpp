#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "shufmat/fft.hpp"
#include "shufmat/int_matrix.hpp"
#include "shufmat/permutation.hpp"

namespace shufmat {

/// Matrix file format shared across the tools: a JSON object
/// {"rows": r, "cols": c, "entries": [[re, im], ...]} with entries row-major.
/// Integer matrices are written with im = 0.
inline void write_matrix_json(std::ostream& out, const IntMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::int64_t i = 0; i < m.rows(); ++i)
        for (std::int64_t j = 0; j < m.cols(); ++j)
            entries.push_back({m(i, j), 0});
    nlohmann::json doc{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
    out << doc.dump() << '\n';
}

inline IntMatrix read_int_matrix_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("invalid matrix JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("entries"))
        throw std::invalid_argument("matrix JSON needs rows, cols and entries");
    const auto rows = doc["rows"].get<std::int64_t>();
    const auto cols = doc["cols"].get<std::int64_t>();
    const auto& entries = doc["entries"];
    if (!entries.is_array() || static_cast<std::int64_t>(entries.size()) != rows * cols)
        throw std::invalid_argument("matrix JSON entry count does not match rows*cols");
    IntMatrix m(rows, cols);
    for (std::int64_t i = 0; i < rows; ++i)
        for (std::int64_t j = 0; j < cols; ++j) {
            const auto& cell = entries[static_cast<std::size_t>(i * cols + j)];
            if (!cell.is_array() || cell.size() != 2)
                throw std::invalid_argument("matrix JSON entries must be [re, im] pairs");
            const double re = cell[0].get<double>();
            const double im = cell[1].get<double>();
            if (im != 0.0 || re != std::floor(re))
                throw std::invalid_argument("matrix entry (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") is not an integer");
            m(i, j) = static_cast<std::int64_t>(re);
        }
    return m;
}

inline nlohmann::json permutation_json(const Permutation& f) {
    nlohmann::json doc;
    doc["degree"] = f.degree();
    doc["images"] = f.images();
    doc["cycles"] = cycles(f).str();
    doc["horizontal"] = horizontal(f);
    doc["fixed_points"] = fixed_points(f);
    return doc;
}

/// Complex vectors travel as CSV with one "re,im" line per entry.
inline void write_vector_csv(std::ostream& out, const ComplexVector& x) {
    char buf[64];
    for (const auto& v : x) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g", v.real(), v.imag());
        out << buf << '\n';
    }
}

inline ComplexVector read_vector_csv(std::istream& in) {
    ComplexVector x;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                        ": expected \"re,im\"");
        std::size_t used_re = 0, used_im = 0;
        double re, im;
        try {
            re = std::stod(line.substr(0, comma), &used_re);
            im = std::stod(line.substr(comma + 1), &used_im);
        } catch (const std::exception&) {
            throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                        ": cannot parse numbers");
        }
        x.emplace_back(re, im);
    }
    if (x.empty()) throw std::invalid_argument("CSV vector is empty");
    return x;
}

} // namespace shufmat
