#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "modrep/cyclotomic.hpp"
#include "modrep/dimvec.hpp"
#include "modrep/matrix.hpp"
#include "modrep/rep_families.hpp"

namespace modrep {

using nlohmann::json;

/// Matrices serialize as array-of-arrays of canonical "p/q+p/q*w" strings.
inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        throw std::invalid_argument("matrix JSON: expected a non-empty array of arrays");
    const std::size_t rows = j.size(), cols = j[0].size();
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw std::invalid_argument("matrix JSON: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_string())
                throw std::invalid_argument("matrix JSON: entries must be scalar strings");
            m.at(i, c) = Cyclotomic::parse(j[i][c].get<std::string>());
        }
    }
    return m;
}

/// Representations serialize as {"n": ..., "X": [[...]], "Y": [[...]]}.
inline json representation_to_json(const Representation& rep) {
    return json{{"n", rep.dim()}, {"X", matrix_to_json(rep.X)}, {"Y", matrix_to_json(rep.Y)}};
}

inline Representation representation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("X") || !j.contains("Y"))
        throw std::invalid_argument("representation JSON: expected {\"n\", \"X\", \"Y\"}");
    Representation rep{matrix_from_json(j.at("X")), matrix_from_json(j.at("Y"))};
    if (j.contains("n")) {
        if (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() != rep.dim())
            throw std::invalid_argument("representation JSON: field 'n' does not match matrix size");
    }
    return rep;
}

/// DimVector serializes as a flat 5-element array [a1,a2,a3,b1,b2].
inline json dimvector_to_json(const DimVector& v) {
    return json::array({v.a1, v.a2, v.a3, v.b1, v.b2});
}

inline DimVector dimvector_from_json(const json& j) {
    if (!j.is_array() || j.size() != 5)
        throw std::invalid_argument("dimension vector JSON: expected a 5-element array");
    for (const auto& v : j)
        if (!v.is_number_integer())
            throw std::invalid_argument("dimension vector JSON: components must be integers");
    return {j[0].get<long long>(), j[1].get<long long>(), j[2].get<long long>(),
            j[3].get<long long>(), j[4].get<long long>()};
}

}  // namespace modrep
