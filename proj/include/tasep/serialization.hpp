#pragma once

#include "tasep/bigint.hpp"
#include "tasep/catalan_path.hpp"
#include "tasep/laurent.hpp"
#include "tasep/poly_matrix.hpp"
#include "tasep/state_word.hpp"
#include "tasep/tableau.hpp"

#include <json.hpp>

namespace tasep {

// [[a_exp, b_exp, "coefficient"], ...] in the canonical print order.
inline nlohmann::json poly_json(const LaurentPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    const auto& map = p.terms();
    for (auto it = map.rbegin(); it != map.rend(); ++it) {
        terms.push_back({it->first.first, it->first.second, it->second.str()});
    }
    return terms;
}

inline nlohmann::json shape_json(const Shape& shape) {
    return nlohmann::json(shape.parts());
}

inline nlohmann::json tableau_json(const CatalanTableau& t) {
    nlohmann::json cells = nlohmann::json::array();
    for (int r = 1; r <= t.k(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 1; c <= t.shape().part(r); ++c) {
            switch (t.cell(r, c)) {
                case Cell::Empty: row.push_back("."); break;
                case Cell::Alpha: row.push_back("a"); break;
                case Cell::Beta: row.push_back("b"); break;
            }
        }
        cells.push_back(std::move(row));
    }
    return {{"n", t.n()},
            {"k", t.k()},
            {"shape", shape_json(t.shape())},
            {"cells", std::move(cells)}};
}

inline nlohmann::json path_json(const CatalanPath& path) {
    return {{"shape", shape_json(path.shape())}, {"labels", path.labels()}};
}

inline nlohmann::json matrix_json(const PolyMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dimension(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.dimension(); ++j) {
            row.push_back(poly_json(m.at(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

// [{"state": "0101", "probability": "num/den"}, ...] in index order.
inline nlohmann::json stationary_json(int n, const std::vector<BigRational>& pi) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t index = 0; index < pi.size(); ++index) {
        entries.push_back({{"state", word_from_index(n, index).str()},
                           {"probability", rational_str(pi[index])}});
    }
    return entries;
}

} // namespace tasep
