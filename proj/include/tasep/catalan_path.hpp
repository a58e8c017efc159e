#pragma once

#include "tasep/laurent.hpp"
#include "tasep/state_word.hpp"
#include "tasep/tableau.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace tasep {

// Lattice path from the northeast to the southwest corner of the
// k x (n-k) rectangle that never crosses the southeast boundary of the
// diagram, coordinatized by its south-step positions: C_i is the label of
// the vertical line (0 = west border) where the path steps south in row i,
// so C_1 >= ... >= C_k >= 0 and C_i <= lambda_i.
class CatalanPath {
public:
    CatalanPath(Shape shape, std::vector<int> labels)
        : shape_(std::move(shape)), labels_(std::move(labels)) {
        if (static_cast<int>(labels_.size()) != shape_.rows()) {
            throw std::invalid_argument("path needs one label per shape row");
        }
        for (int i = 1; i <= shape_.rows(); ++i) {
            const int c = labels_[i - 1];
            if (c < 0 || c > shape_.part(i) || (i > 1 && c > labels_[i - 2])) {
                throw std::invalid_argument(
                    "path labels must be weakly decreasing with C_i <= lambda_i");
            }
        }
    }

    const Shape& shape() const { return shape_; }
    const std::vector<int>& labels() const { return labels_; }
    int label(int i) const { return labels_.at(i - 1); } // 1-based

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(labels_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const CatalanPath& lhs, const CatalanPath& rhs) {
        return lhs.shape_ == rhs.shape_ && lhs.labels_ == rhs.labels_;
    }

private:
    Shape shape_;
    std::vector<int> labels_;
};

// One lattice step of a Catalan path. South steps sit on vertical line x;
// west steps run from x to x-1 along horizontal line y (0 = rectangle top).
struct PathStep {
    bool south = false;
    int x = 0;
    int y = 0;
    LaurentPolynomial weight;
};

// The literal step sequence of the path with the edge-weight rules applied:
// a south step on the west border (x = 0) carries 1/beta; a west step whose
// edge lies on the south boundary of the diagram carries 1/alpha; all other
// steps carry 1. The boundary of the diagram along line y covers columns
// lambda_{y+1} < x <= lambda_y, reading lambda_0 = n-k and lambda_{k+1} = 0.
inline std::vector<PathStep> path_steps(const CatalanPath& path) {
    const Shape& shape = path.shape();
    const int k = shape.rows();
    auto boundary_row_length = [&](int y) {
        return y == 0 ? shape.width() : shape.part(y);
    };

    std::vector<PathStep> steps;
    int x = shape.width();
    for (int y = 0; y <= k; ++y) {
        const int target = y < k ? path.label(y + 1) : 0;
        for (; x > target; --x) {
            const bool on_boundary =
                x <= boundary_row_length(y) && x > shape.part(y + 1);
            steps.push_back({false, x, y,
                             on_boundary ? LaurentPolynomial::alpha_pow(-1)
                                         : LaurentPolynomial::one()});
        }
        if (y < k) {
            steps.push_back({true, x, y,
                             x == 0 ? LaurentPolynomial::beta_pow(-1)
                                    : LaurentPolynomial::one()});
        }
    }
    return steps;
}

// pwt(C) computed by walking the path edge by edge.
inline LaurentPolynomial path_weight_by_walk(const CatalanPath& path) {
    LaurentPolynomial product = LaurentPolynomial::one();
    for (const PathStep& step : path_steps(path)) product *= step.weight;
    return product;
}

// pwt(C) in closed form: (1/beta)^t for the t zero labels, (1/alpha)^(C_i -
// lambda_{i+1}) for every row whose south step touches the south boundary,
// and (1/alpha)^(n-k-lambda_1) for the forced segment east of the diagram.
inline LaurentPolynomial path_weight(const CatalanPath& path) {
    const Shape& shape = path.shape();
    int beta_exp = 0;
    int alpha_exp = shape.width() - shape.part(1);
    for (int i = 1; i <= shape.rows(); ++i) {
        const int c = path.label(i);
        if (c == 0) ++beta_exp;
        if (c > shape.part(i + 1)) alpha_exp += c - shape.part(i + 1);
    }
    return LaurentPolynomial::monomial(-alpha_exp, -beta_exp);
}

// wt(C) = (alpha beta)^n pwt(C).
inline LaurentPolynomial path_total_weight(const CatalanPath& path) {
    const int n = path.shape().n();
    return LaurentPolynomial::monomial(n, n) * path_weight(path);
}

// The weight-preserving correspondence: for each nonzero label C_i place a
// Beta in column C_i at the lowest Beta-free row of that column, then give
// every column an Alpha in the lowest row that is empty and has no Beta to
// its right. Columns whose rows all carry Betas at or past them get none.
inline CatalanTableau path_to_tableau(const CatalanPath& path) {
    const Shape& shape = path.shape();
    const int k = shape.rows();
    std::vector<std::vector<Cell>> filling(k);
    for (int r = 1; r <= k; ++r) filling[r - 1].assign(shape.part(r), Cell::Empty);

    std::vector<bool> row_has_beta(k + 1, false);
    for (int i = 1; i <= k; ++i) {
        const int c = path.label(i);
        if (c == 0) continue;
        for (int r = shape.column_height(c); r >= 1; --r) {
            if (!row_has_beta[r]) {
                filling[r - 1][c - 1] = Cell::Beta;
                row_has_beta[r] = true;
                break;
            }
        }
    }

    auto beta_right_of = [&](int r, int c) {
        for (int col = c + 1; col <= shape.part(r); ++col) {
            if (filling[r - 1][col - 1] == Cell::Beta) return true;
        }
        return false;
    };
    for (int c = 1; c <= shape.part(1); ++c) {
        for (int r = shape.column_height(c); r >= 1; --r) {
            if (filling[r - 1][c - 1] == Cell::Empty && !beta_right_of(r, c)) {
                filling[r - 1][c - 1] = Cell::Alpha;
                break;
            }
        }
    }
    return CatalanTableau(shape, std::move(filling));
}

// Inverse map: the Beta columns, largest first, padded with zeros to k.
inline CatalanPath tableau_to_path(const CatalanTableau& t) {
    const Shape& shape = t.shape();
    std::vector<int> labels;
    for (int r = 1; r <= shape.rows(); ++r) {
        for (int c = 1; c <= shape.part(r); ++c) {
            if (t.cell(r, c) == Cell::Beta) labels.push_back(c);
        }
    }
    std::sort(labels.begin(), labels.end(), std::greater<int>());
    labels.resize(shape.rows(), 0);
    return CatalanPath(shape, std::move(labels));
}

// All label tuples C_1 >= ... >= C_k with 0 <= C_i <= lambda_i, in
// ascending lexicographic order.
inline std::vector<CatalanPath> enumerate_paths(const Shape& shape) {
    std::vector<CatalanPath> paths;
    std::vector<int> labels(shape.rows());
    std::function<void(int)> extend = [&](int i) {
        if (i > shape.rows()) {
            paths.emplace_back(shape, labels);
            return;
        }
        const int bound = std::min(shape.part(i), i > 1 ? labels[i - 2] : shape.width());
        for (int c = 0; c <= bound; ++c) {
            labels[i - 1] = c;
            extend(i + 1);
        }
    };
    extend(1);
    return paths;
}

} // namespace tasep
