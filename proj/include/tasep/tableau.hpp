#pragma once

#include "tasep/laurent.hpp"
#include "tasep/state_word.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tasep {

enum class Cell : unsigned char { Empty, Alpha, Beta };

// Filling of a Young diagram with alphas and betas subject to:
//   (i)   every cell in the same column above an Alpha is Empty,
//   (ii)  every cell in the same row left of a Beta is Empty,
//   (iii) every cell not above an Alpha and not left of a Beta is non-Empty.
// Cells are addressed 1-based, row 1 at the top, column 1 at the left.
class CatalanTableau {
public:
    CatalanTableau(Shape shape, std::vector<std::vector<Cell>> filling)
        : shape_(std::move(shape)), filling_(std::move(filling)) {
        if (static_cast<int>(filling_.size()) != shape_.rows()) {
            throw std::invalid_argument("filling must have one row per shape part");
        }
        for (int r = 1; r <= shape_.rows(); ++r) {
            if (static_cast<int>(filling_[r - 1].size()) != shape_.part(r)) {
                throw std::invalid_argument("filling row length must match shape part");
            }
        }
    }

    static CatalanTableau all_empty(const Shape& shape) {
        std::vector<std::vector<Cell>> filling(shape.rows());
        for (int r = 1; r <= shape.rows(); ++r) {
            filling[r - 1].assign(shape.part(r), Cell::Empty);
        }
        return CatalanTableau(shape, std::move(filling));
    }

    const Shape& shape() const { return shape_; }
    int n() const { return shape_.n(); }
    int k() const { return shape_.rows(); }
    Cell cell(int row, int col) const { return filling_.at(row - 1).at(col - 1); }

    // Text form: one row per line, `.` Empty, `a` Alpha, `b` Beta.
    std::string str() const {
        std::string out;
        for (int r = 1; r <= k(); ++r) {
            for (int c = 1; c <= shape_.part(r); ++c) {
                switch (cell(r, c)) {
                    case Cell::Empty: out += '.'; break;
                    case Cell::Alpha: out += 'a'; break;
                    case Cell::Beta: out += 'b'; break;
                }
            }
            out += '\n';
        }
        return out;
    }

    friend bool operator==(const CatalanTableau& lhs, const CatalanTableau& rhs) {
        return lhs.shape_ == rhs.shape_ && lhs.filling_ == rhs.filling_;
    }

private:
    Shape shape_;
    std::vector<std::vector<Cell>> filling_;

    friend class TableauEnumerator;
};

inline bool validate_tableau(const CatalanTableau& t) {
    const Shape& shape = t.shape();
    for (int r = 1; r <= shape.rows(); ++r) {
        for (int c = 1; c <= shape.part(r); ++c) {
            const Cell value = t.cell(r, c);
            if (value == Cell::Alpha) {
                for (int above = 1; above < r; ++above) {
                    if (t.cell(above, c) != Cell::Empty) return false; // rule i
                }
            } else if (value == Cell::Beta) {
                for (int left = 1; left < c; ++left) {
                    if (t.cell(r, left) != Cell::Empty) return false; // rule ii
                }
            } else {
                bool above_alpha = false;
                for (int below = r + 1; below <= shape.column_height(c); ++below) {
                    if (t.cell(below, c) == Cell::Alpha) above_alpha = true;
                }
                bool left_of_beta = false;
                for (int right = c + 1; right <= shape.part(r); ++right) {
                    if (t.cell(r, right) == Cell::Beta) left_of_beta = true;
                }
                if (!above_alpha && !left_of_beta) return false; // rule iii
            }
        }
    }
    return true;
}

// wt(T) = (alpha beta)^n (1/alpha)^fcol (1/beta)^frow, i.e. the monomial
// alpha^(n-fcol) beta^(n-frow). fcol counts rectangle columns without an
// Alpha (columns beyond the diagram included), frow rows without a Beta.
inline LaurentPolynomial tableau_weight(const CatalanTableau& t) {
    const Shape& shape = t.shape();
    int fcol = 0;
    for (int c = 1; c <= shape.width(); ++c) {
        bool has_alpha = false;
        for (int r = 1; r <= shape.column_height(c); ++r) {
            if (t.cell(r, c) == Cell::Alpha) has_alpha = true;
        }
        if (!has_alpha) ++fcol;
    }
    int frow = 0;
    for (int r = 1; r <= shape.rows(); ++r) {
        bool has_beta = false;
        for (int c = 1; c <= shape.part(r); ++c) {
            if (t.cell(r, c) == Cell::Beta) has_beta = true;
        }
        if (!has_beta) ++frow;
    }
    return LaurentPolynomial::monomial(t.n() - fcol, t.n() - frow);
}

class TableauEnumerator {
public:
    explicit TableauEnumerator(Shape shape) : shape_(std::move(shape)) {
        filling_.resize(shape_.rows());
        for (int r = 1; r <= shape_.rows(); ++r) {
            filling_[r - 1].assign(shape_.part(r), Cell::Empty);
        }
    }

    std::vector<CatalanTableau> run() {
        results_.clear();
        fill_from(1, 1);
        return std::move(results_);
    }

private:
    Shape shape_;
    std::vector<std::vector<Cell>> filling_;
    std::vector<CatalanTableau> results_;

    Cell& cell(int r, int c) { return filling_[r - 1][c - 1]; }

    // Backtracking in row-major order, candidate values tried as
    // Empty < Alpha < Beta so complete fillings come out in lexicographic
    // order of their cell sequence.
    void fill_from(int row, int col) {
        while (row <= shape_.rows() && shape_.part(row) == 0) ++row;
        if (row > shape_.rows()) {
            results_.emplace_back(shape_, filling_);
            return;
        }

        const bool row_ends = col == shape_.part(row);
        for (Cell value : {Cell::Empty, Cell::Alpha, Cell::Beta}) {
            if (value == Cell::Alpha && !column_empty_above(row, col)) continue;
            if (value == Cell::Beta && !row_empty_left(row, col)) continue;
            cell(row, col) = value;
            if (!row_ends) {
                fill_from(row, col + 1);
            } else if (completed_columns_satisfy_rule_iii(row)) {
                fill_from(row + 1, 1);
            }
        }
        cell(row, col) = Cell::Empty;
    }

    bool column_empty_above(int row, int col) {
        for (int r = 1; r < row; ++r) {
            if (cell(r, col) != Cell::Empty) return false;
        }
        return true;
    }

    bool row_empty_left(int row, int col) {
        for (int c = 1; c < col; ++c) {
            if (cell(row, c) != Cell::Empty) return false;
        }
        return true;
    }

    // Columns whose lowest cell is in `row` are fully assigned once the row
    // is complete; rule iii is decidable for every cell of those columns.
    bool completed_columns_satisfy_rule_iii(int row) {
        const int from = shape_.part(row + 1) + 1;
        const int to = shape_.part(row);
        for (int c = from; c <= to; ++c) {
            for (int r = 1; r <= row; ++r) {
                if (cell(r, c) != Cell::Empty) continue;
                bool above_alpha = false;
                for (int below = r + 1; below <= row; ++below) {
                    if (cell(below, c) == Cell::Alpha) above_alpha = true;
                }
                bool left_of_beta = false;
                for (int right = c + 1; right <= shape_.part(r); ++right) {
                    if (cell(r, right) == Cell::Beta) left_of_beta = true;
                }
                if (!above_alpha && !left_of_beta) return false;
            }
        }
        return true;
    }
};

// All valid tableaux of type tau, in deterministic lexicographic order of
// the row-major filling sequence (Empty < Alpha < Beta).
inline std::vector<CatalanTableau> enumerate_tableaux(const StateWord& tau) {
    return TableauEnumerator(shape_of_word(tau)).run();
}

// P(tau) by direct enumeration: the sum of wt(T) over tableaux of type tau.
inline LaurentPolynomial sum_weights(const StateWord& tau) {
    LaurentPolynomial total;
    for (const CatalanTableau& t : enumerate_tableaux(tau)) {
        total += tableau_weight(t);
    }
    return total;
}

} // namespace tasep
