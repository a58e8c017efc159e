#pragma once

#include "tasep/laurent.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace tasep {

// Square matrix of Laurent polynomials. k = 0 is allowed; its determinant
// is 1 by the empty-product convention.
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t dimension)
        : dimension_(dimension),
          entries_(dimension, std::vector<LaurentPolynomial>(dimension)) {}

    std::size_t dimension() const { return dimension_; }

    LaurentPolynomial& at(std::size_t row, std::size_t col) {
        check_index(row, col);
        return entries_[row][col];
    }
    const LaurentPolynomial& at(std::size_t row, std::size_t col) const {
        check_index(row, col);
        return entries_[row][col];
    }

private:
    std::size_t dimension_ = 0;
    std::vector<std::vector<LaurentPolynomial>> entries_;

    void check_index(std::size_t row, std::size_t col) const {
        if (row >= dimension_ || col >= dimension_) {
            throw std::out_of_range("PolyMatrix index out of range");
        }
    }
};

namespace detail {

// Laplace expansion along the top remaining row, memoized on the set of
// still-available columns: about 2^k * k polynomial multiplies total and
// no polynomial division anywhere.
class DeterminantExpander {
public:
    explicit DeterminantExpander(const PolyMatrix& m) : m_(m), k_(m.dimension()) {}

    LaurentPolynomial run() {
        if (k_ == 0) return LaurentPolynomial::one();
        const std::uint64_t full = (k_ >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k_) - 1);
        if (k_ >= 64) throw std::invalid_argument("determinant limited to k < 64");
        return expand(full);
    }

private:
    const PolyMatrix& m_;
    std::size_t k_;
    std::unordered_map<std::uint64_t, LaurentPolynomial> memo_;

    LaurentPolynomial expand(std::uint64_t columns) {
        if (columns == 0) return LaurentPolynomial::one();
        auto it = memo_.find(columns);
        if (it != memo_.end()) return it->second;

        const std::size_t row = k_ - static_cast<std::size_t>(std::popcount(columns));
        LaurentPolynomial result;
        bool negate = false;
        for (std::size_t col = 0; col < k_; ++col) {
            const std::uint64_t bit = std::uint64_t{1} << col;
            if (!(columns & bit)) continue;
            const LaurentPolynomial& entry = m_.at(row, col);
            if (!entry.is_zero()) {
                LaurentPolynomial minor = expand(columns & ~bit);
                LaurentPolynomial contribution = entry * minor;
                if (negate) {
                    result -= contribution;
                } else {
                    result += contribution;
                }
            }
            negate = !negate;
        }
        memo_.emplace(columns, result);
        return result;
    }
};

} // namespace detail

inline LaurentPolynomial determinant(const PolyMatrix& m) {
    return detail::DeterminantExpander(m).run();
}

} // namespace tasep
