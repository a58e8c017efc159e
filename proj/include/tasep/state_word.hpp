#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tasep {

// A TASEP state: binary word tau_1..tau_n, 1 = occupied site.
class StateWord {
public:
    StateWord() = default;
    explicit StateWord(std::string_view text) {
        bits_.reserve(text.size());
        for (char c : text) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument("state word must consist of 0s and 1s");
            }
            bits_.push_back(c == '1');
        }
    }
    explicit StateWord(std::vector<bool> bits) : bits_(std::move(bits)) {}

    int n() const { return static_cast<int>(bits_.size()); }
    int k() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), true)); }
    bool occupied(int site) const { return bits_.at(site - 1); } // sites are 1-based

    std::string str() const {
        std::string out;
        out.reserve(bits_.size());
        for (bool b : bits_) out += b ? '1' : '0';
        return out;
    }

    friend bool operator==(const StateWord& lhs, const StateWord& rhs) {
        return lhs.bits_ == rhs.bits_;
    }

private:
    std::vector<bool> bits_;
};

// Young diagram shape (lambda_1 >= ... >= lambda_k >= 0) northwest-justified
// in a k x (n-k) rectangle; `width` is the rectangle width n-k. part(i)
// applies the lambda_{k+1} = 0 convention for i > k.
class Shape {
public:
    Shape() = default;
    Shape(std::vector<int> parts, int width) : parts_(std::move(parts)), width_(width) {
        if (width_ < 0) throw std::invalid_argument("shape width must be nonnegative");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0 || parts_[i] > width_ ||
                (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
                throw std::invalid_argument("shape parts must be weakly decreasing in [0, width]");
            }
        }
    }

    int rows() const { return static_cast<int>(parts_.size()); } // k
    int width() const { return width_; }                         // n - k
    int n() const { return rows() + width_; }

    int part(int i) const { // 1-based; 0 beyond the last row
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    // Number of rows whose length reaches column c (1-based), i.e. the
    // height of column c of the diagram.
    int column_height(int c) const {
        int h = 0;
        while (h < rows() && parts_[h] >= c) ++h;
        return h;
    }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

    friend bool operator==(const Shape& lhs, const Shape& rhs) {
        return lhs.parts_ == rhs.parts_ && lhs.width_ == rhs.width_;
    }

private:
    std::vector<int> parts_;
    int width_ = 0;
};

// Big-endian state indexing: tau_1 is the most significant bit, so words
// of length n enumerate as 00..0, 00..1, ..., 11..1 over indices 0..2^n-1.
inline std::size_t word_index(const StateWord& tau) {
    std::size_t index = 0;
    for (int site = 1; site <= tau.n(); ++site) {
        index = (index << 1) | static_cast<std::size_t>(tau.occupied(site));
    }
    return index;
}

inline StateWord word_from_index(int n, std::size_t index) {
    std::vector<bool> bits(static_cast<std::size_t>(n));
    for (int site = n; site >= 1; --site) {
        bits[site - 1] = index & 1;
        index >>= 1;
    }
    return StateWord(std::move(bits));
}

// lambda_i = number of 0s following the i-th 1 of tau.
inline Shape shape_of_word(const StateWord& tau) {
    const int n = tau.n();
    std::vector<int> parts;
    int zeros_after = 0;
    for (int site = n; site >= 1; --site) {
        if (tau.occupied(site)) {
            parts.push_back(zeros_after);
        } else {
            ++zeros_after;
        }
    }
    std::reverse(parts.begin(), parts.end());
    return Shape(std::move(parts), n - static_cast<int>(parts.size()));
}

// Inverse of shape_of_word: read the diagram border from northeast to
// southwest, a 1 per south step and a 0 per west step.
inline StateWord word_of_shape(const Shape& shape) {
    const int k = shape.rows();
    std::vector<bool> bits;
    bits.reserve(shape.n());
    for (int z = 0; z < shape.width() - shape.part(1); ++z) bits.push_back(false);
    for (int i = 1; i <= k; ++i) {
        bits.push_back(true);
        for (int z = 0; z < shape.part(i) - shape.part(i + 1); ++z) bits.push_back(false);
    }
    return StateWord(std::move(bits));
}

inline StateWord word_of_shape(const std::vector<int>& parts, int n, int k) {
    if (static_cast<int>(parts.size()) != k) {
        throw std::invalid_argument("shape must have exactly k parts");
    }
    return word_of_shape(Shape(parts, n - k));
}

} // namespace tasep
