#pragma once

#include "tasep/errors.hpp"
#include "tasep/catalan_path.hpp"
#include "tasep/laurent.hpp"
#include "tasep/poly_matrix.hpp"
#include "tasep/state_word.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

namespace tasep {

// Digraph of k left-justified strips of parallelograms, strip i carrying
// lambda_i + 1 southeast edges labeled 0..lambda_i. Concrete realization:
// the southeast edge labeled t in strip r runs (t, r-1) -> (t+1, r), east
// edges join consecutive integer points of each horizontal line, and the
// marked endpoints are e_i = (0, i-1), v_j = (lambda_j + 1, j).
//
// Southeast edge weights: label 0 carries 1/beta; label t > lambda_{r+1}
// carries (1/alpha)^(t - lambda_{r+1}); everything else carries 1.
class TwistedDigraph {
public:
    explicit TwistedDigraph(Shape shape) : shape_(std::move(shape)) {}

    const Shape& shape() const { return shape_; }
    int strips() const { return shape_.rows(); }
    int se_label_count(int strip) const { return shape_.part(strip) + 1; }

    LaurentPolynomial se_weight(int strip, int label) const {
        if (label == 0) return LaurentPolynomial::beta_pow(-1);
        const int overhang = label - shape_.part(strip + 1);
        if (overhang > 0) return LaurentPolynomial::alpha_pow(-overhang);
        return LaurentPolynomial::one();
    }

    // Debug export: one line per edge, "(x,y) -> (x',y') weight".
    std::string edge_list_str() const {
        std::ostringstream out;
        auto line_max_x = [this](int y) {
            if (y == 0) return shape_.part(1);
            return shape_.part(y) + 1; // bottoms of strip y reach lambda_y + 1
        };
        for (int y = 0; y <= strips(); ++y) {
            for (int x = 0; x < line_max_x(y); ++x) {
                out << "(" << x << "," << y << ") -> (" << x + 1 << "," << y << ") 1\n";
            }
        }
        for (int r = 1; r <= strips(); ++r) {
            for (int t = 0; t <= shape_.part(r); ++t) {
                out << "(" << t << "," << r - 1 << ") -> (" << t + 1 << "," << r << ") "
                    << se_weight(r, t).str() << "\n";
            }
        }
        return out.str();
    }

private:
    Shape shape_;
};

// Path from e_source to v_sink: its southeast-edge labels, one per strip
// source..sink, strictly increasing. Empty labels encode the unique
// all-east path when source == sink + 1.
struct LatticePath {
    int source = 1;
    int sink = 1;
    std::vector<int> se_labels;

    friend bool operator==(const LatticePath& lhs, const LatticePath& rhs) {
        return lhs.source == rhs.source && lhs.sink == rhs.sink &&
               lhs.se_labels == rhs.se_labels;
    }
};

inline LaurentPolynomial path_weight(const TwistedDigraph& g, const LatticePath& p) {
    LaurentPolynomial product = LaurentPolynomial::one();
    for (std::size_t s = 0; s < p.se_labels.size(); ++s) {
        product *= g.se_weight(p.source + static_cast<int>(s), p.se_labels[s]);
    }
    return product;
}

inline std::vector<std::pair<int, int>> path_vertices(const TwistedDigraph& g,
                                                      const LatticePath& p) {
    std::vector<std::pair<int, int>> vertices;
    if (p.se_labels.empty()) {
        for (int x = 0; x <= g.shape().part(p.sink) + 1; ++x) vertices.emplace_back(x, p.sink);
        return vertices;
    }
    int x = 0;
    for (std::size_t s = 0; s < p.se_labels.size(); ++s) {
        const int y = p.source - 1 + static_cast<int>(s);
        for (; x <= p.se_labels[s]; ++x) vertices.emplace_back(x, y);
    }
    for (; x <= g.shape().part(p.sink) + 1; ++x) vertices.emplace_back(x, p.sink);
    return vertices;
}

// All paths e_i -> v_j. Empty for i > j + 1; the all-east path for
// i = j + 1; otherwise one path per strictly increasing label sequence
// t_i < ... < t_j with t_r <= lambda_r.
inline std::vector<LatticePath> enumerate_p_ij(const TwistedDigraph& g, int i, int j) {
    const int k = g.strips();
    if (i < 1 || j < 1 || i > k || j > k) {
        throw std::invalid_argument("endpoint index out of range");
    }
    std::vector<LatticePath> paths;
    if (i > j + 1) return paths;
    if (i == j + 1) {
        paths.push_back({i, j, {}});
        return paths;
    }

    std::vector<int> labels(static_cast<std::size_t>(j - i + 1));
    std::function<void(int)> extend = [&](int r) {
        if (r > j) {
            paths.push_back({i, j, labels});
            return;
        }
        const int lowest = r == i ? 0 : labels[r - i - 1] + 1;
        for (int t = lowest; t <= g.shape().part(r); ++t) {
            labels[r - i] = t;
            extend(r + 1);
        }
    };
    extend(i);

#ifndef NDEBUG
    // Strict label increase forces at most one 1/beta edge and at most one
    // 1/alpha edge per path, the latter only in the final strip.
    for (const LatticePath& p : paths) {
        int beta_edges = 0;
        int alpha_edges = 0;
        for (std::size_t s = 0; s < p.se_labels.size(); ++s) {
            const int strip = p.source + static_cast<int>(s);
            if (p.se_labels[s] == 0) ++beta_edges;
            if (p.se_labels[s] > g.shape().part(strip + 1)) {
                ++alpha_edges;
                assert(strip == p.sink);
            }
        }
        assert(beta_edges <= 1 && alpha_edges <= 1);
    }
#endif
    return paths;
}

inline LaurentPolynomial w_ij_enumerated(const TwistedDigraph& g, int i, int j) {
    LaurentPolynomial total;
    for (const LatticePath& p : enumerate_p_ij(g, i, j)) total += path_weight(g, p);
    return total;
}

inline PolyMatrix w_matrix_enumerated(const TwistedDigraph& g) {
    const int k = g.strips();
    PolyMatrix m(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            m.at(i - 1, j - 1) = w_ij_enumerated(g, i, j);
        }
    }
    return m;
}

// Closed-form matrix entry:
//   A_ij = binom(l, j-i+1) + (1/b) binom(l, j-i)
//        + sum_{p=1}^{lambda_j - l} (1/a)^p (binom(l+p-1, j-i) + (1/b) binom(l+p-1, j-i-1))
// with l = lambda_{j+1} and the convention lambda_{k+1} = 0.
inline LaurentPolynomial a_ij_closed_form(const Shape& shape, int i, int j) {
    const int k = shape.rows();
    if (i < 1 || j < 1 || i > k || j > k) {
        throw std::invalid_argument("matrix index out of range");
    }
    const long l = shape.part(j + 1);
    LaurentPolynomial entry(binomial(l, j - i + 1));
    entry += LaurentPolynomial::monomial(0, -1, binomial(l, j - i));
    for (long p = 1; p <= shape.part(j) - l; ++p) {
        entry += LaurentPolynomial::monomial(-static_cast<int>(p), 0,
                                             binomial(l + p - 1, j - i));
        entry += LaurentPolynomial::monomial(-static_cast<int>(p), -1,
                                             binomial(l + p - 1, j - i - 1));
    }
    return entry;
}

inline PolyMatrix a_matrix(const Shape& shape) {
    const int k = shape.rows();
    PolyMatrix m(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            m.at(i - 1, j - 1) = a_ij_closed_form(shape, i, j);
        }
    }
    return m;
}

// P(tau) = alpha^(k + lambda_1) beta^n det A.
inline LaurentPolynomial det_formula(const StateWord& tau) {
    const Shape shape = shape_of_word(tau);
    const LaurentPolynomial det = determinant(a_matrix(shape));
    return LaurentPolynomial::monomial(shape.rows() + shape.part(1), shape.n()) * det;
}

// k paths, component i running e_i -> v_{pi(i)} (pi stored 0-based).
struct KPathFamily {
    std::vector<int> permutation;
    std::vector<LatticePath> paths;
};

// The identity family (p_11, ..., p_kk) where p_ii takes the southeast
// edge labeled C_i in strip i.
inline KPathFamily family_of_catalan_path(const CatalanPath& c, const TwistedDigraph& g) {
    if (!(c.shape() == g.shape())) {
        throw std::invalid_argument("path and digraph shapes differ");
    }
    KPathFamily family;
    const int k = g.strips();
    family.permutation.resize(static_cast<std::size_t>(k));
    std::iota(family.permutation.begin(), family.permutation.end(), 0);
    for (int i = 1; i <= k; ++i) {
        family.paths.push_back({i, i, {c.label(i)}});
    }
    return family;
}

inline bool is_disjoint(const TwistedDigraph& g, const KPathFamily& family) {
    std::vector<std::vector<std::pair<int, int>>> vertex_sets;
    vertex_sets.reserve(family.paths.size());
    for (const LatticePath& p : family.paths) {
        auto vertices = path_vertices(g, p);
        std::sort(vertices.begin(), vertices.end());
        vertex_sets.push_back(std::move(vertices));
    }
    for (std::size_t a = 0; a < vertex_sets.size(); ++a) {
        for (std::size_t b = a + 1; b < vertex_sets.size(); ++b) {
            std::vector<std::pair<int, int>> common;
            std::set_intersection(vertex_sets[a].begin(), vertex_sets[a].end(),
                                  vertex_sets[b].begin(), vertex_sets[b].end(),
                                  std::back_inserter(common));
            if (!common.empty()) return false;
        }
    }
    return true;
}

inline LaurentPolynomial family_weight(const TwistedDigraph& g, const KPathFamily& family) {
    LaurentPolynomial product = LaurentPolynomial::one();
    for (const LatticePath& p : family.paths) product *= path_weight(g, p);
    return product;
}

inline int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) {
        for (std::size_t b = a + 1; b < perm.size(); ++b) {
            if (perm[a] > perm[b]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

// Exhaustive check of the determinant identity on this digraph: the signed
// sum of family weights over all vertex-disjoint k-path families (over all
// permutations) must equal det(w_ij). Guarded: k <= 6 and lambda_1 <= 8.
inline bool lgv_check(const Shape& shape) {
    if (shape.rows() > 6 || shape.part(1) > 8) {
        throw size_error("lgv_check limited to k <= 6 and lambda_1 <= 8");
    }
    const TwistedDigraph g(shape);
    const int k = g.strips();

    std::vector<std::vector<std::vector<LatticePath>>> all_paths(
        static_cast<std::size_t>(k), std::vector<std::vector<LatticePath>>(
                                         static_cast<std::size_t>(k)));
    for (int i = 1; i <= k; ++i) {
        for (int j = 1; j <= k; ++j) {
            all_paths[i - 1][j - 1] = enumerate_p_ij(g, i, j);
        }
    }

    LaurentPolynomial signed_sum;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const int sign = permutation_sign(perm);
        std::vector<const std::vector<LatticePath>*> pools;
        bool feasible = true;
        for (int i = 0; i < k; ++i) {
            pools.push_back(&all_paths[i][perm[i]]);
            if (pools.back()->empty()) feasible = false;
        }
        if (!feasible) continue;

        std::vector<std::size_t> choice(static_cast<std::size_t>(k), 0);
        while (true) {
            KPathFamily family;
            family.permutation = perm;
            for (int i = 0; i < k; ++i) family.paths.push_back((*pools[i])[choice[i]]);
            if (is_disjoint(g, family)) {
                const LaurentPolynomial weight = family_weight(g, family);
                if (sign > 0) {
                    signed_sum += weight;
                } else {
                    signed_sum -= weight;
                }
            }
            int pos = k - 1;
            while (pos >= 0 && ++choice[pos] == pools[pos]->size()) {
                choice[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return signed_sum == determinant(w_matrix_enumerated(g));
}

} // namespace tasep
