#pragma once

#include "tasep/bigint.hpp"
#include "tasep/errors.hpp"
#include "tasep/partition_function.hpp"
#include "tasep/state_word.hpp"
#include "tasep/tableau.hpp"

#include <stdexcept>
#include <vector>

namespace tasep {

struct ChainSpec {
    int n;
    BigRational alpha;
    BigRational beta;

    ChainSpec(int n_, BigRational alpha_, BigRational beta_)
        : n(n_), alpha(std::move(alpha_)), beta(std::move(beta_)) {
        if (n < 1) throw std::invalid_argument("chain needs n >= 1 sites");
        if (alpha <= 0 || alpha > 1 || beta <= 0 || beta > 1) {
            throw std::invalid_argument("rates must lie in (0, 1]");
        }
    }
};

// Row-stochastic transition matrix of the discrete-time chain over all 2^n
// states, indexed by word_index. Off-diagonal mass comes from the three
// moves (enter, exit, internal hop), each with probability p/(n+1); the
// remainder sits on the diagonal.
class TransitionMatrix {
public:
    TransitionMatrix(int sites, std::vector<std::vector<BigRational>> rows)
        : sites_(sites), rows_(std::move(rows)) {}

    int sites() const { return sites_; }
    std::size_t dimension() const { return rows_.size(); }
    const BigRational& at(std::size_t from, std::size_t to) const {
        return rows_.at(from).at(to);
    }

private:
    int sites_;
    std::vector<std::vector<BigRational>> rows_;
};

inline TransitionMatrix build_chain(const ChainSpec& spec) {
    const int n = spec.n;
    const std::size_t dim = std::size_t{1} << n;
    const BigRational uniform(1, n + 1);
    std::vector<std::vector<BigRational>> rows(dim, std::vector<BigRational>(dim, 0));

    for (std::size_t s = 0; s < dim; ++s) {
        const StateWord word = word_from_index(n, s);
        BigRational outflow = 0;
        auto add_move = [&](std::size_t target, const BigRational& probability) {
            rows[s][target] += probability;
            outflow += probability;
        };
        if (!word.occupied(1)) {
            add_move(s | (std::size_t{1} << (n - 1)), spec.alpha * uniform);
        }
        if (word.occupied(n)) {
            add_move(s & ~std::size_t{1}, spec.beta * uniform);
        }
        for (int site = 1; site < n; ++site) {
            if (word.occupied(site) && !word.occupied(site + 1)) {
                const std::size_t swapped =
                    s ^ (std::size_t{3} << (n - site - 1)); // flips sites site, site+1
                add_move(swapped, uniform);
            }
        }
        rows[s][s] += 1 - outflow;
    }
    return TransitionMatrix(n, std::move(rows));
}

// The unique probability vector pi with pi M = pi, found by exact Gaussian
// elimination on (M^T - I) x = 0 with one redundant equation replaced by
// the normalization sum(x) = 1. Any single row may be replaced: the rows of
// M^T - I sum to zero, so dropping one keeps full remaining rank.
inline std::vector<BigRational> stationary_distribution(const TransitionMatrix& m) {
    const std::size_t dim = m.dimension();
    std::vector<std::vector<BigRational>> a(dim, std::vector<BigRational>(dim + 1, 0));
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t col = 0; col < dim; ++col) {
            a[row][col] = m.at(col, row);
        }
        a[row][row] -= 1;
    }
    for (std::size_t col = 0; col < dim; ++col) a[0][col] = 1;
    a[0][dim] = 1;

    for (std::size_t p = 0; p < dim; ++p) {
        std::size_t pivot = p;
        while (pivot < dim && a[pivot][p] == 0) ++pivot;
        if (pivot == dim) throw std::logic_error("stationary system is singular");
        if (pivot != p) std::swap(a[pivot], a[p]);
        for (std::size_t r = p + 1; r < dim; ++r) {
            if (a[r][p] == 0) continue;
            const BigRational factor = a[r][p] / a[p][p];
            a[r][p] = 0;
            for (std::size_t col = p + 1; col <= dim; ++col) {
                a[r][col] -= factor * a[p][col];
            }
        }
    }

    std::vector<BigRational> pi(dim, 0);
    for (std::size_t rp = dim; rp-- > 0;) {
        BigRational value = a[rp][dim];
        for (std::size_t col = rp + 1; col < dim; ++col) {
            value -= a[rp][col] * pi[col];
        }
        pi[rp] = value / a[rp][rp];
    }
    return pi;
}

// Does the stationary vector match eval(P(tau)) / eval(Z_n) for every
// state? Exact rational comparison, no tolerance. Guarded at n <= 8.
inline bool verify_theorem_cw(const ChainSpec& spec) {
    if (spec.n > 8) throw size_error("verify_theorem_cw limited to n <= 8");
    const std::vector<BigRational> pi = stationary_distribution(build_chain(spec));
    const BigRational z = z_n_derrida(spec.n).eval(spec.alpha, spec.beta);
    for (std::size_t index = 0; index < pi.size(); ++index) {
        const StateWord tau = word_from_index(spec.n, index);
        const BigRational expected = sum_weights(tau).eval(spec.alpha, spec.beta) / z;
        if (pi[index] != expected) return false;
    }
    return true;
}

} // namespace tasep
