#pragma once

#include "tasep/errors.hpp"
#include "tasep/laurent.hpp"
#include "tasep/state_word.hpp"
#include "tasep/tableau.hpp"

#include <stdexcept>

namespace tasep {

// Closed form for the normalization:
//   Z_n = (alpha beta)^n sum_{p=1}^n p/(2n-p) binom(2n-p, n)
//                        (alpha^-p-1 - beta^-p-1)/(alpha^-1 - beta^-1).
// The geometric quotient is expanded division-free as
// sum_{i=0}^p alpha^-i beta^-(p-i), so alpha = beta needs no special case.
// The ballot prefactor p/(2n-p) binom(2n-p, n) is an integer; its
// integrality is checked at runtime.
inline LaurentPolynomial z_n_derrida(int n) {
    if (n < 1) throw std::invalid_argument("Z_n requires n >= 1");
    LaurentPolynomial total;
    for (int p = 1; p <= n; ++p) {
        const BigInt scaled = BigInt(p) * binomial(2L * n - p, n);
        if (scaled % (2 * n - p) != 0) {
            throw std::logic_error("Z_n prefactor failed integrality");
        }
        const BigInt coeff = scaled / (2 * n - p);
        for (int i = 0; i <= p; ++i) {
            total += LaurentPolynomial::monomial(n - i, n - (p - i), coeff);
        }
    }
    return total;
}

// Z_n by brute force: the sum of sum_weights over all 2^n state words.
inline LaurentPolynomial z_n_enumeration(int n) {
    if (n < 1) throw std::invalid_argument("Z_n requires n >= 1");
    if (n > 10) throw size_error("z_n_enumeration limited to n <= 10");
    LaurentPolynomial total;
    for (std::size_t index = 0; index < (std::size_t{1} << n); ++index) {
        total += sum_weights(word_from_index(n, index));
    }
    return total;
}

} // namespace tasep
