#include "tasep/partition_function.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using tasep::LaurentPolynomial;
using tasep::StateWord;

TEST_CASE("closed form for the smallest sizes") {
    const LaurentPolynomial a = LaurentPolynomial::alpha_pow(1);
    const LaurentPolynomial b = LaurentPolynomial::beta_pow(1);
    CHECK(tasep::z_n_derrida(1) == a + b);
    CHECK(tasep::z_n_derrida(2) == a * a + a * b + b * b + a * a * b + a * b * b);
    CHECK(tasep::z_n_derrida(3).eval(1, 1) == 14);
    CHECK_THROWS_AS(tasep::z_n_derrida(0), std::invalid_argument);
}

TEST_CASE("enumeration route for the smallest sizes") {
    const LaurentPolynomial a = LaurentPolynomial::alpha_pow(1);
    const LaurentPolynomial b = LaurentPolynomial::beta_pow(1);
    CHECK(tasep::z_n_enumeration(1) == a + b);
    CHECK(tasep::z_n_enumeration(2) == a * a + a * b + b * b + a * a * b + a * b * b);
    CHECK(tasep::z_n_enumeration(4).eval(1, 1) == 42);
    CHECK_THROWS_AS(tasep::z_n_enumeration(11), tasep::size_error);
}

TEST_CASE("the two routes agree exactly") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(tasep::z_n_derrida(n) == tasep::z_n_enumeration(n));
    }
}

TEST_CASE("unit evaluation hits the Catalan numbers") {
    const long catalan[] = {2, 5, 14, 42, 132, 429, 1430, 4862}; // C_2 .. C_9
    for (int n = 1; n <= 8; ++n) {
        CHECK(tasep::z_n_derrida(n).eval(1, 1) == catalan[n - 1]);
    }
}

TEST_CASE("monomials stay within the degree window") {
    for (int n = 1; n <= 8; ++n) {
        const LaurentPolynomial z = tasep::z_n_derrida(n);
        for (const auto& [exps, coeff] : z.terms()) {
            CHECK(exps.first >= 0);
            CHECK(exps.second >= 0);
            CHECK(exps.first + exps.second >= n);
            CHECK(exps.first + exps.second <= 2 * n);
        }
    }
}

TEST_CASE("normalization is the sum over all types") {
    for (int n = 1; n <= 6; ++n) {
        LaurentPolynomial total;
        for (const StateWord& tau : tasep::testing::all_words(n)) {
            total += tasep::sum_weights(tau);
        }
        CHECK(total == tasep::z_n_derrida(n));
    }
}
