#include "tasep/laurent.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using tasep::BigInt;
using tasep::BigRational;
using tasep::LaurentPolynomial;

namespace {
const LaurentPolynomial a = LaurentPolynomial::alpha_pow(1);
const LaurentPolynomial b = LaurentPolynomial::beta_pow(1);
} // namespace

TEST_CASE("addition merges terms canonically") {
    CHECK((a + b) + LaurentPolynomial() == a + b);
    CHECK(a * a * b + a * b * b + a * b * b == a * a * b + LaurentPolynomial(2) * a * b * b);

    const LaurentPolynomial p = a * a * b - LaurentPolynomial(3) * b;
    CHECK((p + (-p)).is_zero());
    CHECK((p - p).terms().empty());
}

TEST_CASE("multiplication adds exponents, negative ones included") {
    const LaurentPolynomial ab = a * b;
    CHECK(pow(ab, 2) * LaurentPolynomial::monomial(-1, -1) == ab);
    CHECK((LaurentPolynomial::alpha_pow(-1) + LaurentPolynomial::beta_pow(-1)) * ab == b + a);

    // (alpha beta)^16 (1/beta)^3 (1/alpha)^4 = alpha^12 beta^13
    CHECK(pow(ab, 16) * LaurentPolynomial::monomial(-4, -3) ==
          LaurentPolynomial::monomial(12, 13));
}

TEST_CASE("exact evaluation") {
    CHECK((a + b).eval(1, 1) == 2);
    CHECK((a * a * b + a * b * b).eval(BigRational(1, 2), BigRational(1, 3)) ==
          BigRational(5, 36));
    CHECK_THROWS_AS(LaurentPolynomial::alpha_pow(-1).eval(0, 1), std::domain_error);
    CHECK(LaurentPolynomial::beta_pow(2).eval(0, BigRational(1, 2)) == BigRational(1, 4));
}

TEST_CASE("text form") {
    CHECK(LaurentPolynomial().str() == "0");
    CHECK((a * a * b + a * b * b).str() == "a^2*b + a*b^2");
    CHECK((LaurentPolynomial::alpha_pow(-1) + LaurentPolynomial::beta_pow(-1)).str() ==
          "b^-1 + a^-1");
    CHECK((LaurentPolynomial(2) * a * b - LaurentPolynomial(1)).str() == "2*a*b - 1");
    CHECK((-a).str() == "-a");
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPolynomial p = tasep::testing::random_poly(rng);
        const LaurentPolynomial q = tasep::testing::random_poly(rng);
        const LaurentPolynomial r = tasep::testing::random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const LaurentPolynomial p = tasep::testing::random_poly(rng);
        const LaurentPolynomial q = tasep::testing::random_poly(rng);
        const BigRational x = tasep::testing::random_nonzero_rational(rng);
        const BigRational y = tasep::testing::random_nonzero_rational(rng);
        CHECK((p + q).eval(x, y) == p.eval(x, y) + q.eval(x, y));
        CHECK((p * q).eval(x, y) == p.eval(x, y) * q.eval(x, y));
    }
}

TEST_CASE("canonical form stores no zero coefficients") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPolynomial p = tasep::testing::random_poly(rng);
        const LaurentPolynomial q = tasep::testing::random_poly(rng);
        const LaurentPolynomial combined = p * q + p - q;
        for (const auto& [exps, coeff] : combined.terms()) {
            CHECK(coeff != 0);
        }
    }
}
