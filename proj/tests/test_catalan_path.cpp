#include "tasep/catalan_path.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using tasep::CatalanPath;
using tasep::CatalanTableau;
using tasep::Cell;
using tasep::LaurentPolynomial;
using tasep::Shape;
using tasep::StateWord;

TEST_CASE("path construction enforces the label invariants") {
    const Shape shape({2, 1}, 2);
    CHECK_NOTHROW(CatalanPath(shape, {2, 1}));
    CHECK_THROWS_AS(CatalanPath(shape, {1, 2}), std::invalid_argument); // increasing
    CHECK_THROWS_AS(CatalanPath(shape, {2, 2}), std::invalid_argument); // C_2 > lambda_2
    CHECK_THROWS_AS(CatalanPath(shape, {2}), std::invalid_argument);    // wrong length
}

TEST_CASE("path weight of a size-16 worked example") {
    const Shape shape({8, 5, 3, 3, 1, 0}, 10);
    const CatalanPath c(shape, {7, 3, 3, 0, 0, 0});
    CHECK(path_weight(c) == LaurentPolynomial::monomial(-4, -3));
    CHECK(path_total_weight(c) == LaurentPolynomial::monomial(12, 13));
}

TEST_CASE("path weights of degenerate paths") {
    // all-zero labels against a full-width first row: exactly (1/beta)^k
    const Shape staircase({3, 1, 0}, 3);
    CHECK(path_weight(CatalanPath(staircase, {0, 0, 0})) ==
          LaurentPolynomial::beta_pow(-3));

    // the forced segment east of the diagram contributes (1/alpha)^(n-k-lambda_1)
    const Shape narrow({1, 0}, 3);
    CHECK(path_weight(CatalanPath(narrow, {0, 0})) ==
          LaurentPolynomial::monomial(-2, -2));

    const Shape cell({1}, 1);
    CHECK(path_weight(CatalanPath(cell, {1})) == LaurentPolynomial::alpha_pow(-1));
}

TEST_CASE("closed-form weight equals the edge-by-edge walk") {
    for (int n = 0; n <= 8; ++n) {
        for (const StateWord& tau : tasep::testing::all_words(n)) {
            const Shape shape = shape_of_word(tau);
            for (const CatalanPath& c : enumerate_paths(shape)) {
                CHECK(path_weight(c) == path_weight_by_walk(c));
            }
        }
    }
}

TEST_CASE("bijection on the size-16 worked example") {
    const Shape shape({8, 5, 3, 3, 1, 0}, 10);
    const CatalanPath c(shape, {7, 3, 3, 0, 0, 0});
    const CatalanTableau t = path_to_tableau(c);
    CHECK(validate_tableau(t));
    CHECK(tableau_weight(t) == LaurentPolynomial::monomial(12, 13));
    CHECK(tableau_to_path(t) == c);
}

TEST_CASE("bijection on degenerate paths") {
    const Shape cell({1}, 1);
    const CatalanTableau beta_only = path_to_tableau(CatalanPath(cell, {1}));
    CHECK(beta_only.cell(1, 1) == Cell::Beta);
    CHECK(tableau_to_path(beta_only) == CatalanPath(cell, {1}));

    // no Betas: every nonempty column receives an Alpha in its lowest row
    const Shape shape({2, 1}, 2);
    const CatalanTableau t = path_to_tableau(CatalanPath(shape, {0, 0}));
    CHECK(t.cell(1, 1) == Cell::Empty);
    CHECK(t.cell(2, 1) == Cell::Alpha);
    CHECK(t.cell(1, 2) == Cell::Alpha);
    CHECK(tableau_to_path(t) == CatalanPath(shape, {0, 0}));
}

TEST_CASE("path enumeration for small shapes") {
    const auto one_cell = enumerate_paths(Shape({1}, 1));
    REQUIRE(one_cell.size() == 2);
    CHECK(one_cell[0].labels() == std::vector<int>{0});
    CHECK(one_cell[1].labels() == std::vector<int>{1});

    CHECK(enumerate_paths(Shape({0, 0, 0}, 2)).size() == 1);

    const auto two_rows = enumerate_paths(Shape({1, 0}, 1));
    REQUIRE(two_rows.size() == 2);
    CHECK(two_rows[0].labels() == std::vector<int>{0, 0});
    CHECK(two_rows[1].labels() == std::vector<int>{1, 0});
}

TEST_CASE("roundtrip and weight preservation over full enumerations") {
    for (int n = 0; n <= 8; ++n) {
        for (const StateWord& tau : tasep::testing::all_words(n)) {
            const Shape shape = shape_of_word(tau);
            const auto paths = enumerate_paths(shape);
            const auto tableaux = enumerate_tableaux(tau);
            CHECK(paths.size() == tableaux.size());

            for (const CatalanPath& c : paths) {
                const CatalanTableau t = path_to_tableau(c);
                CHECK(validate_tableau(t));
                CHECK(tableau_to_path(t) == c);
                CHECK(path_total_weight(c) == tableau_weight(t));
            }
            for (const CatalanTableau& t : tableaux) {
                CHECK(path_to_tableau(tableau_to_path(t)) == t);
            }
        }
    }
}
