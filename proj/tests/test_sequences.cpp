#include "tptri/tp_cert.hpp"

#include "tptri/errors.hpp"
#include "tptri/triangle.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace tptri;

TEST_CASE("toeplitz truncation") {
    std::vector<Rational> a{7};
    Matrix<Rational> m = toeplitz(a, 1);
    CHECK(m(0, 0) == 7);
    CHECK(m(0, 1) == 0);
    CHECK(m(1, 0) == 0);
    CHECK(m(1, 1) == 7);

    std::vector<Rational> b{1, 2, 3};
    Matrix<Rational> t = toeplitz(b, 2);
    CHECK(t(0, 0) == 1);
    CHECK(t(1, 0) == 2);
    CHECK(t(2, 0) == 3);
    CHECK(t(2, 1) == 2);
    CHECK(t(0, 2) == 0);

    Matrix<Rational> empty_seq = toeplitz({}, 2);
    CHECK(empty_seq(1, 1) == 0);
}

TEST_CASE("hankel truncation needs enough terms") {
    std::vector<Rational> a{1, 1, 2, 5, 14};
    Matrix<Rational> h = hankel(a, 2);
    CHECK(h(0, 0) == 1);
    CHECK(h(1, 1) == 2);
    CHECK(h(2, 2) == 14);
    CHECK(h(2, 1) == 5);
    CHECK_THROWS_AS(hankel(a, 3), InsufficientLengthError);
}

TEST_CASE("log-convexity of familiar sequences") {
    std::vector<Rational> catalan, bell;
    for (unsigned long n = 0; n <= 10; ++n) {
        catalan.push_back(oracles::catalan(n));
        bell.push_back(oracles::bell(n));
    }
    CHECK(is_log_convex(catalan));
    CHECK(!is_log_concave(catalan));
    CHECK(is_log_convex(bell));

    std::vector<Rational> binom_row{1, 4, 6, 4, 1};
    CHECK(is_log_concave(binom_row));
    CHECK(!is_log_convex(binom_row));

    std::vector<Rational> with_neg{1, -1, 1};
    CHECK_THROWS_AS(is_log_convex(with_neg), NegativeTermError);
    CHECK_THROWS_AS(is_log_concave(with_neg), NegativeTermError);

    CHECK(is_log_convex(std::vector<Rational>{3, 5}));
    CHECK(is_log_concave(std::vector<Rational>{}));
}

TEST_CASE("zero terms route through the full definitions") {
    CHECK(is_log_convex(std::vector<Rational>{1, 0, 0, 1}));
    CHECK(is_log_convex(std::vector<Rational>{2, 0, 0, 3}));
    CHECK(!is_log_convex(std::vector<Rational>{0, 1, 0}));
    // Leading zeros ahead of positive terms fail the pairwise definition:
    // a_1 a_3 = 0 < a_2 a_2.
    CHECK(!is_log_convex(std::vector<Rational>{0, 0, 5, 10, 20}));

    CHECK(is_log_concave(std::vector<Rational>{0, 1, 0}));
    CHECK(!is_log_concave(std::vector<Rational>{1, 0, 1}));
    CHECK(!is_log_concave(std::vector<Rational>{1, 0, 0, 1}));
    CHECK(is_log_concave(std::vector<Rational>{1, 2, 1, 0, 0}));
}

TEST_CASE("log-convexity matches the second-order Hankel certificate") {
    oracles::Rng rng(20240847);
    for (int rep = 0; rep < 150; ++rep) {
        std::vector<Rational> a;
        for (int i = 0; i < 9; ++i) a.push_back(oracles::random_positive(rng, 9, 3));
        CHECK(is_log_convex(a) == is_tp_r(hankel(a, 4), 2).verified);
    }
}

TEST_CASE("polya frequency truncations") {
    std::vector<Rational> binom_row{1, 2, 1};
    CHECK(is_pf_r(binom_row, 3, 4).verified);

    std::vector<Rational> gap{1, 0, 1};
    TPReport report = is_pf_r(gap, 2, 2);
    CHECK(!report.verified);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->value < 0);

    CHECK_THROWS_AS(is_pf_r({1, -2, 1}, 2, 2), NegativeTermError);

    // Log-concave positive sequences are second-order Polya frequency.
    oracles::Rng rng(20240848);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<Rational> a;
        for (int i = 0; i < 7; ++i) a.push_back(oracles::random_positive(rng, 9, 3));
        if (is_log_concave(a)) {
            CHECK(is_pf_r(a, 2, 6).verified);
        }
    }
}

TEST_CASE("catalan-like columns inherit log-convexity from second-order positivity") {
    oracles::Rng rng(20240849);
    for (int rep = 0; rep < 40; ++rep) {
        CoefficientSpec spec = oracles::spec_for_cor24(rng, 9);
        std::vector<Rational> col = catalan_like(spec, 8);
        REQUIRE(col.size() == 9);
        CHECK(is_log_convex(col));
    }
}
