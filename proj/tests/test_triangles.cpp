#include "tptri/triangle.hpp"

#include "tptri/catalog.hpp"
#include "tptri/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace tptri;

namespace {

const CoefficientSpec& coeff_entry(const char* name) {
    const CatalogEntry* entry = catalog_find(name);
    REQUIRE(entry != nullptr);
    return std::get<CoefficientSpec>(entry->spec);
}

const GeneralSpec& general_entry(const char* name) {
    const CatalogEntry* entry = catalog_find(name);
    REQUIRE(entry != nullptr);
    return std::get<GeneralSpec>(entry->spec);
}

void check_rows(const LowerTriangle& tri, const std::vector<std::vector<long>>& expect) {
    long origin = tri.index_origin();
    REQUIRE(tri.dim() >= static_cast<long>(expect.size()));
    for (std::size_t i = 0; i < expect.size(); ++i) {
        const std::vector<Rational>& row = tri.row(origin + static_cast<long>(i));
        REQUIRE(row.size() == expect[i].size());
        for (std::size_t j = 0; j < expect[i].size(); ++j) {
            CHECK(row[j] == expect[i][j]);
        }
    }
}

}  // namespace

TEST_CASE("ballot-type triangle rows") {
    LowerTriangle tri = build_recursive(coeff_entry("aigner-catalan"), 4);
    check_rows(tri, {{1}, {1, 1}, {2, 3, 1}, {5, 9, 5, 1}, {14, 28, 20, 7, 1}});
}

TEST_CASE("Shapiro triangle rows") {
    LowerTriangle tri = build_recursive(coeff_entry("shapiro-catalan"), 4);
    check_rows(tri, {{1}, {2, 1}, {5, 4, 1}, {14, 14, 6, 1}, {42, 48, 27, 8, 1}});
}

TEST_CASE("Bell triangle rows") {
    LowerTriangle tri = build_recursive(coeff_entry("bell"), 4);
    check_rows(tri, {{1}, {1, 1}, {2, 3, 1}, {5, 10, 6, 1}, {15, 37, 31, 10, 1}});
}

TEST_CASE("Stirling triangle rows") {
    LowerTriangle tri = build_recursive(coeff_entry("stirling2"), 4);
    check_rows(tri, {{1}, {1, 1}, {1, 3, 1}, {1, 7, 6, 1}, {1, 15, 25, 10, 1}});
}

TEST_CASE("Pascal triangle matches binomials") {
    LowerTriangle tri = build_recursive(coeff_entry("pascal"), 10);
    for (long n = 0; n <= 10; ++n) {
        for (long k = 0; k <= n; ++k) {
            CHECK(tri.at(n, k) == oracles::binom(static_cast<unsigned long>(n),
                                                 static_cast<unsigned long>(k)));
        }
    }
}

TEST_CASE("Stirling triangle matches the partition-count sum") {
    LowerTriangle tri = build_recursive(coeff_entry("stirling2"), 10);
    for (long n = 0; n <= 10; ++n) {
        for (long k = 0; k <= n; ++k) {
            CHECK(tri.at(n, k) == oracles::stirling2(static_cast<unsigned long>(n) + 1,
                                                     static_cast<unsigned long>(k) + 1));
        }
    }
}

TEST_CASE("first columns of the named triangles") {
    std::vector<Rational> aigner = catalan_like(coeff_entry("aigner-catalan"), 10);
    std::vector<Rational> shapiro = catalan_like(coeff_entry("shapiro-catalan"), 10);
    std::vector<Rational> bell = catalan_like(coeff_entry("bell"), 10);
    for (unsigned long n = 0; n <= 10; ++n) {
        CHECK(aigner[n] == oracles::catalan(n));
        CHECK(shapiro[n] == oracles::catalan(n + 1));
        CHECK(bell[n] == oracles::bell(n));
    }
    // Frozen spot values.
    CHECK(aigner[10] == 16796);
    CHECK(bell[10] == 115975);
}

TEST_CASE("coefficient matrices of the named triangles") {
    TriMatrix bell = coefficient_matrix(coeff_entry("bell"), 5);
    for (long i = 0; i <= 5; ++i) CHECK(bell.diag(i) == i + 1);
    for (long k = 1; k <= 5; ++k) {
        CHECK(bell.super(k) == 1);
        CHECK(bell.sub(k) == k);
    }

    TriMatrix aigner = coefficient_matrix(coeff_entry("aigner-catalan"), 5);
    CHECK(aigner.diag(0) == 1);
    for (long i = 1; i <= 5; ++i) CHECK(aigner.diag(i) == 2);
    for (long k = 1; k <= 5; ++k) {
        CHECK(aigner.super(k) == 1);
        CHECK(aigner.sub(k) == 1);
    }
}

TEST_CASE("eulerian triangle against the alternating sum") {
    LowerTriangle tri = build_general(general_entry("eulerian"), 10);
    CHECK(tri.index_origin() == 1);
    check_rows(tri, {{1}, {1, 1}, {1, 4, 1}, {1, 11, 11, 1}, {1, 26, 66, 26, 1}});
    for (long n = 1; n <= 10; ++n) {
        for (long k = 1; k <= n; ++k) {
            CHECK(tri.at(n, k) == oracles::eulerian(static_cast<unsigned long>(n),
                                                    static_cast<unsigned long>(k)));
        }
    }
}

TEST_CASE("narayana triangle: closed form, cross-check, row sums") {
    LowerTriangle tri = build_general(general_entry("narayana"), 12);
    check_rows(tri, {{1}, {1, 1}, {1, 3, 1}, {1, 6, 6, 1}, {1, 10, 20, 10, 1}});
    for (long n = 1; n <= 12; ++n) {
        Rational sum = 0;
        for (long k = 1; k <= n; ++k) {
            CHECK(tri.at(n, k) == oracles::narayana(static_cast<unsigned long>(n),
                                                    static_cast<unsigned long>(k)));
            sum += tri.at(n, k);
        }
        CHECK(sum == oracles::catalan(static_cast<unsigned long>(n)));
    }
}

TEST_CASE("a broken closed form is rejected") {
    GeneralSpec bad = general_entry("narayana");
    bad.closed_form = [](long n, long k) {
        Rational v = oracles::narayana(static_cast<unsigned long>(n),
                                       static_cast<unsigned long>(k));
        if (n == 5 && k == 3) v += 1;
        return v;
    };
    CHECK_THROWS_AS(build_general(bad, 8), ClosedFormMismatchError);

    // A wrong base is caught too.
    GeneralSpec wrong_base = general_entry("narayana");
    wrong_base.base = 2;
    CHECK_THROWS_AS(build_general(wrong_base, 3), ClosedFormMismatchError);
}

TEST_CASE("general recurrence reproduces the three-sequence build") {
    oracles::Rng rng(20240830);
    for (int rep = 0; rep < 40; ++rep) {
        CoefficientSpec spec = oracles::random_spec(rng, 10);
        LowerTriangle direct = build_recursive(spec, 8);
        LowerTriangle general = build_general(as_general(spec), 8);
        CHECK(direct == general);
    }
}

TEST_CASE("factorization identity on catalog and random specs") {
    for (const char* name : {"pascal", "stirling2", "aigner-catalan", "shapiro-catalan",
                             "bell"}) {
        for (long N = 1; N <= 12; ++N) {
            CHECK(verify_factorization(coeff_entry(name), N));
        }
    }
    oracles::Rng rng(20240831);
    for (int rep = 0; rep < 30; ++rep) {
        CoefficientSpec spec = oracles::random_spec(rng, 14);
        CHECK(verify_factorization(spec, 10));
    }
    CHECK_THROWS_AS(verify_factorization(coeff_entry("pascal"), 0), Error);
}

TEST_CASE("negative coefficients are caught lazily") {
    CoefficientSpec bad(SeqGen::from_text("[-1]", 1), SeqGen::from_text("1", 0),
                        SeqGen::from_text("0", 1));
    // Order 0 never fetches r.
    CHECK(build_recursive(bad, 0).dim() == 1);
    CHECK_THROWS_AS(build_recursive(bad, 1), NegativeCoefficientError);

    try {
        build_recursive(bad, 1);
        FAIL("expected NegativeCoefficientError");
    } catch (const NegativeCoefficientError& e) {
        CHECK(e.sequence() == 'r');
        CHECK(e.index() == 1);
    }

    CoefficientSpec bad_s(SeqGen::from_text("1", 1), SeqGen::from_text("k - 9", 0),
                          SeqGen::from_text("1", 1));
    CHECK_THROWS_AS(build_recursive(bad_s, 3), NegativeCoefficientError);
}

TEST_CASE("finite lists stop the build with a clear error") {
    CoefficientSpec spec(SeqGen::from_text("[1]", 1), SeqGen::from_text("2", 0),
                         SeqGen::from_text("1", 1));
    CHECK(build_recursive(spec, 1).at(1, 1) == 1);
    CHECK_THROWS_AS(build_recursive(spec, 2), UndefinedIndexError);
}

TEST_CASE("triangle shape and access") {
    LowerTriangle tri = build_recursive(coeff_entry("pascal"), 3);
    CHECK(tri.dim() == 4);
    CHECK(tri.max_label() == 3);
    CHECK(tri.at(2, 1) == 2);
    CHECK(tri.at(1, 3) == 0);  // above the diagonal
    CHECK_THROWS_AS(tri.at(4, 0), IndexOutOfRangeError);
    CHECK_THROWS_AS(tri.at(-1, 0), IndexOutOfRangeError);
    CHECK_THROWS_AS(tri.row(4), IndexOutOfRangeError);

    Matrix<Rational> m = tri.to_matrix();
    CHECK(m.rows() == 4);
    CHECK(m(3, 1) == 3);
    CHECK(m(0, 3) == 0);

    CHECK_THROWS_AS(build_recursive(coeff_entry("pascal"), -1), Error);
}
