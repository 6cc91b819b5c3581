#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "capbound/coeffs.hpp"

using capbound::BigInt;
using capbound::CoeffRow;
using capbound::RationalDegree;

namespace {

// Independent oracle for q = 2: the row must be the binomial coefficients.
std::vector<BigInt> pascal_row(int n) {
    std::vector<BigInt> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<BigInt> next(row.size() + 1);
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j];
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    return row;
}

} // namespace

TEST_CASE("rational degree arithmetic") {
    CHECK(RationalDegree(8, 3).floor_value() == 2);
    CHECK(RationalDegree(-1, 3).floor_value() == -1);
    CHECK(RationalDegree(6, 3) == RationalDegree(2));
    CHECK(RationalDegree(4, -2) == RationalDegree(-2));
    CHECK(RationalDegree(8, 3).half() == RationalDegree(4, 3));
    CHECK(RationalDegree(5, 2).str() == "5/2");
    CHECK(RationalDegree::parse("8/3") == RationalDegree(8, 3));
    CHECK(RationalDegree::parse("7") == RationalDegree(7));
    CHECK(RationalDegree(1, 3) < RationalDegree(1, 2));
    CHECK((RationalDegree(1, 2) + RationalDegree(1, 3)) == RationalDegree(5, 6));
    CHECK((RationalDegree(4) - RationalDegree(8, 3)) == RationalDegree(4, 3));
    CHECK_THROWS_AS(RationalDegree(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(RationalDegree::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(RationalDegree::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(RationalDegree::parse(""), std::invalid_argument);
}

TEST_CASE("frozen coefficient rows") {
    CHECK(capbound::coeff_row(3, 0).values == std::vector<BigInt>{1});
    CHECK(capbound::coeff_row(3, 3).values == std::vector<BigInt>{1, 3, 6, 7, 6, 3, 1});
    CHECK(capbound::coeff_row(3, 4).values ==
          std::vector<BigInt>{1, 4, 10, 16, 19, 16, 10, 4, 1});
    CHECK(capbound::coeff_row(5, 3).values ==
          std::vector<BigInt>{1, 3, 6, 10, 15, 18, 19, 18, 15, 10, 6, 3, 1});
}

TEST_CASE("q = 2 rows are binomial coefficients") {
    for (int n = 0; n <= 16; ++n) CHECK(capbound::coeff_row(2, n).values == pascal_row(n));
}

TEST_CASE("row sum and symmetry") {
    for (int q = 2; q <= 5; ++q)
        for (int n = 0; n <= 12; ++n) {
            CoeffRow row = capbound::coeff_row(q, n);
            REQUIRE(row.values.size() == static_cast<std::size_t>((q - 1) * n + 1));
            BigInt sum = 0, power = 1;
            for (const auto& v : row.values) sum += v;
            for (int i = 0; i < n; ++i) power *= q;
            CHECK(sum == power);
            for (std::size_t j = 0; j < row.values.size(); ++j)
                CHECK(row.values[j] == row.values[row.values.size() - 1 - j]);
        }
}

TEST_CASE("cf_step chains to coeff_row") {
    for (int q = 2; q <= 5; ++q) {
        CoeffRow chain = capbound::coeff_row(q, 0);
        for (int n = 1; n <= 12; ++n) {
            chain = capbound::cf_step(q, chain);
            CHECK(chain.values == capbound::coeff_row(q, n).values);
            CHECK(chain.n == n);
        }
    }
}

TEST_CASE("cf_step input validation") {
    CoeffRow row = capbound::coeff_row(3, 2);
    CHECK_THROWS_AS(capbound::cf_step(5, row), std::invalid_argument);
    row.values.pop_back();
    CHECK_THROWS_AS(capbound::cf_step(3, row), std::invalid_argument);
    CHECK_THROWS_AS(capbound::coeff_row(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(capbound::coeff_row(3, -1), std::invalid_argument);
}

TEST_CASE("partial sums") {
    CHECK(capbound::m_value(3, 4, RationalDegree(8, 3)) == 15);
    CHECK(capbound::m_value(3, 2, RationalDegree(5, 3)) == 3);
    CHECK(capbound::m_value(3, 3, RationalDegree(2)) == 10);
    CHECK(capbound::m_value(3, 6, RationalDegree(4)) == 168);
    // Degrees past (q-1)n truncate: the sum is the whole row.
    CHECK(capbound::m_value(3, 2, RationalDegree(100)) == 9);
    CHECK(capbound::m_value(2, 0, RationalDegree(0)) == 1);
    CHECK_THROWS_AS(capbound::m_value(3, 2, RationalDegree(-1, 3)), std::invalid_argument);
}

TEST_CASE("upper bound values") {
    CHECK(capbound::eg_bound(3, 1) == 3);
    CHECK(capbound::eg_bound(3, 2) == 9);
    CHECK(capbound::eg_bound(3, 3) == 30);
    CHECK(capbound::eg_bound(3, 4) == 45);
    CHECK(capbound::eg_bound(3, 100) ==
          BigInt("26537907602019178811886697789858275186783060"));
    CHECK_THROWS_AS(capbound::eg_bound(3, 0), std::invalid_argument);
}
