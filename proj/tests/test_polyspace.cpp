#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "capbound/polyspace.hpp"

using capbound::BigInt;
using capbound::FieldVector;
using capbound::FpMatrix;
using capbound::MonomialBasis;
using capbound::PointSet;
using capbound::ProgressionSpec;
using capbound::RationalDegree;

namespace {

std::vector<FieldVector> all_points(std::uint32_t p, std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    std::vector<FieldVector> points;
    for (std::uint64_t key = 0; key < total; ++key)
        points.push_back(FieldVector::from_key(p, n, key));
    return points;
}

FpMatrix random_matrix(std::uint32_t p, std::size_t rows, std::size_t cols,
                       std::mt19937_64& rng) {
    FpMatrix m(p, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = static_cast<std::uint32_t>(rng() % p);
    return m;
}

} // namespace

TEST_CASE("monomial basis enumeration") {
    MonomialBasis basis = capbound::monomial_basis(3, 2, RationalDegree(1));
    REQUIRE(basis.size() == 3);
    CHECK(basis.monomials[0].exponents == std::vector<std::uint32_t>{0, 0});
    CHECK(basis.monomials[1].exponents == std::vector<std::uint32_t>{0, 1});
    CHECK(basis.monomials[2].exponents == std::vector<std::uint32_t>{1, 0});

    CHECK(capbound::monomial_basis(5, 3, RationalDegree(0)).size() == 1);

    MonomialBasis all = capbound::monomial_basis(3, 1, RationalDegree(2));
    REQUIRE(all.size() == 3);
    CHECK(all.monomials[2].exponents == std::vector<std::uint32_t>{2});

    CHECK_THROWS_AS(capbound::monomial_basis(4, 2, RationalDegree(1)), std::invalid_argument);
    CHECK_THROWS_AS(capbound::monomial_basis(3, 2, RationalDegree(-1)), std::invalid_argument);
}

TEST_CASE("basis cardinality equals the partial sum on a grid") {
    for (int q : {2, 3, 5})
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k <= 12; ++k) {
                RationalDegree d(static_cast<long long>(q - 1) * n * k, 12);
                CHECK(BigInt(capbound::monomial_basis(q, n, d).size()) ==
                      capbound::m_value(q, n, d));
            }
}

TEST_CASE("graded lex order is sorted by degree then lex") {
    MonomialBasis basis = capbound::monomial_basis(3, 3, RationalDegree(4));
    for (std::size_t i = 1; i < basis.size(); ++i) {
        const auto& prev = basis.monomials[i - 1];
        const auto& cur = basis.monomials[i];
        bool ordered = prev.total_degree() < cur.total_degree() ||
                       (prev.total_degree() == cur.total_degree() &&
                        std::lexicographical_compare(prev.exponents.begin(), prev.exponents.end(),
                                                     cur.exponents.begin(), cur.exponents.end()));
        CHECK(ordered);
    }
}

TEST_CASE("evaluation matrices") {
    MonomialBasis constant = capbound::monomial_basis(3, 2, RationalDegree(0));
    FpMatrix ones = capbound::eval_matrix(constant, all_points(3, 2));
    for (std::size_t j = 0; j < ones.cols(); ++j) CHECK(ones.at(0, j) == 1);

    MonomialBasis line = capbound::monomial_basis(3, 1, RationalDegree(1));
    FpMatrix m = capbound::eval_matrix(line, all_points(3, 1));
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(0, 2) == 1);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.at(1, 1) == 1);
    CHECK(m.at(1, 2) == 2);

    // 0^0 = 1: the monomial x^0 y^2 evaluated where x = 0 must not vanish.
    MonomialBasis squares = capbound::monomial_basis(3, 2, RationalDegree(2));
    FpMatrix s = capbound::eval_matrix(squares, {FieldVector(3, {0, 2})});
    bool found = false;
    for (std::size_t i = 0; i < squares.size(); ++i)
        if (squares.monomials[i].exponents == std::vector<std::uint32_t>{0, 2}) {
            CHECK(s.at(i, 0) == 1);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("full bases evaluate to invertible matrices") {
    struct Case {
        int q, n;
    };
    for (Case c : {Case{2, 3}, Case{3, 1}, Case{3, 2}, Case{5, 1}}) {
        RationalDegree full(static_cast<long long>(c.q - 1) * c.n);
        MonomialBasis basis = capbound::monomial_basis(c.q, c.n, full);
        auto points = all_points(static_cast<std::uint32_t>(c.q), static_cast<std::size_t>(c.n));
        REQUIRE(basis.size() == points.size());
        CHECK(capbound::rank(capbound::eval_matrix(basis, points)) == points.size());
    }
}

TEST_CASE("rank and null space basics") {
    FpMatrix identity(3, 5, 5);
    for (std::size_t i = 0; i < 5; ++i) identity.at(i, i) = 1;
    CHECK(capbound::rank(identity) == 5);
    CHECK(capbound::null_space(identity).empty());

    FpMatrix zero(3, 3, 4);
    CHECK(capbound::rank(zero) == 0);
    auto kernel = capbound::null_space(zero);
    REQUIRE(kernel.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) CHECK(kernel[j][j] == 1);
}

TEST_CASE("rank is invariant under row shuffling") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 30; ++trial) {
        FpMatrix m = random_matrix(5, 6, 6, rng);
        std::size_t r = capbound::rank(m);
        std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        FpMatrix shuffled(5, 6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) shuffled.at(i, j) = m.at(perm[i], j);
        CHECK(capbound::rank(shuffled) == r);
        CHECK(r + capbound::null_space(m).size() == m.cols());
    }
}

TEST_CASE("null space vectors satisfy the system") {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 20; ++trial) {
        FpMatrix m = random_matrix(7, 4, 9, rng);
        auto kernel = capbound::null_space(m);
        CHECK(capbound::rank(m) + kernel.size() == m.cols());
        for (const auto& v : kernel) {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                std::uint64_t acc = 0;
                for (std::size_t c = 0; c < m.cols(); ++c)
                    acc += static_cast<std::uint64_t>(m.at(r, c)) * v[c];
                CHECK(acc % 7 == 0);
            }
        }
    }
}

TEST_CASE("dimension of the vanishing subspace") {
    ProgressionSpec cap(3, 1, 1, 1);

    // Complement empty: no constraints, so the whole span vanishes nowhere.
    PointSet everything = PointSet::from_keys(3, 2, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    capbound::SubspaceReport full = capbound::dim_v(everything, RationalDegree(2), cap);
    CHECK(full.dim_v == full.dim_s);

    // Empty set with the full basis: only the zero polynomial vanishes on all
    // of F_q^n.
    PointSet none(3, 2);
    capbound::SubspaceReport empty = capbound::dim_v(none, RationalDegree(4), cap);
    CHECK(empty.dim_v == 0);

    // Hand-computed single point instance over F_3^1 with d = 2.
    PointSet origin = PointSet::from_keys(3, 1, {0});
    capbound::SubspaceReport one = capbound::dim_v(origin, RationalDegree(2), cap);
    CHECK(one.dim_s == 3);
    CHECK(one.dim_v == 1);
    CHECK(one.lower == 1);
    CHECK(one.upper == 4);
    CHECK(one.holds);
    CHECK(one.to_json() ==
          "{\"q\":3,\"n\":1,\"d\":\"2/1\",\"dim_S\":3,\"dim_V\":1,\"lower\":1,\"upper\":4,"
          "\"holds\":true}");
}

TEST_CASE("sandwich holds on random progression-free instances") {
    ProgressionSpec cap(3, 1, 1, 1);
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        PointSet a = capbound::random_progression_free_set(cap, 2, seed);
        for (const auto& d : {RationalDegree(1), RationalDegree(4, 3), RationalDegree(2),
                              RationalDegree(8, 3)}) {
            capbound::SubspaceReport report = capbound::dim_v(a, d, cap);
            CHECK(report.holds);
            CHECK(std::max(report.lower, 0LL) <= report.dim_v);
            CHECK(report.dim_v <= report.upper);
        }
    }
}

TEST_CASE("support-count bound") {
    ProgressionSpec cap(3, 1, 1, 1);
    PointSet a = PointSet::from_keys(3, 2, {0, 1, 3, 4});
    REQUIRE(capbound::is_progression_free(a, cap));

    capbound::Proposition2Report report =
        capbound::proposition2_check(a, RationalDegree(2), cap);
    CHECK(report.bound == 6);
    CHECK(report.count <= report.bound);
    CHECK(report.holds);

    // d = 0 leaves only constant polynomials, and the vanishing conditions
    // kill them, so the check is vacuous.
    capbound::Proposition2Report vacuous =
        capbound::proposition2_check(a, RationalDegree(0), cap);
    CHECK(vacuous.solution_dim == 0);
    CHECK(vacuous.count == 0);
    CHECK(vacuous.holds);
}

TEST_CASE("mix matrix is diagonal with rank equal to the support count") {
    ProgressionSpec cap(3, 1, 1, 1);
    PointSet a = PointSet::from_keys(3, 2, {0, 4});
    RationalDegree d(4);
    MonomialBasis basis = capbound::monomial_basis(3, 2, d);

    // Rebuild the vanishing system of the support check and take one solution.
    auto points = a.points();
    std::vector<FieldVector> mixes;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            mixes.push_back(capbound::vec_combine(cap.alpha(), points[i], cap.beta(), points[j],
                                                  0, points[i]));
        }
    FpMatrix eval = capbound::eval_matrix(basis, mixes);
    FpMatrix constraints(3, mixes.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < mixes.size(); ++j) constraints.at(j, i) = eval.at(i, j);
    auto solutions = capbound::null_space(constraints);
    REQUIRE(!solutions.empty());

    FpMatrix b = capbound::mix_matrix(a, solutions.front(), basis, cap);
    std::size_t nonzero_diagonal = 0;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (i == j && b.at(i, j) != 0) ++nonzero_diagonal;
            if (i != j) CHECK(b.at(i, j) == 0);
        }
    CHECK(capbound::rank(b) == nonzero_diagonal);
}

TEST_CASE("two-sided counting bound") {
    capbound::CombinatorialBoundReport r = capbound::combinatorial_bound_check(3, 2, RationalDegree(4, 3));
    CHECK(r.lhs == 9);
    CHECK(r.m_upper == 6);
    CHECK(r.m_lower == 3);
    CHECK(r.holds);

    r = capbound::combinatorial_bound_check(5, 3, RationalDegree(0));
    CHECK(r.lhs == 125);
    CHECK(r.m_upper == 125);
    CHECK(r.m_lower == 1);

    r = capbound::combinatorial_bound_check(3, 4, RationalDegree(4));
    CHECK(r.lhs == 81);
    CHECK(r.m_upper == 50);
    CHECK(r.m_lower == 50);

    CHECK_THROWS_AS(capbound::combinatorial_bound_check(3, 2, RationalDegree(5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(capbound::combinatorial_bound_check(3, 2, RationalDegree(-1)),
                    std::invalid_argument);

    for (int q : {2, 3, 5})
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= 12; ++k) {
                RationalDegree d(static_cast<long long>(q - 1) * n * k, 12);
                CHECK(capbound::combinatorial_bound_check(q, n, d).holds);
            }
}

TEST_CASE("random progression-free generation") {
    ProgressionSpec cap(3, 1, 1, 1);
    PointSet a = capbound::random_progression_free_set(cap, 2, 42);
    PointSet b = capbound::random_progression_free_set(cap, 2, 42);
    CHECK(a.keys() == b.keys());
    CHECK(capbound::is_progression_free(a, cap));
    CHECK(a.size() >= 1);

    PointSet capped = capbound::random_progression_free_set(cap, 2, 7, 2);
    CHECK(capped.size() <= 2);
    CHECK(capbound::is_progression_free(capped, cap));
}

TEST_CASE("enumeration guard") {
    ProgressionSpec cap(3, 1, 1, 1);
    PointSet tiny(3, 14); // 3^14 is past the 2^20 guard
    CHECK_THROWS_AS(capbound::dim_v(tiny, RationalDegree(1), cap), std::invalid_argument);
}
