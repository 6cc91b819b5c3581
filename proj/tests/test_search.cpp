#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "capbound/coeffs.hpp"
#include "capbound/search.hpp"

using capbound::PointSet;
using capbound::ProgressionSpec;
using capbound::SetCard;

namespace {

std::size_t naive_max(const ProgressionSpec& spec, std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= spec.p();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        std::vector<std::uint64_t> keys;
        for (std::uint64_t key = 0; key < total; ++key)
            if (mask >> key & 1) keys.push_back(key);
        if (keys.size() <= best) continue;
        if (capbound::is_progression_free(PointSet::from_keys(spec.p(), n, keys), spec))
            best = keys.size();
    }
    return best;
}

std::vector<SetCard> random_dozen(std::mt19937_64& rng) {
    std::vector<std::uint64_t> keys(81);
    for (std::uint64_t k = 0; k < 81; ++k) keys[k] = k;
    std::shuffle(keys.begin(), keys.end(), rng);
    std::vector<SetCard> cards;
    for (std::size_t i = 0; i < 12; ++i) {
        SetCard card;
        std::uint64_t k = keys[i];
        for (int f = 3; f >= 0; --f) {
            card.attributes[static_cast<std::size_t>(f)] = static_cast<std::uint8_t>(k % 3);
            k /= 3;
        }
        cards.push_back(card);
    }
    return cards;
}

} // namespace

TEST_CASE("known maxima over F_3") {
    ProgressionSpec cap(3, 1, 1, 1);

    capbound::SearchResult r1 = capbound::max_progression_free(cap, 1);
    CHECK(r1.max_size == 2);
    CHECK(r1.exhaustive);

    capbound::SearchResult r2 = capbound::max_progression_free(cap, 2);
    CHECK(r2.max_size == 4);
    CHECK(r2.exhaustive);
    CHECK(r2.witness.keys() == std::vector<std::uint64_t>{0, 1, 3, 4});

    capbound::SearchResult r3 = capbound::max_progression_free(cap, 3);
    CHECK(r3.max_size == 9);
    CHECK(r3.exhaustive);

    for (const auto& r : {r1, r2, r3}) {
        CHECK(capbound::is_progression_free(r.witness, cap));
        CHECK(capbound::BigInt(r.max_size) <= capbound::eg_bound(3, r.n));
    }
}

TEST_CASE("agrees with the all-subsets oracle") {
    struct Case {
        std::uint32_t p, alpha, beta, gamma;
        std::size_t n;
    };
    for (Case c : {Case{3, 1, 1, 1, 1}, Case{3, 1, 1, 1, 2}, Case{3, 2, 2, 2, 2},
                   Case{5, 1, 1, 3, 1}, Case{5, 1, 3, 1, 1}, Case{5, 2, 4, 4, 1},
                   Case{7, 1, 5, 1, 1}, Case{2, 0, 1, 1, 3}, Case{2, 1, 0, 1, 2},
                   Case{3, 0, 1, 2, 2}}) {
        ProgressionSpec spec(c.p, c.alpha, c.beta, c.gamma);
        capbound::SearchResult r = capbound::max_progression_free(spec, c.n);
        CHECK(r.exhaustive);
        CHECK(r.max_size == naive_max(spec, c.n));
    }
}

TEST_CASE("search is deterministic") {
    ProgressionSpec cap(3, 1, 1, 1);
    capbound::SearchResult a = capbound::max_progression_free(cap, 2);
    capbound::SearchResult b = capbound::max_progression_free(cap, 2);
    CHECK(a.witness.keys() == b.witness.keys());
    CHECK(a.nodes_explored == b.nodes_explored);
}

TEST_CASE("budget exhaustion still returns a valid set") {
    ProgressionSpec cap(3, 1, 1, 1);
    capbound::SearchResult r = capbound::max_progression_free(cap, 3, 10);
    CHECK(!r.exhaustive);
    CHECK(r.nodes_explored >= 10);
    CHECK(capbound::is_progression_free(r.witness, cap));
    CHECK(r.max_size <= 9);
}

TEST_CASE("space size guard") {
    ProgressionSpec cap(3, 1, 1, 1);
    CHECK_THROWS_AS(capbound::max_progression_free(cap, 10), std::invalid_argument);
    CHECK_THROWS_AS(capbound::max_progression_free(ProgressionSpec(2, 1, 1, 1), 15),
                    std::invalid_argument);
}

TEST_CASE("degenerate specs cap out at a single point") {
    capbound::SearchResult r = capbound::max_progression_free(ProgressionSpec(3, 0, 2, 1), 2);
    CHECK(r.max_size == 1);
    CHECK(r.exhaustive);
    CHECK(r.witness.keys() == std::vector<std::uint64_t>{0});

    r = capbound::max_progression_free(ProgressionSpec(5, 3, 0, 2), 1);
    CHECK(r.max_size == 1);
}

TEST_CASE("cap verification") {
    CHECK(capbound::verify_cap(PointSet(3, 4)));
    CHECK(capbound::verify_cap(PointSet::from_keys(3, 2, {0, 1, 3, 4})));
    CHECK(!capbound::verify_cap(PointSet::from_keys(3, 1, {0, 1, 2})));
    CHECK(!capbound::verify_cap(PointSet::from_keys(3, 2, {0, 1, 2, 3, 4, 5, 6, 7, 8})));
    CHECK_THROWS_AS(capbound::verify_cap(PointSet(5, 2)), std::invalid_argument);
}

TEST_CASE("three matching cards form a valid triple") {
    std::vector<SetCard> cards = {SetCard{{1, 0, 0, 1}}, SetCard{{1, 1, 1, 1}},
                                  SetCard{{1, 2, 2, 1}}};
    auto triples = capbound::find_valid_triples(cards);
    REQUIRE(triples.size() == 1);
    CHECK(triples[0] == std::array<std::size_t, 3>{0, 1, 2});
    CHECK(!capbound::verify_cap(capbound::cards_to_point_set(cards)));
}

TEST_CASE("a triple-free dozen") {
    std::vector<SetCard> cards = {
        SetCard{{0, 2, 1, 1}}, SetCard{{0, 1, 2, 1}}, SetCard{{2, 0, 1, 0}},
        SetCard{{2, 2, 0, 2}}, SetCard{{0, 1, 2, 2}}, SetCard{{2, 1, 2, 0}},
        SetCard{{2, 1, 0, 0}}, SetCard{{2, 2, 1, 2}}, SetCard{{0, 1, 1, 0}},
        SetCard{{1, 2, 1, 1}}, SetCard{{2, 0, 2, 2}}, SetCard{{0, 2, 0, 2}}};
    CHECK(capbound::find_valid_triples(cards).empty());
    CHECK(capbound::verify_cap(capbound::cards_to_point_set(cards)));
}

TEST_CASE("fewer than three cards have no triples") {
    CHECK(capbound::find_valid_triples({}).empty());
    CHECK(capbound::find_valid_triples({SetCard{{0, 0, 0, 0}}, SetCard{{1, 1, 1, 1}}}).empty());
}

TEST_CASE("card validation") {
    CHECK_THROWS_AS(capbound::find_valid_triples({SetCard{{0, 0, 0, 0}}, SetCard{{0, 0, 0, 0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(capbound::find_valid_triples({SetCard{{0, 0, 0, 3}}}), std::invalid_argument);
}

TEST_CASE("triple rule matches zero-sum over F_3") {
    std::mt19937_64 rng(20260817);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<SetCard> cards = random_dozen(rng);
        auto triples = capbound::find_valid_triples(cards);
        CHECK(triples.empty() == capbound::verify_cap(capbound::cards_to_point_set(cards)));

        std::set<std::array<std::size_t, 3>> found(triples.begin(), triples.end());
        for (std::size_t i = 0; i < cards.size(); ++i)
            for (std::size_t j = i + 1; j < cards.size(); ++j)
                for (std::size_t k = j + 1; k < cards.size(); ++k) {
                    bool zero_sum = true;
                    for (std::size_t f = 0; f < 4; ++f)
                        zero_sum = zero_sum && (cards[i].attributes[f] + cards[j].attributes[f] +
                                                cards[k].attributes[f]) %
                                                       3 ==
                                                   0;
                    CHECK(zero_sum == (found.count({i, j, k}) > 0));
                }
    }
}

TEST_CASE("cards CSV parsing") {
    std::istringstream zero_based("0,1,2,0\n\n2,2,2,2\n");
    auto cards = capbound::read_cards_csv(zero_based, false);
    REQUIRE(cards.size() == 2);
    CHECK(cards[0] == SetCard{{0, 1, 2, 0}});
    CHECK(cards[1] == SetCard{{2, 2, 2, 2}});

    std::istringstream one_based("1,2,3,1\r\n3,3,3,3\n");
    auto shifted = capbound::read_cards_csv(one_based, true);
    REQUIRE(shifted.size() == 2);
    CHECK(shifted == cards);

    std::istringstream wrong_arity("0,1,2\n");
    CHECK_THROWS_AS(capbound::read_cards_csv(wrong_arity, false), std::runtime_error);
    std::istringstream out_of_range("0,1,2,3\n");
    CHECK_THROWS_AS(capbound::read_cards_csv(out_of_range, false), std::runtime_error);
    std::istringstream zero_in_one_based("0,1,2,1\n");
    CHECK_THROWS_AS(capbound::read_cards_csv(zero_in_one_based, true), std::runtime_error);
    std::istringstream garbage("a,b,c,d\n");
    CHECK_THROWS_AS(capbound::read_cards_csv(garbage, false), std::runtime_error);
    CHECK_THROWS_AS(capbound::read_cards_csv(std::string("/nonexistent/cards.csv"), false),
                    std::runtime_error);
}

TEST_CASE("cards map onto F_3^4 points") {
    std::vector<SetCard> cards = {SetCard{{0, 1, 2, 0}}, SetCard{{1, 0, 0, 2}}};
    PointSet points = capbound::cards_to_point_set(cards);
    CHECK(points.p() == 3);
    CHECK(points.dim() == 4);
    CHECK(points.size() == 2);
    CHECK(points.keys() == std::vector<std::uint64_t>{15, 29});
}
