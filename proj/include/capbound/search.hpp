#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "capbound/ffld.hpp"

namespace capbound {

struct SearchResult {
    std::uint32_t q = 0;
    std::size_t n = 0;
    std::size_t max_size = 0;
    PointSet witness;            // sorted, progression-free, |witness| = max_size
    bool exhaustive = false;     // true iff the tree was fully explored in budget
    std::uint64_t nodes_explored = 0;
};

/// Exhaustive branch-and-bound for a maximum progression-free subset of
/// F_p^n under the given spec.
///
/// Points are branched in packed-key order and a partial set is only ever
/// extended by larger keys, so ties resolve to the lexicographically least
/// witness. Adding z prunes every candidate w that completes a forbidden
/// triple with z and a chosen point; a subtree is cut when even taking all
/// remaining candidates cannot beat the incumbent. Requires q^n <= 2^14.
/// Budget exhaustion is not an error: the best set found so far is returned
/// with exhaustive = false.
SearchResult max_progression_free(const ProgressionSpec& spec, std::size_t n,
                                  std::uint64_t node_budget = 1'000'000'000);

/// Specialization of the predicate to p = 3, (1, 1, 1): no three distinct
/// points of A sum to zero. Rejects p != 3.
bool verify_cap(const PointSet& A);

/// Card with four features, each taking one of three values (stored 0-based).
struct SetCard {
    std::array<std::uint8_t, 4> attributes{};

    bool operator==(const SetCard& other) const = default;
};

/// All unordered triples (i < j < k) that are valid: for each feature the
/// three cards are all equal or all distinct. Equivalently, identifying cards
/// with vectors in F_3^4, the distinct triples summing to zero.
/// Duplicate cards are rejected.
std::vector<std::array<std::size_t, 3>> find_valid_triples(const std::vector<SetCard>& cards);

/// Cards file: CSV, four columns per row with values in {0,1,2}, or {1,2,3}
/// when one_based is set.
std::vector<SetCard> read_cards_csv(std::istream& in, bool one_based);
std::vector<SetCard> read_cards_csv(const std::string& path, bool one_based);

/// The F_3^4 point set corresponding to a card collection.
PointSet cards_to_point_set(const std::vector<SetCard>& cards);

} // namespace capbound
