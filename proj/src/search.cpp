#include "capbound/search.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace capbound {

namespace {

constexpr std::uint64_t kSearchGuard = std::uint64_t{1} << 14;

std::uint64_t checked_space_size(std::uint32_t p, std::size_t n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > kSearchGuard / p)
            throw std::invalid_argument("max_progression_free: q^n above the exhaustive guard");
        total *= p;
    }
    if (total > kSearchGuard)
        throw std::invalid_argument("max_progression_free: q^n above the exhaustive guard");
    return total;
}

struct Searcher {
    std::uint32_t p;
    std::size_t n;
    std::uint64_t total;
    std::uint64_t budget;
    // Entry table for every point, indexed by packed key.
    std::vector<std::vector<std::uint32_t>> coords;
    // Scalar pairs (u, v): a chosen a and the newest point z exclude the
    // future candidate w = u*a + v*z. These are the six arrangements of the
    // defining equation solved for the slot w occupies.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> exclusion_pairs;

    std::uint64_t nodes = 0;
    bool truncated = false;
    std::vector<std::uint64_t> best;
    std::vector<std::uint64_t> chosen;

    std::uint64_t mix_key(std::uint32_t u, std::uint64_t a, std::uint32_t v,
                          std::uint64_t z) const {
        const auto& ea = coords[a];
        const auto& ez = coords[z];
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < n; ++i)
            key = key * p + (u * ea[i] + v * ez[i]) % p;
        return key;
    }

    void extend(const std::vector<std::uint64_t>& candidates) {
        ++nodes;
        if (nodes > budget) {
            truncated = true;
            return;
        }
        if (chosen.size() > best.size()) best = chosen;
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            // Even taking every remaining candidate cannot beat the incumbent.
            if (chosen.size() + (candidates.size() - idx) <= best.size()) return;
            std::uint64_t z = candidates[idx];

            std::set<std::uint64_t> excluded;
            for (std::uint64_t a : chosen)
                for (auto [u, v] : exclusion_pairs) excluded.insert(mix_key(u, a, v, z));

            std::vector<std::uint64_t> next;
            next.reserve(candidates.size() - idx - 1);
            for (std::size_t k = idx + 1; k < candidates.size(); ++k)
                if (!excluded.count(candidates[k])) next.push_back(candidates[k]);

            chosen.push_back(z);
            extend(next);
            chosen.pop_back();
            if (truncated) return;
        }
    }
};

} // namespace

SearchResult max_progression_free(const ProgressionSpec& spec, std::size_t n,
                                  std::uint64_t node_budget) {
    std::uint64_t total = checked_space_size(spec.p(), n);

    // alpha = 0 or beta = 0 degenerates the equation to z = y (or z = x)
    // with the remaining point free, so every 2-point set has a violating
    // triple and the maximum is a singleton.
    if (spec.alpha() == 0 || spec.beta() == 0)
        return SearchResult{spec.p(), n, 1, PointSet::from_keys(spec.p(), n, {0}), true, 1};

    PrimeField field(spec.p());
    Searcher searcher;
    searcher.p = spec.p();
    searcher.n = n;
    searcher.total = total;
    searcher.budget = node_budget;
    searcher.coords.reserve(total);
    for (std::uint64_t key = 0; key < total; ++key)
        searcher.coords.push_back(FieldVector::from_key(spec.p(), n, key).entries());

    std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::uint32_t coeffs[3] = {spec.alpha(), spec.beta(), spec.gamma()};
    for (int w_slot = 0; w_slot < 3; ++w_slot)
        for (int a_slot = 0; a_slot < 3; ++a_slot) {
            if (a_slot == w_slot) continue;
            int z_slot = 3 - w_slot - a_slot;
            std::uint32_t neg_inv_w = field.neg(field.inv(coeffs[w_slot]));
            pairs.emplace(field.mul(neg_inv_w, coeffs[a_slot]),
                          field.mul(neg_inv_w, coeffs[z_slot]));
        }
    searcher.exclusion_pairs.assign(pairs.begin(), pairs.end());

    std::vector<std::uint64_t> all(total);
    for (std::uint64_t key = 0; key < total; ++key) all[key] = key;
    searcher.extend(all);

    SearchResult result{spec.p(),
                        n,
                        searcher.best.size(),
                        PointSet::from_keys(spec.p(), n, searcher.best),
                        !searcher.truncated,
                        searcher.nodes};
    if (!is_progression_free(result.witness, spec))
        throw std::runtime_error("max_progression_free: witness fails the predicate (bug)");
    return result;
}

bool verify_cap(const PointSet& A) {
    if (A.p() != 3) throw std::invalid_argument("verify_cap: defined over F_3 only");
    return is_progression_free(A, ProgressionSpec(3, 1, 1, 1));
}

std::vector<std::array<std::size_t, 3>> find_valid_triples(const std::vector<SetCard>& cards) {
    for (const auto& card : cards)
        for (std::uint8_t a : card.attributes)
            if (a > 2) throw std::invalid_argument("find_valid_triples: attribute out of range");
    for (std::size_t i = 0; i < cards.size(); ++i)
        for (std::size_t j = i + 1; j < cards.size(); ++j)
            if (cards[i] == cards[j])
                throw std::invalid_argument("find_valid_triples: duplicate card");

    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < cards.size(); ++i)
        for (std::size_t j = i + 1; j < cards.size(); ++j)
            for (std::size_t k = j + 1; k < cards.size(); ++k) {
                bool valid = true;
                for (std::size_t f = 0; f < 4 && valid; ++f) {
                    std::uint8_t a = cards[i].attributes[f];
                    std::uint8_t b = cards[j].attributes[f];
                    std::uint8_t c = cards[k].attributes[f];
                    bool all_same = a == b && b == c;
                    bool all_distinct = a != b && b != c && a != c;
                    valid = all_same || all_distinct;
                }
                if (valid) triples.push_back({i, j, k});
            }
    return triples;
}

std::vector<SetCard> read_cards_csv(std::istream& in, bool one_based) {
    std::vector<SetCard> cards;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string token;
        std::vector<long> values;
        while (std::getline(ss, token, ',')) {
            std::size_t used = 0;
            long v = 0;
            try {
                v = std::stol(token, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != token.size())
                throw std::runtime_error("cards CSV line " + std::to_string(lineno) +
                                         ": bad value '" + token + "'");
            values.push_back(v);
        }
        if (values.size() != 4)
            throw std::runtime_error("cards CSV line " + std::to_string(lineno) +
                                     ": expected 4 values");
        SetCard card;
        for (std::size_t f = 0; f < 4; ++f) {
            long v = values[f] - (one_based ? 1 : 0);
            if (v < 0 || v > 2)
                throw std::runtime_error("cards CSV line " + std::to_string(lineno) +
                                         ": attribute out of range");
            card.attributes[f] = static_cast<std::uint8_t>(v);
        }
        cards.push_back(card);
    }
    return cards;
}

std::vector<SetCard> read_cards_csv(const std::string& path, bool one_based) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return read_cards_csv(in, one_based);
}

PointSet cards_to_point_set(const std::vector<SetCard>& cards) {
    std::vector<FieldVector> points;
    points.reserve(cards.size());
    for (const auto& card : cards)
        points.emplace_back(3, std::vector<std::uint32_t>(card.attributes.begin(),
                                                          card.attributes.end()));
    return PointSet(3, 4, points);
}

} // namespace capbound
