#ifndef WORMCALC_ORACLE_HPP
#define WORMCALC_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wormcalc/ordinal.hpp"
#include "wormcalc/worm.hpp"

namespace wormcalc {

inline constexpr std::size_t max_enumeration_length = 8;

/// All worms of length <= max_len over `alphabet`, shortest first, then in
/// lexicographic order of alphabet positions. Throws PreconditionError for
/// an empty alphabet or max_len > 8.
std::vector<Worm> enumerate_worms(std::size_t max_len, const std::vector<Ordinal>& alphabet);

struct Counterexample {
    std::string check;
    std::string detail;
};

struct CrossCheckReport {
    bool pass = true;
    std::size_t worms = 0;
    std::size_t pairs = 0;
    std::size_t checks = 0;
    std::optional<Counterexample> first_failure;

    std::string to_text() const;
    std::string to_json() const;
};

/// Brute-force agreement run over every worm up to max_len:
/// trichotomy of cmp0_syntactic, agreement with the order of o(.),
/// transitivity, o(A0B) = o(B) + 1 + o(A), and A == h(A) 0 b(A).
/// Failures are recorded in the report, never thrown.
CrossCheckReport exhaustive_cross_check(std::size_t max_len, const std::vector<Ordinal>& alphabet);

/// Rows ([0]^k, k) for k <= n, each checked against o. Requires n <= 20.
std::vector<std::pair<Worm, Ordinal>> rank_table(std::size_t n);

/// Deterministic property-test grid: the seeds
/// {0,1,2,3,w,w+1,w*2,w^2,w^w,phi(1,0),phi(1,1),phi(2,0)} followed by
/// x + y and phi(x,y) over seed pairs, deduplicated, capped at 200.
std::vector<Ordinal> sample_ordinals();

} // namespace wormcalc

#endif
