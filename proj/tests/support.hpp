#ifndef WORMCALC_TESTS_SUPPORT_HPP
#define WORMCALC_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "doctest.h"

#include "wormcalc/ordinal.hpp"
#include "wormcalc/textio.hpp"
#include "wormcalc/worm.hpp"

namespace doctest {
template <> struct StringMaker<wormcalc::Ordinal> {
    static String convert(const wormcalc::Ordinal& x) {
        return wormcalc::print_ordinal(x).c_str();
    }
};
template <> struct StringMaker<wormcalc::Worm> {
    static String convert(const wormcalc::Worm& a) { return wormcalc::print_worm(a).c_str(); }
};
template <> struct StringMaker<wormcalc::OrderRelation> {
    static String convert(wormcalc::OrderRelation r) { return wormcalc::to_string(r); }
};
} // namespace doctest

namespace wormcalc::testing {

inline Ordinal ord(std::string_view text) { return parse_ordinal(text); }
inline Worm worm(std::string_view text) { return parse_worm(text); }
inline Worm digits(std::string_view text) { return parse_worm(text, true); }
inline Ordinal nat(std::uint64_t n) { return Ordinal::finite(n); }

/// Deterministic pseudo-random worms; mt19937_64 output is fully specified
/// by the standard, and only raw draws are used.
inline std::vector<Worm> sample_worms(std::size_t count, const std::vector<Ordinal>& alphabet,
                                      std::size_t max_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Worm> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t len = rng() % (max_len + 1);
        std::vector<Ordinal> es;
        for (std::size_t k = 0; k < len; ++k) es.push_back(alphabet[rng() % alphabet.size()]);
        out.emplace_back(std::move(es));
    }
    return out;
}

} // namespace wormcalc::testing

#endif
