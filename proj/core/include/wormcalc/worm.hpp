#ifndef WORMCALC_WORM_HPP
#define WORMCALC_WORM_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "wormcalc/ordinal.hpp"

namespace wormcalc {

/// A worm <x_1><x_2>...<x_n>T stored outermost modality first; the empty
/// worm is T. Equality is syntactic; provable equivalence lives in compare.hpp.
class Worm {
public:
    Worm() = default;
    explicit Worm(std::vector<Ordinal> entries) : entries_(std::move(entries)) {}
    Worm(std::initializer_list<Ordinal> entries) : entries_(entries) {}

    static Worm repeat(const Ordinal& x, std::size_t n) {
        return Worm(std::vector<Ordinal>(n, x));
    }

    std::span<const Ordinal> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool is_top() const noexcept { return entries_.empty(); }
    const Ordinal& operator[](std::size_t i) const { return entries_[i]; }
    const Ordinal& front() const;

    /// Smallest entry; nullopt for T.
    std::optional<Ordinal> min_entry() const;
    /// Every entry is >= x (true for T).
    bool all_at_least(const Ordinal& x) const;

    friend bool operator==(const Worm&, const Worm&) = default;

private:
    std::vector<Ordinal> entries_;
};

struct Decomposition {
    Worm head;
    Worm remainder;
};

/// head = longest prefix with entries >= xi; remainder = the rest.
Decomposition decompose(const Worm& a, const Ordinal& xi);
Worm head(const Worm& a, const Ordinal& xi);
Worm remainder(const Worm& a, const Ordinal& xi);
/// The 1-head and 1-remainder.
inline Worm head(const Worm& a) { return head(a, Ordinal::finite(1)); }
inline Worm remainder(const Worm& a) { return remainder(a, Ordinal::finite(1)); }

/// b(A): the 1-remainder with its leading 0 removed, or T if it is empty.
Worm body(const Worm& a);

Worm shift_up(const Ordinal& xi, const Worm& a);
/// Requires every entry of `a` to be >= xi.
Worm shift_down(const Ordinal& xi, const Worm& a);

Worm concat(const Worm& a, const Worm& b);
Worm concat(std::initializer_list<Worm> parts);

/// For A = 1B with B entirely >= 1: A[0] = B, A[n+1] = B 0 A[n].
Worm fund_seq(const Worm& a, std::size_t n);

} // namespace wormcalc

#endif
