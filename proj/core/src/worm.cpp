#include "wormcalc/worm.hpp"

#include <algorithm>

namespace wormcalc {

const Ordinal& Worm::front() const {
    if (entries_.empty()) throw PreconditionError("T has no entries");
    return entries_.front();
}

std::optional<Ordinal> Worm::min_entry() const {
    if (entries_.empty()) return std::nullopt;
    return *std::min_element(entries_.begin(), entries_.end());
}

bool Worm::all_at_least(const Ordinal& x) const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const Ordinal& e) { return !(e < x); });
}

Decomposition decompose(const Worm& a, const Ordinal& xi) {
    auto es = a.entries();
    auto split = std::find_if(es.begin(), es.end(), [&](const Ordinal& e) { return e < xi; });
    return {Worm(std::vector<Ordinal>(es.begin(), split)),
            Worm(std::vector<Ordinal>(split, es.end()))};
}

Worm head(const Worm& a, const Ordinal& xi) { return decompose(a, xi).head; }
Worm remainder(const Worm& a, const Ordinal& xi) { return decompose(a, xi).remainder; }

Worm body(const Worm& a) {
    auto r = remainder(a).entries();
    if (r.empty()) return Worm{};
    return Worm(std::vector<Ordinal>(r.begin() + 1, r.end()));
}

Worm shift_up(const Ordinal& xi, const Worm& a) {
    std::vector<Ordinal> out;
    out.reserve(a.size());
    for (const auto& e : a.entries()) out.push_back(add(xi, e));
    return Worm(std::move(out));
}

Worm shift_down(const Ordinal& xi, const Worm& a) {
    std::vector<Ordinal> out;
    out.reserve(a.size());
    for (const auto& e : a.entries()) {
        if (e < xi) throw PreconditionError("shift_down: worm has an entry below the shift");
        out.push_back(left_sub(xi, e));
    }
    return Worm(std::move(out));
}

Worm concat(const Worm& a, const Worm& b) {
    std::vector<Ordinal> out(a.entries().begin(), a.entries().end());
    out.insert(out.end(), b.entries().begin(), b.entries().end());
    return Worm(std::move(out));
}

Worm concat(std::initializer_list<Worm> parts) {
    std::vector<Ordinal> out;
    for (const auto& p : parts) out.insert(out.end(), p.entries().begin(), p.entries().end());
    return Worm(std::move(out));
}

Worm fund_seq(const Worm& a, std::size_t n) {
    const Ordinal one = Ordinal::finite(1);
    if (a.is_top() || a.front() != one)
        throw PreconditionError("fund_seq: worm must start with 1");
    Worm b(std::vector<Ordinal>(a.entries().begin() + 1, a.entries().end()));
    if (!b.all_at_least(one))
        throw PreconditionError("fund_seq: entries after the leading 1 must be >= 1");
    const Worm b0 = concat(b, Worm{Ordinal{}});
    Worm cur = b;
    for (std::size_t i = 0; i < n; ++i) cur = concat(b0, cur);
    return cur;
}

} // namespace wormcalc
