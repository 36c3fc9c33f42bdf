#include "wormcalc/hyper.hpp"

#include "wormcalc/ordertype.hpp"
#include "wormcalc/worm.hpp"

namespace wormcalc {

Ordinal hyperexp(const Ordinal& xi, const Ordinal& alpha) {
    if (alpha.is_zero() || xi.is_zero()) return alpha;
    Ordinal value = xi.is_limit() ? left_sub(Ordinal::finite(1), alpha) : alpha;
    auto ts = xi.terms();
    // Innermost function is the one for the smallest exponent.
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        const Ordinal e = it->exponent();
        for (std::uint64_t k = 0; k < it->count; ++k) {
            const Ordinal next = veblen(e, value);
            // phi_e is the identity on its fixed points; the rest of the run
            // cannot move the value either.
            if (next == value) break;
            value = next;
        }
    }
    return value;
}

Ordinal hyperexp_worm_route(const Ordinal& xi, const Ordinal& alpha) {
    return o(shift_up(xi, worm_of(alpha)));
}

Ordinal hyperlog(const Ordinal& xi, const Ordinal& alpha) {
    return o_xi(worm_of(alpha), xi);
}

} // namespace wormcalc
