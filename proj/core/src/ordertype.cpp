#include "wormcalc/ordertype.hpp"

#include <algorithm>

namespace wormcalc {

namespace {

const Ordinal& one() {
    static const Ordinal v = Ordinal::finite(1);
    return v;
}

// e^(w^c)(x): -1 + w^x for c = 0, phi_c(-1 + x) otherwise.
Ordinal exp_indecomposable(const Ordinal& c, const Ordinal& x) {
    if (x.is_zero()) return x;
    if (c.is_zero()) return left_sub(one(), omega_pow(x));
    return veblen(c, left_sub(one(), x));
}

} // namespace

Ordinal o(const Worm& a) {
    if (a.is_top()) return Ordinal{};

    const Ordinal low = *a.min_entry();
    if (!low.is_zero()) {
        // low = w^c + rest: A = (w^c) up (w^c down A) and e^(w^c + rest) = e^(w^c) e^rest.
        const VeblenTerm& lead = low.leading();
        VeblenTerm piece{lead.index, lead.arg, 1};
        const Ordinal step = Ordinal::from_terms({piece});
        return exp_indecomposable(lead.exponent(), o(shift_down(step, a)));
    }

    auto es = a.entries();
    auto zero = std::find_if(es.begin(), es.end(), [](const Ordinal& e) { return e.is_zero(); });
    const Worm h(std::vector<Ordinal>(es.begin(), zero));
    const Worm t(std::vector<Ordinal>(zero + 1, es.end()));
    return add(add(o(t), one()), o(h));
}

Ordinal o_xi(const Worm& a, const Ordinal& xi) {
    return o(shift_down(xi, head(a, xi)));
}

Worm worm_of(const Ordinal& alpha) {
    if (alpha.is_zero()) return Worm{};
    auto ts = alpha.terms();
    // alpha = rest + t with t the last single term.
    std::vector<VeblenTerm> rest(ts.begin(), ts.end());
    VeblenTerm t = rest.back();
    if (--rest.back().count == 0) rest.pop_back();
    t.count = 1;

    Worm top;
    if (t.index.is_zero()) {
        // o(1 up W) = e(o(W)) = -1 + w^b, then +1 from the separating 0.
        top = shift_up(one(), worm_of(t.arg));
    } else {
        // o(w^a up W) = phi_a(-1 + o(W)) and -1 + (1 + b) = b.
        top = shift_up(omega_pow(t.index), worm_of(add(one(), t.arg)));
    }
    return concat({top, Worm{Ordinal{}}, worm_of(Ordinal::from_terms(std::move(rest)))});
}

} // namespace wormcalc
