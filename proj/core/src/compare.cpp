#include "wormcalc/compare.hpp"

#include "wormcalc/ordertype.hpp"

namespace wormcalc {

namespace {

Worm tail(const Worm& a) {
    return Worm(std::vector<Ordinal>(a.entries().begin() + 1, a.entries().end()));
}

} // namespace

OrderRelation cmp0_syntactic(const Worm& a, const Worm& b) {
    if (a.is_top()) return b.is_top() ? OrderRelation::EQ : OrderRelation::LT;
    if (b.is_top()) return OrderRelation::GT;

    const Ordinal low = std::min(*a.min_entry(), *b.min_entry());
    if (!low.is_zero()) return cmp0_syntactic(shift_down(low, a), shift_down(low, b));

    const bool a_zero = a.front().is_zero();
    const bool b_zero = b.front().is_zero();
    if (a_zero && b_zero) return cmp0_syntactic(tail(a), tail(b));
    // 0B' is the successor of B': C < 0B' iff C <= B'. A limit worm cannot
    // be equivalent to a successor.
    if (b_zero) {
        return cmp0_syntactic(a, tail(b)) == OrderRelation::GT ? OrderRelation::GT
                                                               : OrderRelation::LT;
    }
    if (a_zero) {
        return cmp0_syntactic(b, tail(a)) == OrderRelation::GT ? OrderRelation::LT
                                                               : OrderRelation::GT;
    }

    // Both 1-heads nonempty and some entry is 0, so at least one head is a
    // proper prefix.
    const auto [ha, ra] = decompose(a, Ordinal::finite(1));
    const auto [hb, rb] = decompose(b, Ordinal::finite(1));
    switch (cmp0_syntactic(ha, hb)) {
    case OrderRelation::LT: {
        // A < B iff r(A) < B; B < A iff B < r(A). Equivalence would give
        // B a trivial head.
        auto c = cmp0_syntactic(ra, b);
        if (c == OrderRelation::EQ)
            throw InternalConsistencyError("cmp0: remainder equivalent to a limit worm");
        return c;
    }
    case OrderRelation::GT: {
        auto c = cmp0_syntactic(a, rb);
        if (c == OrderRelation::EQ)
            throw InternalConsistencyError("cmp0: remainder equivalent to a limit worm");
        return c;
    }
    case OrderRelation::EQ:
        if (cmp0_syntactic(a, rb) == OrderRelation::LT) return OrderRelation::LT;
        if (cmp0_syntactic(b, ra) == OrderRelation::LT) return OrderRelation::GT;
        return OrderRelation::EQ;
    }
    return OrderRelation::EQ;
}

bool lt_xi(const Worm& a, const Worm& b, const Ordinal& xi) {
    // B >_xi A iff h_xi(B) >_xi h_xi(A) and B proves r_xi(A).
    if (!(o_xi(a, xi) < o_xi(b, xi))) return false;
    const Worm ra = remainder(a, xi);
    if (ra.is_top()) return true;
    // r_xi(A) = <zeta>C with zeta < xi; B proves it iff C <_zeta B.
    return lt_xi(tail(ra), b, ra.front());
}

bool equiv(const Worm& a, const Worm& b) {
    return cmp0_syntactic(a, b) == OrderRelation::EQ;
}

} // namespace wormcalc
