#ifndef WORMCALC_COMPARE_HPP
#define WORMCALC_COMPARE_HPP

#include "wormcalc/ordinal.hpp"
#include "wormcalc/worm.hpp"

namespace wormcalc {

/// Decides A <_0 B, A == B (provable equivalence) or B <_0 A by syntactic
/// reductions on the worms alone; no order-type is computed.
///
/// Reductions, tried in order:
///   - T is below every nonempty worm;
///   - if both worms have minimum entry m > 0, both are shifted down by m;
///   - 0A' against 0B' compares A' against B';
///   - against a worm 0B', a worm A with nonempty 1-head is above B' or
///     below-or-equal to it; it lies below 0B' exactly in the latter case;
///   - two worms with nonempty 1-heads are split into head and remainder:
///     A < B iff A < r(B), or r(A) < B and h(A) < h(B).
///
/// Every rule either shortens one of the worms or is a downshift that is
/// followed by a shortening rule, so the recursion is bounded by the total
/// length.
OrderRelation cmp0_syntactic(const Worm& a, const Worm& b);

/// A <_xi B, i.e. B proves <xi>A. Heads are compared through their order
/// types; the remainder of A is discharged recursively at a lower level.
bool lt_xi(const Worm& a, const Worm& b, const Ordinal& xi);

/// Provable equivalence.
bool equiv(const Worm& a, const Worm& b);

} // namespace wormcalc

#endif
