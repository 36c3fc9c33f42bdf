#ifndef WORMCALC_ORDERTYPE_HPP
#define WORMCALC_ORDERTYPE_HPP

#include "wormcalc/ordinal.hpp"
#include "wormcalc/worm.hpp"

namespace wormcalc {

/// Order type of A under <_0.
///
/// o(T) = 0, o(H 0 T') = o(T') + 1 + o(H) splitting at the first 0, and a
/// worm with minimum entry m > 0 is the m-shift of a worm containing 0,
/// whose order type is mapped through e^m. The hyperexponential is applied
/// one base-omega piece of m at a time (e^(w^c) is the c-th Veblen function
/// applied to -1+x), independently of hyperexp() in hyper.hpp.
Ordinal o(const Worm& a);

/// Order type of A under <_xi: o(xi-downshift of the xi-head of A).
Ordinal o_xi(const Worm& a, const Ordinal& xi);

/// A canonical worm W with o(W) = alpha. Always of the shape
/// "shifted head, 0, worm_of(rest)" for alpha > 0, so e.g.
/// worm_of(w) = [1, 0].
Worm worm_of(const Ordinal& alpha);

} // namespace wormcalc

#endif
