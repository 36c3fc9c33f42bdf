#ifndef WORMCALC_HYPER_HPP
#define WORMCALC_HYPER_HPP

#include "wormcalc/ordinal.hpp"

namespace wormcalc {

/// Hyperexponential e^xi(alpha), the hyperation of e(x) = -1 + w^x.
///
/// With xi = w^x1 + ... + w^xn in Cantor normal form,
/// e^xi(alpha) = phi_x1(... phi_xn(beta)) where beta = -1 + alpha when xi is
/// a limit and beta = alpha otherwise; e^xi(0) = 0 and e^0 is the identity.
Ordinal hyperexp(const Ordinal& xi, const Ordinal& alpha);

/// The same value read off the worm calculus: o(xi up worm_of(alpha)).
Ordinal hyperexp_worm_route(const Ordinal& xi, const Ordinal& alpha);

/// Hyperlogarithm l^xi(alpha), computed as o_xi(worm_of(alpha)).
/// hyperlog(1, .) is ell().
Ordinal hyperlog(const Ordinal& xi, const Ordinal& alpha);

} // namespace wormcalc

#endif
