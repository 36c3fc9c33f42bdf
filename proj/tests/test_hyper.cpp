#include "support.hpp"
#include "wormcalc/hyper.hpp"
#include "wormcalc/oracle.hpp"

using namespace wormcalc;
using namespace wormcalc::testing;

namespace {

const std::vector<Ordinal>& exponents() {
    static const std::vector<Ordinal> a{
        nat(0),     nat(1),       nat(2),        ord("w"),        ord("w+1"),
        ord("w*2"), ord("w^2"),   ord("w^2+1"),  ord("w^w"),      ord("phi(1,0)"),
        ord("phi(1,0)+1"),        ord("phi(1,1)"), ord("phi(2,0)")};
    return a;
}

std::vector<Ordinal> grid(std::size_t stride) {
    const auto all = sample_ordinals();
    std::vector<Ordinal> out;
    for (std::size_t i = 0; i < all.size(); i += stride) out.push_back(all[i]);
    return out;
}

} // namespace

TEST_CASE("hyperexp examples") {
    CHECK(hyperexp(nat(1), nat(2)) == ord("w^2"));
    CHECK(hyperexp(ord("w"), nat(1)) == ord("phi(1,0)"));
    CHECK(hyperexp(ord("w+1"), nat(1)) == ord("phi(1,w)"));
    CHECK(hyperexp(nat(0), ord("w^w+3")) == ord("w^w+3"));
    CHECK(hyperexp(ord("phi(1,0)"), Ordinal{}) == Ordinal{});
    CHECK(hyperexp(nat(1), nat(0)) == Ordinal{});
    CHECK(hyperexp(nat(1), nat(1)) == ord("w"));
    CHECK(hyperexp(ord("w^2"), nat(1)) == ord("phi(2,0)"));
}

TEST_CASE("hyperexp_worm_route examples") {
    CHECK(hyperexp_worm_route(ord("w"), nat(1)) == ord("phi(1,0)"));
    CHECK(hyperexp_worm_route(nat(0), ord("phi(1,0)+2")) == ord("phi(1,0)+2"));
    CHECK(hyperexp_worm_route(nat(2), nat(1)) == ord("w^w"));
}

TEST_CASE("hyperlog examples") {
    CHECK(hyperlog(nat(1), ord("w^(w^w) + w^w")) == ord("w"));
    CHECK(hyperlog(ord("w"), ord("phi(1,0)")) == nat(1));
    for (const auto& xi : exponents()) CHECK(hyperlog(xi, Ordinal{}) == Ordinal{});
    CHECK(hyperlog(nat(0), ord("w*2")) == ord("w*2"));
}

TEST_CASE("hyperlog at 1 is ell") {
    for (const auto& x : sample_ordinals()) REQUIRE(hyperlog(nat(1), x) == ell(x));
}

TEST_CASE("hyperexp at 1 is -1 + w^x") {
    for (const auto& x : sample_ordinals())
        REQUIRE(hyperexp(nat(1), x) == left_sub(nat(1), omega_pow(x)));
}

TEST_CASE("route agreement") {
    for (const auto& x : grid(2))
        for (const auto& xi : exponents()) REQUIRE(hyperexp(xi, x) == hyperexp_worm_route(xi, x));
}

TEST_CASE("additivity and co-additivity") {
    const auto xs = grid(5);
    for (const auto& a : exponents()) {
        for (const auto& b : exponents()) {
            const Ordinal ab = add(a, b);
            for (const auto& x : xs) {
                REQUIRE(hyperexp(ab, x) == hyperexp(a, hyperexp(b, x)));
                REQUIRE(hyperlog(ab, x) == hyperlog(b, hyperlog(a, x)));
            }
        }
    }
}

TEST_CASE("strict monotonicity in the argument") {
    const auto xs = grid(4);
    for (const auto& xi : exponents())
        for (const auto& x : xs)
            for (const auto& y : xs)
                if (x < y) REQUIRE(hyperexp(xi, x) < hyperexp(xi, y));
}

TEST_CASE("adjointness") {
    const auto xs = grid(4);
    for (const auto& xi : exponents()) {
        for (const auto& x : xs) {
            REQUIRE(hyperlog(xi, hyperexp(xi, x)) == x);
            for (const auto& y : xs)
                if (x < hyperexp(xi, y)) REQUIRE(hyperlog(xi, x) < y);
        }
    }
}

TEST_CASE("cancellation") {
    const auto xs = grid(5);
    for (const auto& xi : exponents())
        for (const auto& zeta : exponents()) {
            if (zeta < xi) continue;
            for (const auto& x : xs)
                REQUIRE(hyperlog(xi, hyperexp(zeta, x)) == hyperexp(left_sub(xi, zeta), x));
        }
}

TEST_CASE("indecomposable exponents absorb smaller ones") {
    const auto xs = grid(4);
    for (const auto& lambda : exponents()) {
        if (!lambda.is_indecomposable()) continue;
        for (const auto& eta : exponents()) {
            if (!(eta < lambda)) continue;
            for (const auto& x : xs) {
                const Ordinal v = hyperexp(lambda, x);
                REQUIRE(hyperexp(eta, v) == v);
            }
        }
    }
}

TEST_CASE("indecomposable successor step lower half") {
    const auto xs = grid(4);
    const Ordinal one = nat(1);
    for (const auto& lambda : exponents()) {
        if (!lambda.is_indecomposable() || !lambda.is_limit()) continue;
        for (const auto& eta : exponents()) {
            if (!(eta < lambda)) continue;
            for (const auto& b : xs) {
                const Ordinal lhs = hyperexp(eta, add(hyperexp(lambda, b), one));
                REQUIRE_FALSE(hyperexp(lambda, add(b, one)) < lhs);
            }
        }
    }
}

TEST_CASE("Veblen correspondence") {
    const std::vector<Ordinal> gammas{nat(1), nat(2), ord("w"), ord("phi(1,0)")};
    for (const auto& g : gammas) {
        const Ordinal lambda = omega_pow(g);
        for (const auto& x : grid(3)) {
            if (x.is_zero()) continue;
            const Ordinal v = hyperexp(lambda, x);
            REQUIRE(v == veblen(g, left_sub(nat(1), x)));
            for (const auto& a : gammas)
                if (a < g) REQUIRE(veblen(a, v) == v);
        }
    }
}
