#include "support.hpp"
#include "wormcalc/compare.hpp"
#include "wormcalc/oracle.hpp"
#include "wormcalc/ordertype.hpp"

using namespace wormcalc;
using namespace wormcalc::testing;

namespace {

const std::vector<Ordinal>& alphabet() {
    static const std::vector<Ordinal> a{nat(0), nat(1), nat(2), ord("w"), ord("w+1"),
                                        ord("w^2"), ord("w*2+1"), ord("phi(1,0)")};
    return a;
}

const std::vector<Ordinal>& levels() {
    static const std::vector<Ordinal> a{nat(0), nat(1), nat(2), ord("w"), ord("w+1"),
                                        ord("w*2"), ord("w^2"), ord("phi(1,0)")};
    return a;
}

} // namespace

TEST_CASE("o examples") {
    CHECK(o(digits("2103")) == ord("w^(w^w) + w^w"));
    CHECK(o(digits("1")) == ord("w"));
    CHECK(o(worm("[w]")) == ord("phi(1,0)"));
    CHECK(o(Worm{}) == Ordinal{});
    CHECK(o(digits("000")) == nat(3));
    CHECK(o(digits("11")) == ord("w^2"));
    CHECK(o(digits("101")) == ord("w*2"));
}

TEST_CASE("o_xi examples") {
    CHECK(o_xi(digits("2103"), nat(1)) == ord("w"));
    CHECK(o_xi(worm("[w]"), ord("w")) == nat(1));
    CHECK(o_xi(digits("2103"), nat(3)) == Ordinal{});
    CHECK(o_xi(worm("[w, 0]"), ord("w+1")) == Ordinal{});
    CHECK(o_xi(digits("2103"), nat(0)) == o(digits("2103")));
}

TEST_CASE("worm_of examples") {
    CHECK(worm_of(nat(3)) == digits("000"));
    CHECK(worm_of(ord("w")) == digits("10"));
    CHECK(equiv(digits("10"), digits("1")));
    CHECK(worm_of(ord("phi(1,0)")) == worm("[w, 0]"));
    CHECK(o(worm("[w, 0]")) == ord("phi(1,0)"));
    CHECK(worm_of(Ordinal{}).is_top());
}

TEST_CASE("worm_of round trip") {
    for (const auto& x : sample_ordinals()) REQUIRE(o(worm_of(x)) == x);
}

TEST_CASE("concatenation law") {
    const auto worms = enumerate_worms(3, {nat(0), nat(1), nat(2), ord("w")});
    for (std::size_t i = 0; i < worms.size(); i += 3)
        for (std::size_t j = 0; j < worms.size(); j += 4)
            REQUIRE(o(concat({worms[i], digits("0"), worms[j]})) ==
                    add(add(o(worms[j]), nat(1)), o(worms[i])));
}

TEST_CASE("head restriction and restriction to worms above xi") {
    for (const auto& a : sample_worms(200, alphabet(), 5, 31)) {
        for (const auto& xi : levels()) {
            REQUIRE(o_xi(a, xi) == o_xi(head(a, xi), xi));
            if (a.all_at_least(xi)) REQUIRE(o_xi(a, xi) == o(shift_down(xi, a)));
        }
    }
}

TEST_CASE("successor and limit classification") {
    for (const auto& a : sample_worms(300, alphabet(), 5, 32)) {
        const auto kind = classify(o(a)).kind;
        const bool has_head = !head(a).is_top();
        REQUIRE((kind == OrdinalKind::successor) == (!has_head && !a.is_top()));
        REQUIRE((kind == OrdinalKind::limit) == has_head);
    }
}

TEST_CASE("body breakdown") {
    for (const auto& a : sample_worms(300, alphabet(), 5, 33)) {
        if (a.is_top()) continue;
        const Ordinal rhs =
            add(o(body(a)), omega_pow(o(shift_down(nat(1), head(a)))));
        REQUIRE(o(a) == rhs);
    }
}

TEST_CASE("worms of successors have no head") {
    for (const auto& x : sample_ordinals()) {
        if (!x.is_successor()) continue;
        REQUIRE(head(worm_of(x)).is_top());
    }
}

TEST_CASE("fundamental sequence of 11") {
    for (std::uint64_t n = 0; n <= 6; ++n)
        REQUIRE(o(fund_seq(digits("11"), n)) == mul(ord("w"), nat(n + 1)));
}

TEST_CASE("o_xi weakly decreases in xi") {
    for (const auto& a : sample_worms(200, alphabet(), 5, 34)) {
        for (std::size_t i = 0; i < levels().size(); ++i)
            for (std::size_t j = i + 1; j < levels().size(); ++j)
                REQUIRE_FALSE(o_xi(a, levels()[i]) < o_xi(a, levels()[j]));
    }
}

TEST_CASE("order embedding on a small enumeration") {
    const auto worms = enumerate_worms(4, {nat(0), nat(1), ord("w")});
    std::vector<Ordinal> types;
    for (const auto& a : worms) types.push_back(o(a));
    for (std::size_t i = 0; i < worms.size(); ++i)
        for (std::size_t j = 0; j < worms.size(); j += 3)
            REQUIRE(cmp0_syntactic(worms[i], worms[j]) == compare(types[i], types[j]));
}
