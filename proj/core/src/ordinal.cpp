#include "wormcalc/ordinal.hpp"

#include <limits>
#include <utility>

namespace wormcalc {

struct OrdinalAccess {
    static Ordinal make(std::vector<VeblenTerm> runs) { return Ordinal{std::move(runs)}; }
};

namespace {

using Runs = std::vector<VeblenTerm>;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("ordinal multiplicity overflow");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("ordinal multiplicity overflow");
    return r;
}

OrderRelation compare_terms(const VeblenTerm& s, const VeblenTerm& t);

// x against the single term t (multiplicity of t ignored).
OrderRelation compare_with_term(const Ordinal& x, const VeblenTerm& t) {
    if (x.is_zero()) return OrderRelation::LT;
    const auto& lead = x.leading();
    if (auto c = compare_terms(lead, t); c != OrderRelation::EQ) return c;
    if (lead.count > 1 || x.terms().size() > 1) return OrderRelation::GT;
    return OrderRelation::EQ;
}

// phi(a,b) vs phi(c,d), ignoring multiplicities.
OrderRelation compare_terms(const VeblenTerm& s, const VeblenTerm& t) {
    if (&s == &t) return OrderRelation::EQ;
    switch (compare(s.index, t.index)) {
    case OrderRelation::LT: return compare_with_term(s.arg, t);
    case OrderRelation::EQ: return compare(s.arg, t.arg);
    case OrderRelation::GT: return flip(compare_with_term(t.arg, s));
    }
    return OrderRelation::EQ;
}

bool same_term(const VeblenTerm& s, const VeblenTerm& t) {
    return compare_terms(s, t) == OrderRelation::EQ;
}

// Appends a run, merging with the previous one when the terms coincide.
void push_run(Runs& runs, VeblenTerm t) {
    if (t.count == 0) return;
    if (!runs.empty() && same_term(runs.back(), t)) {
        runs.back().count = checked_add(runs.back().count, t.count);
        return;
    }
    runs.push_back(std::move(t));
}

VeblenTerm one_term(std::uint64_t count = 1) {
    return VeblenTerm{Ordinal{}, Ordinal{}, count};
}

bool term_in_normal_form(const VeblenTerm& t) {
    if (t.count == 0) return false;
    if (!is_normal_form(t.index) || !is_normal_form(t.arg)) return false;
    if (t.arg.is_indecomposable()
        && compare(t.arg.leading().index, t.index) == OrderRelation::GT)
        return false;
    return true;
}

} // namespace

const char* to_string(OrderRelation r) noexcept {
    switch (r) {
    case OrderRelation::LT: return "LT";
    case OrderRelation::EQ: return "EQ";
    case OrderRelation::GT: return "GT";
    }
    return "?";
}

Ordinal::Ordinal(std::vector<VeblenTerm> runs) {
    if (!runs.empty())
        rep_ = std::make_shared<const std::vector<VeblenTerm>>(std::move(runs));
}

Ordinal Ordinal::finite(std::uint64_t n) {
    if (n == 0) return Ordinal{};
    return Ordinal{Runs{one_term(n)}};
}

Ordinal Ordinal::omega() {
    return Ordinal{Runs{VeblenTerm{Ordinal{}, finite(1), 1}}};
}

Ordinal Ordinal::from_terms(std::vector<VeblenTerm> runs) {
    Runs merged;
    for (auto& t : runs) {
        if (t.count == 0) continue;
        if (!term_in_normal_form(t))
            throw PreconditionError("Veblen term not in normal form");
        if (!merged.empty() && compare_terms(merged.back(), t) == OrderRelation::LT)
            throw PreconditionError("Veblen terms not weakly decreasing");
        push_run(merged, std::move(t));
    }
    return Ordinal{std::move(merged)};
}

std::span<const VeblenTerm> Ordinal::terms() const noexcept {
    if (!rep_) return {};
    return {rep_->data(), rep_->size()};
}

bool Ordinal::is_finite() const noexcept {
    return is_zero() || (rep_->size() == 1 && rep_->front().is_one());
}

std::uint64_t Ordinal::finite_value() const {
    if (!is_finite()) throw PreconditionError("ordinal is not finite");
    return is_zero() ? 0 : rep_->front().count;
}

bool Ordinal::is_successor() const noexcept {
    return !is_zero() && rep_->back().is_one();
}

bool Ordinal::is_limit() const noexcept {
    return !is_zero() && !rep_->back().is_one();
}

bool Ordinal::is_indecomposable() const noexcept {
    return !is_zero() && rep_->size() == 1 && rep_->front().count == 1;
}

const VeblenTerm& Ordinal::leading() const {
    if (is_zero()) throw PreconditionError("zero has no leading term");
    return rep_->front();
}

const VeblenTerm& Ordinal::trailing() const {
    if (is_zero()) throw PreconditionError("zero has no trailing term");
    return rep_->back();
}

bool operator==(const Ordinal& x, const Ordinal& y) {
    return compare(x, y) == OrderRelation::EQ;
}

std::strong_ordering operator<=>(const Ordinal& x, const Ordinal& y) {
    switch (compare(x, y)) {
    case OrderRelation::LT: return std::strong_ordering::less;
    case OrderRelation::EQ: return std::strong_ordering::equal;
    case OrderRelation::GT: return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Ordinal VeblenTerm::exponent() const {
    if (index.is_zero()) return arg;
    return single();
}

Ordinal VeblenTerm::single() const {
    return OrdinalAccess::make({VeblenTerm{index, arg, 1}});
}

OrderRelation compare(const Ordinal& x, const Ordinal& y) {
    auto xs = x.terms();
    auto ys = y.terms();
    if (xs.data() == ys.data() && xs.size() == ys.size()) return OrderRelation::EQ;
    std::size_t i = 0;
    for (; i < xs.size() && i < ys.size(); ++i) {
        if (auto c = compare_terms(xs[i], ys[i]); c != OrderRelation::EQ) return c;
        // Equal terms: the shorter run is followed by something smaller.
        if (xs[i].count < ys[i].count) return OrderRelation::LT;
        if (xs[i].count > ys[i].count) return OrderRelation::GT;
    }
    if (xs.size() == ys.size()) return OrderRelation::EQ;
    return i == xs.size() ? OrderRelation::LT : OrderRelation::GT;
}

Ordinal add(const Ordinal& x, const Ordinal& y) {
    if (y.is_zero()) return x;
    if (x.is_zero()) return y;
    const auto& lead = y.leading();
    Runs out;
    for (const auto& t : x.terms()) {
        if (compare_terms(t, lead) == OrderRelation::LT) break;
        out.push_back(t);
    }
    for (const auto& t : y.terms()) push_run(out, t);
    return OrdinalAccess::make(std::move(out));
}

Ordinal left_sub(const Ordinal& x, const Ordinal& y) {
    auto xs = x.terms();
    auto ys = y.terms();
    std::size_t i = 0;
    for (; i < xs.size(); ++i) {
        if (i == ys.size()) throw PreconditionError("left_sub: x > y");
        auto c = compare_terms(xs[i], ys[i]);
        if (c == OrderRelation::GT) throw PreconditionError("left_sub: x > y");
        if (c == OrderRelation::LT) break;
        if (xs[i].count > ys[i].count) throw PreconditionError("left_sub: x > y");
        if (xs[i].count < ys[i].count) {
            // x = t*k + s with s < t is absorbed: the rest of y after t*k remains.
            Runs out(ys.begin() + static_cast<std::ptrdiff_t>(i), ys.end());
            out.front().count = ys[i].count - xs[i].count;
            return OrdinalAccess::make(std::move(out));
        }
    }
    return OrdinalAccess::make(Runs(ys.begin() + static_cast<std::ptrdiff_t>(i), ys.end()));
}

Ordinal mul(const Ordinal& x, const Ordinal& y) {
    if (x.is_zero() || y.is_zero()) return Ordinal{};
    const Ordinal lead_exp = x.leading().exponent();
    Ordinal result;
    for (const auto& t : y.terms()) {
        Ordinal piece;
        if (t.is_one()) {
            // x * n scales the leading run only.
            Runs runs(x.terms().begin(), x.terms().end());
            runs.front().count = checked_mul(runs.front().count, t.count);
            piece = OrdinalAccess::make(std::move(runs));
        } else {
            // x * omega^e = omega^(lead_exp + e) for e >= 1.
            const Ordinal power = omega_pow(add(lead_exp, t.exponent()));
            VeblenTerm run = power.leading();
            run.count = t.count;
            piece = OrdinalAccess::make({std::move(run)});
        }
        result = add(result, piece);
    }
    return result;
}

Ordinal veblen(const Ordinal& a, const Ordinal& b) {
    if (b.is_indecomposable() && compare(b.leading().index, a) == OrderRelation::GT)
        return b;
    return OrdinalAccess::make({VeblenTerm{a, b, 1}});
}

Ordinal ell(const Ordinal& x) {
    if (x.is_zero()) return x;
    return x.trailing().exponent();
}

Classification classify(const Ordinal& x) {
    Classification c;
    if (x.is_zero()) return c;
    c.kind = x.is_successor() ? OrdinalKind::successor : OrdinalKind::limit;
    c.indecomposable = x.is_indecomposable();
    for (const auto& t : x.terms()) {
        const Ordinal e = t.exponent();
        for (std::uint64_t k = 0; k < t.count; ++k) c.cnf_exponents.push_back(e);
    }
    return c;
}

bool is_normal_form(const Ordinal& x) {
    auto ts = x.terms();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!term_in_normal_form(ts[i])) return false;
        if (i > 0 && compare_terms(ts[i - 1], ts[i]) != OrderRelation::GT) return false;
    }
    return true;
}

} // namespace wormcalc
