#ifndef WORMCALC_ORDINAL_HPP
#define WORMCALC_ORDINAL_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace wormcalc {

// Raised when an operation is called outside its domain (e.g. left
// subtraction x - y with x > y, or downshifting a worm below its minimum).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when a computed result contradicts an invariant that the theory
// guarantees. Never expected in practice; signals a bug.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class OrderRelation { LT, EQ, GT };

constexpr OrderRelation flip(OrderRelation r) noexcept {
    return r == OrderRelation::LT ? OrderRelation::GT
         : r == OrderRelation::GT ? OrderRelation::LT
                                  : OrderRelation::EQ;
}

const char* to_string(OrderRelation r) noexcept;

struct VeblenTerm;

/// An ordinal below Gamma_0 in binary-Veblen normal form.
///
/// The value is a sum phi(a1,b1)*k1 + ... + phi(an,bn)*kn of Veblen terms
/// with strictly decreasing terms and positive run lengths. phi(0,b) is
/// omega^b and phi(0,0) is 1, so a finite n is the single run phi(0,0)*n.
/// Every term satisfies b < phi(a,b), i.e. b is not itself a single term
/// phi(c,d) with c > a. Under these rules the representation is unique,
/// so structural equality coincides with ordinal equality.
///
/// Values are immutable and share their term storage.
class Ordinal {
public:
    Ordinal() = default;

    static Ordinal finite(std::uint64_t n);
    static Ordinal omega();

    /// Builds an ordinal from runs that are already in normal form. Adjacent
    /// equal runs are merged; zero-count runs are dropped. Throws
    /// PreconditionError if the runs are not weakly decreasing or some
    /// term violates the normal-form condition.
    static Ordinal from_terms(std::vector<VeblenTerm> runs);

    std::span<const VeblenTerm> terms() const noexcept;

    bool is_zero() const noexcept { return !rep_ || rep_->empty(); }
    bool is_finite() const noexcept;
    /// Requires is_finite().
    std::uint64_t finite_value() const;
    bool is_successor() const noexcept;
    bool is_limit() const noexcept;
    /// Exactly one CNF term (with multiplicity one). 0 is not indecomposable.
    bool is_indecomposable() const noexcept;

    const VeblenTerm& leading() const;
    const VeblenTerm& trailing() const;

    friend bool operator==(const Ordinal& x, const Ordinal& y);
    friend std::strong_ordering operator<=>(const Ordinal& x, const Ordinal& y);

private:
    friend struct OrdinalAccess;
    explicit Ordinal(std::vector<VeblenTerm> runs);

    std::shared_ptr<const std::vector<VeblenTerm>> rep_;
};

/// phi(index, arg) repeated `count` times.
struct VeblenTerm {
    Ordinal index;
    Ordinal arg;
    std::uint64_t count = 1;

    bool is_one() const noexcept { return index.is_zero() && arg.is_zero(); }
    /// The base-omega exponent: arg when index is 0, otherwise the term
    /// itself (phi(a,b) = omega^phi(a,b) for a >= 1).
    Ordinal exponent() const;
    /// The same term as a standalone ordinal with multiplicity one.
    Ordinal single() const;
};

OrderRelation compare(const Ordinal& x, const Ordinal& y);

Ordinal add(const Ordinal& x, const Ordinal& y);
/// The unique d with x + d = y. Requires x <= y.
Ordinal left_sub(const Ordinal& x, const Ordinal& y);
Ordinal mul(const Ordinal& x, const Ordinal& y);

/// phi_a(b), absorbing b when it is already a fixed point of phi_a.
Ordinal veblen(const Ordinal& a, const Ordinal& b);
/// omega^x.
inline Ordinal omega_pow(const Ordinal& x) { return veblen(Ordinal{}, x); }

/// Last base-omega exponent of x, with ell(0) = 0.
Ordinal ell(const Ordinal& x);

enum class OrdinalKind { zero, successor, limit };

struct Classification {
    OrdinalKind kind = OrdinalKind::zero;
    bool indecomposable = false;
    /// Base-omega exponents xi_1 >= ... >= xi_n, repeated per multiplicity.
    std::vector<Ordinal> cnf_exponents;
};

Classification classify(const Ordinal& x);

/// Checks every representation invariant recursively.
bool is_normal_form(const Ordinal& x);

inline Ordinal operator+(const Ordinal& x, const Ordinal& y) { return add(x, y); }
inline Ordinal operator*(const Ordinal& x, const Ordinal& y) { return mul(x, y); }

} // namespace wormcalc

#endif
