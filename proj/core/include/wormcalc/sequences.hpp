#ifndef WORMCALC_SEQUENCES_HPP
#define WORMCALC_SEQUENCES_HPP

#include <string>
#include <vector>

#include "wormcalc/ordinal.hpp"
#include "wormcalc/worm.hpp"

namespace wormcalc {

struct Step {
    Ordinal start;
    Ordinal value;
    friend bool operator==(const Step&, const Step&) = default;
};

/// A piecewise-constant function on the ordinals: the value at xi is the
/// value of the last step whose start is <= xi.
///
/// Construction enforces the shape (nonempty, starts strictly increasing
/// from 0). The value invariants (strictly decreasing, ending in 0) hold for
/// every consistency sequence and are reported by has_decreasing_values().
class StepFunction {
public:
    explicit StepFunction(std::vector<Step> steps);

    const std::vector<Step>& steps() const noexcept { return steps_; }
    bool has_decreasing_values() const;

    friend bool operator==(const StepFunction&, const StepFunction&) = default;

private:
    std::vector<Step> steps_;
};

/// The full sequence <o_xi(A)> over all ordinals xi.
///
/// Walks forward from (0, o(A)): a value that is not an ell-fixed point
/// drops to ell(value) at the next successor; an ell-fixed value can only
/// change at a limit partial sum of some entry's Cantor normal form, where
/// it is recomputed with o_xi. Every emitted value is rechecked against o_xi.
/// Throws InternalConsistencyError if a nonzero fixed value has no
/// remaining breakpoint or a recomputation disagrees.
StepFunction consistency_sequence(const Worm& a);

/// The limit partial sums w^a1 + ... + w^ai of the entries of A, sorted.
std::vector<Ordinal> limit_breakpoints(const Worm& a);

Ordinal eval_at(const StepFunction& s, const Ordinal& xi);

/// True iff s(xi) = l^xi(s(0)) at every start, start+1, start+2 and the
/// probe points inside each gap (start + w and the limit partial sums of the
/// next start). False also for sequences that are not decreasing to 0.
bool is_ell_exact(const StepFunction& s);

/// The probe points used by is_ell_exact, sorted and deduplicated.
std::vector<Ordinal> ell_exact_probes(const StepFunction& s);

/// [{"start": "...", "value": "..."}, ...] with canonical ordinal strings.
std::string to_json(const StepFunction& s);

} // namespace wormcalc

#endif
