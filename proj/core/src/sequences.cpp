#include "wormcalc/sequences.hpp"

#include <algorithm>

#include "json.hpp"

#include "wormcalc/hyper.hpp"
#include "wormcalc/ordertype.hpp"
#include "wormcalc/textio.hpp"

namespace wormcalc {

namespace {

const Ordinal& one() {
    static const Ordinal v = Ordinal::finite(1);
    return v;
}

void sort_unique(std::vector<Ordinal>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

// Limit partial sums of x's Cantor normal form, ascending.
void push_limit_partial_sums(const Ordinal& x, std::vector<Ordinal>& out) {
    Ordinal sum;
    for (const auto& t : x.terms()) {
        if (t.is_one()) break;
        const Ordinal piece = t.single();
        for (std::uint64_t k = 0; k < t.count; ++k) {
            sum = add(sum, piece);
            out.push_back(sum);
        }
    }
}

} // namespace

StepFunction::StepFunction(std::vector<Step> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw PreconditionError("step function needs at least one step");
    if (!steps_.front().start.is_zero())
        throw PreconditionError("step function must start at 0");
    for (std::size_t i = 1; i < steps_.size(); ++i)
        if (!(steps_[i - 1].start < steps_[i].start))
            throw PreconditionError("step starts must be strictly increasing");
}

bool StepFunction::has_decreasing_values() const {
    for (std::size_t i = 1; i < steps_.size(); ++i)
        if (!(steps_[i].value < steps_[i - 1].value)) return false;
    return steps_.back().value.is_zero();
}

std::vector<Ordinal> limit_breakpoints(const Worm& a) {
    std::vector<Ordinal> out;
    for (const auto& e : a.entries()) push_limit_partial_sums(e, out);
    sort_unique(out);
    return out;
}

StepFunction consistency_sequence(const Worm& a) {
    const std::vector<Ordinal> breakpoints = limit_breakpoints(a);
    std::vector<Step> steps{{Ordinal{}, o(a)}};
    Ordinal xi;
    Ordinal value = steps.front().value;
    auto next_break = breakpoints.begin();

    while (!value.is_zero()) {
        const Ordinal logged = ell(value);
        if (logged < value) {
            xi = add(xi, one());
            value = logged;
            steps.push_back({xi, value});
            continue;
        }
        next_break = std::upper_bound(next_break, breakpoints.end(), xi);
        if (next_break == breakpoints.end())
            throw InternalConsistencyError(
                "consistency sequence: nonzero ell-fixed value with no breakpoint left");
        xi = *next_break;
        const Ordinal v = o_xi(a, xi);
        if (value < v)
            throw InternalConsistencyError("consistency sequence: o_xi increased");
        if (v < value) {
            value = v;
            steps.push_back({xi, value});
        }
    }

    for (const auto& step : steps)
        if (o_xi(a, step.start) != step.value)
            throw InternalConsistencyError("consistency sequence: value disagrees with o_xi");
    return StepFunction(std::move(steps));
}

Ordinal eval_at(const StepFunction& s, const Ordinal& xi) {
    const auto& steps = s.steps();
    auto it = std::upper_bound(steps.begin(), steps.end(), xi,
                               [](const Ordinal& x, const Step& st) { return x < st.start; });
    return std::prev(it)->value;
}

std::vector<Ordinal> ell_exact_probes(const StepFunction& s) {
    const auto& steps = s.steps();
    const Ordinal w = Ordinal::omega();
    std::vector<Ordinal> probes;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Ordinal& start = steps[i].start;
        probes.push_back(start);
        probes.push_back(add(start, one()));
        probes.push_back(add(start, Ordinal::finite(2)));
        const Ordinal far = add(start, w);
        if (i + 1 == steps.size()) {
            probes.push_back(far);
            continue;
        }
        const Ordinal& next = steps[i + 1].start;
        if (far < next) probes.push_back(far);
        std::vector<Ordinal> sums;
        push_limit_partial_sums(next, sums);
        for (const auto& p : sums)
            if (start < p && p < next) probes.push_back(p);
    }
    sort_unique(probes);
    return probes;
}

bool is_ell_exact(const StepFunction& s) {
    if (!s.has_decreasing_values()) return false;
    const Ordinal initial = s.steps().front().value;
    for (const auto& xi : ell_exact_probes(s))
        if (eval_at(s, xi) != hyperlog(xi, initial)) return false;
    return true;
}

std::string to_json(const StepFunction& s) {
    auto arr = nlohmann::json::array();
    for (const auto& step : s.steps())
        arr.push_back({{"start", print_ordinal(step.start)}, {"value", print_ordinal(step.value)}});
    return arr.dump();
}

} // namespace wormcalc
