#include "wormcalc/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "wormcalc/compare.hpp"
#include "wormcalc/ordertype.hpp"
#include "wormcalc/textio.hpp"

namespace wormcalc {

std::vector<Worm> enumerate_worms(std::size_t max_len, const std::vector<Ordinal>& alphabet) {
    if (alphabet.empty()) throw PreconditionError("enumerate_worms: empty alphabet");
    if (max_len > max_enumeration_length)
        throw PreconditionError("enumerate_worms: max_len above " +
                                std::to_string(max_enumeration_length));
    std::vector<Worm> out{Worm{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (const auto& x : alphabet) {
                std::vector<Ordinal> es(out[i].entries().begin(), out[i].entries().end());
                es.push_back(x);
                out.emplace_back(std::move(es));
            }
        }
        level_begin = level_end;
    }
    return out;
}

std::string CrossCheckReport::to_text() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << ": " << worms << " worms, " << pairs << " ordered pairs, "
       << checks << " checks";
    if (first_failure)
        os << "\nfirst counterexample [" << first_failure->check << "]: " << first_failure->detail;
    return os.str();
}

std::string CrossCheckReport::to_json() const {
    nlohmann::json j = {{"pass", pass}, {"worms", worms}, {"pairs", pairs}, {"checks", checks}};
    if (first_failure)
        j["counterexample"] = {{"check", first_failure->check}, {"detail", first_failure->detail}};
    else
        j["counterexample"] = nullptr;
    return j.dump();
}

CrossCheckReport exhaustive_cross_check(std::size_t max_len, const std::vector<Ordinal>& alphabet) {
    const std::vector<Worm> worms = enumerate_worms(max_len, alphabet);
    const std::size_t n = worms.size();
    CrossCheckReport report;
    report.worms = n;

    auto check = [&](bool ok, const char* name, auto&& describe) {
        ++report.checks;
        if (ok || !report.pass) return;
        report.pass = false;
        report.first_failure = Counterexample{name, describe()};
    };

    std::vector<Ordinal> types;
    types.reserve(n);
    for (const auto& w : worms) types.push_back(o(w));

    const Worm zero{Ordinal{}};
    for (std::size_t i = 0; i < n; ++i) {
        const Worm& a = worms[i];
        if (a.is_top()) continue;
        const Worm rebuilt = concat({head(a), zero, body(a)});
        check(equiv(a, rebuilt), "body-decomposition", [&] {
            return print_worm(a) + " vs " + print_worm(rebuilt);
        });
    }

    std::vector<OrderRelation> rel(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Worm& a = worms[i];
            const Worm& b = worms[j];
            ++report.pairs;
            const OrderRelation c = cmp0_syntactic(a, b);
            rel[i * n + j] = c;
            const OrderRelation by_type = compare(types[i], types[j]);
            check(c == by_type, "route-agreement", [&] {
                return print_worm(a) + " vs " + print_worm(b) + ": cmp0 " + to_string(c) +
                       ", order types " + print_ordinal(types[i]) + " / " + print_ordinal(types[j]);
            });
            const Ordinal joined = o(concat({a, zero, b}));
            const Ordinal expected = add(add(types[j], Ordinal::finite(1)), types[i]);
            check(joined == expected, "concatenation-law", [&] {
                return "o(" + print_worm(concat({a, zero, b})) + ") = " + print_ordinal(joined) +
                       ", expected " + print_ordinal(expected);
            });
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const OrderRelation c = rel[i * n + j];
            check(rel[j * n + i] == flip(c), "trichotomy", [&] {
                return print_worm(worms[i]) + " vs " + print_worm(worms[j]);
            });
        }
    }

    // Transitivity of <= with strictness propagation, on the cached matrix.
    for (std::size_t i = 0; i < n && report.pass; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const OrderRelation ij = rel[i * n + j];
            if (ij == OrderRelation::GT) continue;
            for (std::size_t k = 0; k < n; ++k) {
                const OrderRelation jk = rel[j * n + k];
                if (jk == OrderRelation::GT) continue;
                const OrderRelation want =
                    (ij == OrderRelation::EQ && jk == OrderRelation::EQ) ? OrderRelation::EQ
                                                                         : OrderRelation::LT;
                ++report.checks;
                if (rel[i * n + k] != want && report.pass) {
                    report.pass = false;
                    report.first_failure = Counterexample{
                        "transitivity", print_worm(worms[i]) + ", " + print_worm(worms[j]) +
                                            ", " + print_worm(worms[k])};
                }
            }
        }
    }
    return report;
}

std::vector<std::pair<Worm, Ordinal>> rank_table(std::size_t n) {
    if (n > 20) throw PreconditionError("rank_table: n above 20");
    std::vector<std::pair<Worm, Ordinal>> rows;
    for (std::size_t k = 0; k <= n; ++k) {
        Worm w = Worm::repeat(Ordinal{}, k);
        Ordinal expected = Ordinal::finite(k);
        if (o(w) != expected)
            throw InternalConsistencyError("rank_table: o(0^" + std::to_string(k) + ") != " +
                                           std::to_string(k));
        rows.emplace_back(std::move(w), std::move(expected));
    }
    return rows;
}

std::vector<Ordinal> sample_ordinals() {
    const Ordinal w = Ordinal::omega();
    const Ordinal one = Ordinal::finite(1);
    const std::vector<Ordinal> seeds{
        Ordinal{},        one,
        Ordinal::finite(2), Ordinal::finite(3),
        w,                add(w, one),
        mul(w, Ordinal::finite(2)), omega_pow(Ordinal::finite(2)),
        omega_pow(w),     veblen(one, Ordinal{}),
        veblen(one, one), veblen(Ordinal::finite(2), Ordinal{}),
    };
    std::vector<Ordinal> out;
    auto push = [&](Ordinal x) {
        if (out.size() < 200 && std::find(out.begin(), out.end(), x) == out.end())
            out.push_back(std::move(x));
    };
    for (const auto& s : seeds) push(s);
    for (const auto& x : seeds) {
        for (const auto& y : seeds) {
            push(add(x, y));
            push(veblen(x, y));
        }
    }
    return out;
}

} // namespace wormcalc
