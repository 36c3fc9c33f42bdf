#include "cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "wormcalc/compare.hpp"
#include "wormcalc/hyper.hpp"
#include "wormcalc/oracle.hpp"
#include "wormcalc/ordertype.hpp"
#include "wormcalc/sequences.hpp"
#include "wormcalc/textio.hpp"

namespace wormcalc::cli {

namespace {

using nlohmann::json;

struct Outcome {
    std::string command;
    std::vector<std::string> inputs;
    json result;
    std::string text;
    int code = success;
};

// Splits at commas that are not nested inside parentheses or brackets.
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

struct Options {
    bool compact = false;
    std::string worm_a, worm_b;
    std::string ord_a, ord_b;
    std::string xi;
    std::size_t len = 6;
    std::string alphabet = "0,1";
};

Outcome order_type(const Options& opt) {
    Outcome r{"ot", {}, {}, {}, success};
    const Worm a = parse_worm(opt.worm_a, opt.compact);
    r.inputs.push_back(print_worm(a, opt.compact));
    Ordinal value;
    if (opt.xi.empty()) {
        value = o(a);
    } else {
        const Ordinal xi = parse_ordinal(opt.xi);
        r.inputs.push_back(print_ordinal(xi));
        value = o_xi(a, xi);
    }
    r.text = print_ordinal(value);
    r.result = r.text;
    return r;
}

Outcome compare_worms(const Options& opt) {
    Outcome r{"cmp", {}, {}, {}, success};
    const Worm a = parse_worm(opt.worm_a, opt.compact);
    const Worm b = parse_worm(opt.worm_b, opt.compact);
    r.inputs = {print_worm(a, opt.compact), print_worm(b, opt.compact)};
    Ordinal xi;
    if (!opt.xi.empty()) {
        xi = parse_ordinal(opt.xi);
        r.inputs.push_back(print_ordinal(xi));
    }
    if (xi.is_zero()) {
        r.text = to_string(cmp0_syntactic(a, b));
    } else if (lt_xi(a, b, xi)) {
        r.text = "LT";
    } else if (lt_xi(b, a, xi)) {
        r.text = "GT";
    } else if (equiv(a, b)) {
        r.text = "EQ";
    } else {
        r.text = "incomparable";
    }
    r.result = r.text;
    return r;
}

Outcome sequence(const Options& opt) {
    Outcome r{"seq", {}, {}, {}, success};
    const Worm a = parse_worm(opt.worm_a, opt.compact);
    r.inputs.push_back(print_worm(a, opt.compact));
    const StepFunction s = consistency_sequence(a);
    r.result = json::parse(to_json(s));
    for (const auto& step : s.steps())
        r.text += print_ordinal(step.start) + " -> " + print_ordinal(step.value) + "\n";
    if (!r.text.empty()) r.text.pop_back();
    return r;
}

Outcome binary_ordinal(const char* name, const Options& opt,
                       Ordinal (*fn)(const Ordinal&, const Ordinal&)) {
    Outcome r{name, {}, {}, {}, success};
    const Ordinal x = parse_ordinal(opt.ord_a);
    const Ordinal y = parse_ordinal(opt.ord_b);
    r.inputs = {print_ordinal(x), print_ordinal(y)};
    r.text = print_ordinal(fn(x, y));
    r.result = r.text;
    return r;
}

Outcome worm_of_ordinal(const Options& opt) {
    Outcome r{"wormof", {}, {}, {}, success};
    const Ordinal x = parse_ordinal(opt.ord_a);
    r.inputs.push_back(print_ordinal(x));
    r.text = print_worm(worm_of(x), opt.compact);
    r.result = r.text;
    return r;
}

Outcome normalize(const Options& opt) {
    Outcome r{"norm", {}, {}, {}, success};
    const Ordinal x = parse_ordinal(opt.ord_a);
    r.text = print_ordinal(x);
    r.inputs.push_back(r.text);
    r.result = r.text;
    return r;
}

Outcome selfcheck(const Options& opt) {
    Outcome r{"selfcheck", {}, {}, {}, success};
    std::vector<Ordinal> alphabet;
    for (const auto& part : split_top_level(opt.alphabet)) alphabet.push_back(parse_ordinal(part));
    std::string shown;
    for (const auto& x : alphabet) shown += (shown.empty() ? "" : ",") + print_ordinal(x);
    r.inputs = {std::to_string(opt.len), shown};
    const CrossCheckReport report = exhaustive_cross_check(opt.len, alphabet);
    r.text = report.to_text();
    r.result = json::parse(report.to_json());
    r.code = report.pass ? success : internal_failure;
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Worm calculus: consistency orderings, order types, hyperexponentials"};
    app.name("wormcalc");
    app.fallthrough();
    app.require_subcommand(1);

    Options opt;
    bool as_json = false;
    app.add_flag("--compact", opt.compact, "Read (and print) worms as digit strings, e.g. 2103");
    app.add_flag("--json", as_json, "Emit one JSON object per invocation");

    auto* ot = app.add_subcommand("ot", "Order type o(A), or o_xi(A) with --xi");
    ot->add_option("worm", opt.worm_a, "Worm")->required();
    ot->add_option("--xi", opt.xi, "Level xi");

    auto* cmp = app.add_subcommand("cmp", "Compare two worms at level 0 or --xi");
    cmp->add_option("a", opt.worm_a, "First worm")->required();
    cmp->add_option("b", opt.worm_b, "Second worm")->required();
    cmp->add_option("--xi", opt.xi, "Level xi");

    auto* seq = app.add_subcommand("seq", "Consistency sequence <o_xi(A)> as steps");
    seq->add_option("worm", opt.worm_a, "Worm")->required();

    auto* hexp = app.add_subcommand("hexp", "Hyperexponential e^xi(alpha)");
    hexp->add_option("xi", opt.ord_a, "Exponent")->required();
    hexp->add_option("alpha", opt.ord_b, "Argument")->required();

    auto* hlog = app.add_subcommand("hlog", "Hyperlogarithm l^xi(alpha)");
    hlog->add_option("xi", opt.ord_a, "Exponent")->required();
    hlog->add_option("alpha", opt.ord_b, "Argument")->required();

    auto* wormof = app.add_subcommand("wormof", "A worm whose order type is alpha");
    wormof->add_option("alpha", opt.ord_a, "Ordinal")->required();

    auto* norm = app.add_subcommand("norm", "Parse an ordinal and print its normal form");
    norm->add_option("alpha", opt.ord_a, "Ordinal")->required();

    auto* check = app.add_subcommand("selfcheck", "Exhaustive brute-force agreement run");
    check->add_option("--len", opt.len, "Maximum worm length (<= 8)");
    check->add_option("--alphabet", opt.alphabet, "Comma-separated ordinals, e.g. 0,1,w");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? success : usage_error;
    }

    Outcome outcome;
    try {
        if (*ot) outcome = order_type(opt);
        else if (*cmp) outcome = compare_worms(opt);
        else if (*seq) outcome = sequence(opt);
        else if (*hexp) outcome = binary_ordinal("hexp", opt, &hyperexp);
        else if (*hlog) outcome = binary_ordinal("hlog", opt, &hyperlog);
        else if (*wormof) outcome = worm_of_ordinal(opt);
        else if (*norm) outcome = normalize(opt);
        else if (*check) outcome = selfcheck(opt);
    } catch (const ParseError& e) {
        err << "error: parse error " << e.what() << "\n";
        return usage_error;
    } catch (const PreconditionError& e) {
        err << "error: precondition violated: " << e.what() << "\n";
        return precondition_violation;
    } catch (const std::overflow_error& e) {
        err << "error: precondition violated: " << e.what() << "\n";
        return precondition_violation;
    } catch (const InternalConsistencyError& e) {
        err << "error: internal consistency failure: " << e.what() << "\n";
        return internal_failure;
    }

    if (as_json) {
        json j = {{"command", outcome.command}, {"inputs", outcome.inputs}, {"result", outcome.result}};
        out << j.dump() << "\n";
    } else {
        out << outcome.text << "\n";
    }
    if (outcome.code == internal_failure) err << "error: self-check failed\n";
    return outcome.code;
}

} // namespace wormcalc::cli
