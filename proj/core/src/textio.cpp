#include "wormcalc/textio.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace wormcalc {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message),
      kind_(kind), position_(position) {}

namespace {

[[noreturn]] void syntax_error(std::size_t pos, const std::string& msg) {
    throw ParseError(ParseError::Kind::syntax, pos, msg);
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprNode expr() {
        ExprNode first = term();
        if (!at('+')) return first;
        ExprNode node{ExprNode::Kind::sum, 0, first.position, {}};
        node.children.push_back(std::move(first));
        while (accept('+')) node.children.push_back(term());
        return node;
    }

    std::vector<ExprNode> worm() {
        expect('[');
        std::vector<ExprNode> entries;
        if (accept(']')) return entries;
        entries.push_back(expr());
        while (accept(',')) entries.push_back(expr());
        expect(']');
        return entries;
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size()) syntax_error(pos_, "unexpected trailing input");
    }

private:
    ExprNode term() {
        ExprNode first = factor();
        if (!at('*')) return first;
        ExprNode node{ExprNode::Kind::product, 0, first.position, {}};
        node.children.push_back(std::move(first));
        while (accept('*')) node.children.push_back(factor());
        return node;
    }

    ExprNode factor() {
        ExprNode b = base();
        skip_space();
        if (!at('^')) return b;
        const std::size_t caret = pos_;
        ++pos_;
        ExprNode node{ExprNode::Kind::power, 0, caret, {}};
        node.children.push_back(std::move(b));
        node.children.push_back(factor());
        return node;
    }

    ExprNode base() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ == text_.size()) syntax_error(pos_, "unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return natural();
        if (text_.substr(pos_, 3) == "phi") {
            pos_ += 3;
            ExprNode node{ExprNode::Kind::phi, 0, start, {}};
            expect('(');
            node.children.push_back(expr());
            expect(',');
            node.children.push_back(expr());
            expect(')');
            return node;
        }
        if (c == 'w') {
            ++pos_;
            return ExprNode{ExprNode::Kind::omega, 0, start, {}};
        }
        if (c == '(') {
            ++pos_;
            ExprNode inner = expr();
            expect(')');
            return inner;
        }
        syntax_error(pos_, std::string("unexpected character '") + c + "'");
    }

    ExprNode natural() {
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const auto d = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
                syntax_error(start, "natural number too large");
            v = v * 10 + d;
            ++pos_;
        }
        return ExprNode{ExprNode::Kind::natural, v, start, {}};
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!at(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) {
            if (pos_ == text_.size())
                syntax_error(pos_, std::string("expected '") + c + "' but input ended");
            syntax_error(pos_, std::string("expected '") + c + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::size_t pos) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base == 0 || base == 1) return base == 0 ? 0 : 1;
        if (__builtin_mul_overflow(r, base, &r))
            throw ParseError(ParseError::Kind::unsupported_exponent, pos, "power too large");
    }
    return r;
}

bool is_omega(const Ordinal& x) { return x == Ordinal::omega(); }

// Exponent of a w^b term as text: bare when it is a single token.
std::string exponent_text(const Ordinal& b) {
    if (b.is_finite() || is_omega(b)) return print_ordinal(b);
    return "(" + print_ordinal(b) + ")";
}

std::string term_text(const VeblenTerm& t) {
    if (t.index.is_zero()) {
        if (t.arg == Ordinal::finite(1)) return "w";
        return "w^" + exponent_text(t.arg);
    }
    return "phi(" + print_ordinal(t.index) + "," + print_ordinal(t.arg) + ")";
}

} // namespace

ExprNode parse_expression(std::string_view text) {
    Parser p(text);
    ExprNode node = p.expr();
    p.finish();
    return node;
}

Ordinal evaluate(const ExprNode& node) {
    switch (node.kind) {
    case ExprNode::Kind::natural: return Ordinal::finite(node.value);
    case ExprNode::Kind::omega: return Ordinal::omega();
    case ExprNode::Kind::phi:
        return veblen(evaluate(node.children.at(0)), evaluate(node.children.at(1)));
    case ExprNode::Kind::sum: {
        Ordinal acc;
        for (const auto& c : node.children) acc = add(acc, evaluate(c));
        return acc;
    }
    case ExprNode::Kind::product: {
        Ordinal acc = Ordinal::finite(1);
        for (const auto& c : node.children) acc = mul(acc, evaluate(c));
        return acc;
    }
    case ExprNode::Kind::power: {
        const Ordinal b = evaluate(node.children.at(0));
        const Ordinal e = evaluate(node.children.at(1));
        if (is_omega(b)) return omega_pow(e);
        if (b.is_finite() && e.is_finite())
            return Ordinal::finite(checked_pow(b.finite_value(), e.finite_value(), node.position));
        throw ParseError(ParseError::Kind::unsupported_exponent, node.position,
                         "'^' needs base w or a natural base with natural exponent");
    }
    }
    syntax_error(node.position, "malformed expression node");
}

Ordinal parse_ordinal(std::string_view text) {
    return evaluate(parse_expression(text));
}

Worm parse_worm(std::string_view text, bool compact) {
    if (compact) {
        std::vector<Ordinal> entries;
        std::string_view trimmed = text;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.remove_suffix(1);
        std::size_t i = 0;
        while (i < trimmed.size() && std::isspace(static_cast<unsigned char>(trimmed[i]))) ++i;
        if (trimmed.substr(i) == "[]") return Worm{};
        for (; i < trimmed.size(); ++i) {
            const char c = trimmed[i];
            if (!std::isdigit(static_cast<unsigned char>(c)))
                syntax_error(i, std::string("compact worms take digits only, got '") + c + "'");
            entries.push_back(Ordinal::finite(static_cast<std::uint64_t>(c - '0')));
        }
        return Worm(std::move(entries));
    }
    Parser p(text);
    auto nodes = p.worm();
    p.finish();
    std::vector<Ordinal> entries;
    entries.reserve(nodes.size());
    for (const auto& n : nodes) entries.push_back(evaluate(n));
    return Worm(std::move(entries));
}

std::string print_ordinal(const Ordinal& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& t : x.terms()) {
        if (!out.empty()) out += " + ";
        if (t.is_one()) {
            out += std::to_string(t.count);
            continue;
        }
        out += term_text(t);
        if (t.count > 1) out += "*" + std::to_string(t.count);
    }
    return out;
}

std::string print_worm(const Worm& a, bool compact) {
    if (a.is_top()) return "[]";
    const Ordinal ten = Ordinal::finite(10);
    if (compact && std::all_of(a.entries().begin(), a.entries().end(),
                               [&](const Ordinal& e) { return e < ten; })) {
        std::string out;
        for (const auto& e : a.entries()) out += std::to_string(e.finite_value());
        return out;
    }
    std::string out = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > 0) out += ", ";
        out += print_ordinal(a[i]);
    }
    return out + "]";
}

} // namespace wormcalc
