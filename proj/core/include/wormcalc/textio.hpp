#ifndef WORMCALC_TEXTIO_HPP
#define WORMCALC_TEXTIO_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wormcalc/ordinal.hpp"
#include "wormcalc/worm.hpp"

namespace wormcalc {

// Grammar (whitespace between tokens is ignored):
//
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' factor]
//   base   := natural | 'w' | 'phi' '(' expr ',' expr ')' | '(' expr ')'
//   worm   := '[' [expr (',' expr)*] ']'
//
// 'w' is omega. '^' is only defined for an omega base or between naturals.

class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, unsupported_exponent };

    ParseError(Kind kind, std::size_t position, const std::string& message);

    Kind kind() const noexcept { return kind_; }
    /// Zero-based character offset into the input.
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

struct ExprNode {
    enum class Kind { natural, omega, phi, sum, product, power };

    Kind kind = Kind::natural;
    std::uint64_t value = 0;        // natural only
    std::size_t position = 0;       // offset of the node's first token
    std::vector<ExprNode> children; // phi: (index, arg); sum/product/power: operands
};

ExprNode parse_expression(std::string_view text);
Ordinal evaluate(const ExprNode& node);

Ordinal parse_ordinal(std::string_view text);
/// Bracketed form, or with `compact` one decimal digit per entry ("2103").
Worm parse_worm(std::string_view text, bool compact = false);

std::string print_ordinal(const Ordinal& x);
/// "[e1, e2, ...]". With `compact`, worms whose entries are all below 10
/// print as a digit string instead.
std::string print_worm(const Worm& a, bool compact = false);

} // namespace wormcalc

#endif
