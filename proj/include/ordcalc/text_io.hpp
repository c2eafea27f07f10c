#pragma once

// Concrete syntax for ordinals and spaces, canonical printing, and the JSON
// rendering of verdicts.
//
// Ordinal grammar (ASCII, whitespace allowed between tokens):
//
//   ordinal := sum
//   sum     := prod ("+" prod)*
//   prod    := pow ("*" pow)*
//   pow     := atom ("^" pow)?            right-associative
//   atom    := NAT | "w" | "w_" NAT | "w_[" ordinal "]" | "(" ordinal ")"
//
// Spaces: C(ord) | C(ord, l_P) | K(C(ord, l_P), C(ord, l_Q)), where P and Q
// are decimal numbers or fractions such as 2, 1.5 or 3/2.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ordcalc/classifier.hpp"
#include "ordcalc/expr.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span, std::vector<std::string> expected);

  SourceSpan span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

OrdinalExpr parse_ordinal(std::string_view text);
SpaceExpr parse_space(std::string_view text);

enum class PrintStyle { Ascii, Unicode };

/// Canonical rendering: "w^2*4 + 1", "w_1*w", "w_[w]". Only the ASCII form
/// is guaranteed to parse back.
std::string print_normal(const Ordinal& x, PrintStyle style = PrintStyle::Ascii);
std::string print_cardinal(const CardinalRank& c, PrintStyle style = PrintStyle::Ascii);
std::string print_exponent(const Exponent& p);
std::string print_space(const SpaceExpr& space, PrintStyle style = PrintStyle::Ascii);
std::string print_axiom_tag(const AxiomTag& tag);

}  // namespace ordcalc
