#pragma once

// Raw syntax trees of ordinal expressions and their evaluation to normal form.

#include <string>
#include <vector>

#include "ordcalc/ordinal.hpp"

namespace ordcalc {

/// Byte offsets [start, end) into a source string.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class OrdinalExpr {
 public:
  enum class Kind { Natural, Omega, Aleph, Add, Mul, Pow };

  static OrdinalExpr natural(Natural n, SourceSpan span = {});
  static OrdinalExpr omega(SourceSpan span = {});
  static OrdinalExpr aleph(OrdinalExpr index, SourceSpan span = {});
  static OrdinalExpr add(OrdinalExpr lhs, OrdinalExpr rhs, SourceSpan span = {});
  static OrdinalExpr mul(OrdinalExpr lhs, OrdinalExpr rhs, SourceSpan span = {});
  static OrdinalExpr pow(OrdinalExpr base, OrdinalExpr exponent, SourceSpan span = {});

  Kind kind() const { return kind_; }
  const Natural& value() const { return value_; }
  /// One operand for Aleph, two for the binary operators, none otherwise.
  const std::vector<OrdinalExpr>& operands() const { return operands_; }
  SourceSpan span() const { return span_; }

  /// Structural equality; spans are ignored.
  friend bool operator==(const OrdinalExpr& a, const OrdinalExpr& b);

 private:
  OrdinalExpr(Kind kind, SourceSpan span) : kind_(kind), span_(span) {}

  Kind kind_;
  Natural value_;
  std::vector<OrdinalExpr> operands_;
  SourceSpan span_;
};

/// Evaluates an expression tree to its unique normal form.
Ordinal normalize(const OrdinalExpr& expr);

/// A tree that denotes x built only from its terms; normalize(to_expr(x)) == x.
OrdinalExpr to_expr(const Ordinal& x);

/// Prefix rendering of a tree, e.g. "Add(Mul(Pow(w, w), 2), w)".
std::string describe(const OrdinalExpr& expr);

}  // namespace ordcalc
