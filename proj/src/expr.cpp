#include "ordcalc/expr.hpp"

#include <sstream>

namespace ordcalc {

OrdinalExpr OrdinalExpr::natural(Natural n, SourceSpan span) {
  OrdinalExpr e(Kind::Natural, span);
  e.value_ = std::move(n);
  return e;
}

OrdinalExpr OrdinalExpr::omega(SourceSpan span) { return OrdinalExpr(Kind::Omega, span); }

OrdinalExpr OrdinalExpr::aleph(OrdinalExpr index, SourceSpan span) {
  OrdinalExpr e(Kind::Aleph, span);
  e.operands_.push_back(std::move(index));
  return e;
}

OrdinalExpr OrdinalExpr::add(OrdinalExpr lhs, OrdinalExpr rhs, SourceSpan span) {
  OrdinalExpr e(Kind::Add, span);
  e.operands_ = {std::move(lhs), std::move(rhs)};
  return e;
}

OrdinalExpr OrdinalExpr::mul(OrdinalExpr lhs, OrdinalExpr rhs, SourceSpan span) {
  OrdinalExpr e(Kind::Mul, span);
  e.operands_ = {std::move(lhs), std::move(rhs)};
  return e;
}

OrdinalExpr OrdinalExpr::pow(OrdinalExpr base, OrdinalExpr exponent, SourceSpan span) {
  OrdinalExpr e(Kind::Pow, span);
  e.operands_ = {std::move(base), std::move(exponent)};
  return e;
}

bool operator==(const OrdinalExpr& a, const OrdinalExpr& b) {
  return a.kind_ == b.kind_ && a.value_ == b.value_ && a.operands_ == b.operands_;
}

Ordinal normalize(const OrdinalExpr& expr) {
  const auto& ops = expr.operands();
  switch (expr.kind()) {
    case OrdinalExpr::Kind::Natural:
      return Ordinal::finite(expr.value());
    case OrdinalExpr::Kind::Omega:
      return Ordinal::omega();
    case OrdinalExpr::Kind::Aleph:
      return Ordinal::aleph(normalize(ops[0]));
    case OrdinalExpr::Kind::Add:
      return add(normalize(ops[0]), normalize(ops[1]));
    case OrdinalExpr::Kind::Mul:
      return mul(normalize(ops[0]), normalize(ops[1]));
    case OrdinalExpr::Kind::Pow:
      return pow(normalize(ops[0]), normalize(ops[1]));
  }
  throw std::logic_error("normalize: unknown expression kind");
}

OrdinalExpr to_expr(const Ordinal& x) {
  if (x.is_atom()) return OrdinalExpr::aleph(to_expr(x.atom_index()));
  const auto terms = x.sum_terms();
  if (terms.empty()) return OrdinalExpr::natural(0);
  auto term_expr = [](const Term& t) {
    if (t.exponent.is_zero()) return OrdinalExpr::natural(t.coefficient);
    auto power = OrdinalExpr::pow(OrdinalExpr::omega(), to_expr(t.exponent));
    if (t.coefficient == 1) return power;
    return OrdinalExpr::mul(std::move(power), OrdinalExpr::natural(t.coefficient));
  };
  OrdinalExpr result = term_expr(terms[0]);
  for (std::size_t i = 1; i < terms.size(); ++i)
    result = OrdinalExpr::add(std::move(result), term_expr(terms[i]));
  return result;
}

namespace {

void describe_into(std::ostream& out, const OrdinalExpr& expr) {
  const auto& ops = expr.operands();
  switch (expr.kind()) {
    case OrdinalExpr::Kind::Natural:
      out << expr.value();
      return;
    case OrdinalExpr::Kind::Omega:
      out << 'w';
      return;
    case OrdinalExpr::Kind::Aleph:
      out << "Aleph(";
      describe_into(out, ops[0]);
      out << ')';
      return;
    case OrdinalExpr::Kind::Add:
      out << "Add(";
      break;
    case OrdinalExpr::Kind::Mul:
      out << "Mul(";
      break;
    case OrdinalExpr::Kind::Pow:
      out << "Pow(";
      break;
  }
  describe_into(out, ops[0]);
  out << ", ";
  describe_into(out, ops[1]);
  out << ')';
}

}  // namespace

std::string describe(const OrdinalExpr& expr) {
  std::ostringstream out;
  describe_into(out, expr);
  return out.str();
}

}  // namespace ordcalc
