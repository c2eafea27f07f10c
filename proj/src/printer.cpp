#include <sstream>

#include "ordcalc/text_io.hpp"

namespace ordcalc {

namespace {

std::string digits(const Natural& n) {
  std::ostringstream out;
  out << n;
  return out.str();
}

const char* const kSubscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
const char* const kSuperscripts[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string mapped_digits(const Natural& n, const char* const* table) {
  std::string out;
  for (char c : digits(n)) out += table[c - '0'];
  return out;
}

class Printer {
 public:
  explicit Printer(PrintStyle style) : unicode_(style == PrintStyle::Unicode) {}

  std::string ordinal(const Ordinal& x) const {
    if (x.is_zero()) return "0";
    if (x.is_atom()) return atom(x.atom_index());
    std::string out;
    for (const Term& t : x.sum_terms()) {
      if (!out.empty()) out += " + ";
      out += term(t);
    }
    return out;
  }

  std::string atom(const Ordinal& index) const {
    if (index.is_finite()) {
      const Natural n = index.to_natural();
      return unicode_ ? "ω" + mapped_digits(n, kSubscripts) : "w_" + digits(n);
    }
    return (unicode_ ? "ω_[" : "w_[") + ordinal(index) + "]";
  }

 private:
  std::string omega() const { return unicode_ ? "ω" : "w"; }
  std::string times() const { return unicode_ ? "·" : "*"; }

  std::string term(const Term& t) const {
    if (t.exponent.is_zero()) return digits(t.coefficient);
    std::string base = omega_power(t.exponent);
    if (t.coefficient == 1) return base;
    return base + times() + digits(t.coefficient);
  }

  std::string raised(std::string base, const Natural& k) const {
    if (k == 1) return base;
    if (unicode_) return base + mapped_digits(k, kSuperscripts);
    return base + "^" + digits(k);
  }

  // w^e: leading summands of e of the form w_a*k are written as factors w_a^k.
  std::string omega_power(const Ordinal& e) const {
    std::vector<std::string> factors;
    const std::vector<Term> terms = e.terms();
    std::size_t i = 0;
    for (; i < terms.size() && terms[i].exponent.is_atom(); ++i)
      factors.push_back(raised(atom(terms[i].exponent.atom_index()), terms[i].coefficient));
    if (i < terms.size()) {
      const Ordinal rest = Ordinal::from_sorted_terms({terms.begin() + static_cast<std::ptrdiff_t>(i), terms.end()});
      if (rest == Ordinal::finite(1)) {
        factors.push_back(omega());
      } else if (rest.is_finite()) {
        factors.push_back(raised(omega(), rest.to_natural()));
      } else {
        const std::string text = ordinal(rest);
        const bool single = rest == Ordinal::omega();
        factors.push_back(omega() + "^" + (single ? text : "(" + text + ")"));
      }
    }
    std::string out;
    for (const auto& f : factors) out += (out.empty() ? "" : times()) + f;
    return out;
  }

  bool unicode_;
};

}  // namespace

std::string print_normal(const Ordinal& x, PrintStyle style) { return Printer(style).ordinal(x); }

std::string print_cardinal(const CardinalRank& c, PrintStyle style) {
  if (c.is_finite()) return digits(c.count());
  const Ordinal& index = c.aleph_index();
  const bool unicode = style == PrintStyle::Unicode;
  if (index.is_finite()) {
    const Natural n = index.to_natural();
    return unicode ? "ℵ" + mapped_digits(n, kSubscripts) : "aleph_" + digits(n);
  }
  return (unicode ? "ℵ_[" : "aleph_[") + print_normal(index, style) + "]";
}

std::string print_exponent(const Exponent& p) {
  const Natural num = boost::multiprecision::numerator(p);
  const Natural den = boost::multiprecision::denominator(p);
  if (den == 1) return digits(num);
  return digits(num) + "/" + digits(den);
}

std::string print_space(const SpaceExpr& space, PrintStyle style) {
  auto c = [&](const Ordinal& xi) { return "C(" + print_normal(xi, style) + ")"; };
  auto cp = [&](const Ordinal& xi, const Exponent& p) {
    return "C(" + print_normal(xi, style) + ", l_" + print_exponent(p) + ")";
  };
  return std::visit(
      [&](const auto& s) -> std::string {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ScalarSpace>) {
          return c(s.xi);
        } else if constexpr (std::is_same_v<S, VectorSpace>) {
          return cp(s.xi, s.p);
        } else {
          return "K(" + cp(s.lambda, s.p) + ", " + cp(s.xi, s.q) + ")";
        }
      },
      space);
}

std::string print_axiom_tag(const AxiomTag& tag) {
  return "NoRVMBelow(" + print_cardinal(CardinalRank::aleph(tag.aleph_index)) + ")";
}

}  // namespace ordcalc
