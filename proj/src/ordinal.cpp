#include "ordcalc/ordinal.hpp"

#include <algorithm>
#include <utility>

namespace ordcalc {

namespace {

// Largest result (in bits) accepted for a finite power n^k.
constexpr unsigned kMaxFiniteBits = 1u << 20;
// Largest number of terms accepted when raising a base with a finite part
// to a finite power.
constexpr std::size_t kMaxPowerTerms = 100000;

template <class F>
decltype(auto) with_terms(const Ordinal& x, F&& f) {
  if (x.is_atom()) {
    const Term single{x, 1};
    return f(std::span<const Term>(&single, 1));
  }
  return f(x.sum_terms());
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Ordinal Ordinal::finite(const Natural& n) {
  if (n < 0) throw DomainError("ordinals are non-negative");
  if (n == 0) return Ordinal();
  return from_terms({Term{Ordinal(), n}});
}

Ordinal Ordinal::omega() {
  static const Ordinal w = from_terms({Term{finite(1), 1}});
  return w;
}

Ordinal Ordinal::aleph(const Ordinal& index) {
  if (index.is_zero()) return omega();
  auto node = std::make_shared<detail::Node>();
  node->atom = true;
  node->index = index;
  node->size = 1 + index.size();
  return Ordinal(std::move(node));
}

Ordinal Ordinal::omega_power(const Ordinal& exponent, const Natural& coefficient) {
  if (coefficient < 0) throw DomainError("negative coefficient");
  if (coefficient == 0) return Ordinal();
  return from_terms({Term{exponent, coefficient}});
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) throw std::invalid_argument("term coefficient must be positive");
    if (i > 0 && compare(terms[i - 1].exponent, terms[i].exponent) != std::strong_ordering::greater)
      throw std::invalid_argument("term exponents must be strictly decreasing");
  }
  return from_sorted_terms(std::move(terms));
}

Ordinal Ordinal::from_sorted_terms(std::vector<Term> terms) {
  if (terms.empty()) return Ordinal();
  if (terms.size() == 1 && terms[0].coefficient == 1 && terms[0].exponent.is_atom())
    return terms[0].exponent;
  auto node = std::make_shared<detail::Node>();
  std::size_t size = 1;
  for (const auto& t : terms) size += 1 + t.exponent.size();
  node->size = size;
  node->terms = std::move(terms);
  return Ordinal(std::move(node));
}

namespace {

Ordinal make_sum(std::vector<Term> terms) { return Ordinal::from_sorted_terms(std::move(terms)); }

Ordinal make_sum(std::span<const Term> terms) { return make_sum(std::vector<Term>(terms.begin(), terms.end())); }

}  // namespace

// ---------------------------------------------------------------------------
// Observers

bool Ordinal::is_atom() const { return node_ && node_->atom; }

bool Ordinal::is_finite() const {
  return !node_ || (!node_->atom && node_->terms.size() == 1 && node_->terms[0].exponent.is_zero());
}

bool Ordinal::is_successor() const {
  return node_ && !node_->atom && node_->terms.back().exponent.is_zero();
}

bool Ordinal::is_limit() const { return node_ && !is_successor(); }

bool Ordinal::is_countable() const {
  if (!node_) return true;
  if (node_->atom) return false;
  return std::all_of(node_->terms.begin(), node_->terms.end(),
                     [](const Term& t) { return t.exponent.is_countable(); });
}

const Ordinal& Ordinal::atom_index() const {
  if (!is_atom()) throw std::logic_error("atom_index on a non-atom");
  return node_->index;
}

std::span<const Term> Ordinal::sum_terms() const {
  if (!node_ || node_->atom) return {};
  return node_->terms;
}

std::vector<Term> Ordinal::terms() const {
  if (is_atom()) return {Term{*this, 1}};
  auto s = sum_terms();
  return {s.begin(), s.end()};
}

Ordinal Ordinal::leading_exponent() const {
  if (!node_) return Ordinal();
  if (node_->atom) return *this;
  return node_->terms.front().exponent;
}

Natural Ordinal::leading_coefficient() const {
  if (!node_) return 0;
  if (node_->atom) return 1;
  return node_->terms.front().coefficient;
}

Natural Ordinal::to_natural() const {
  if (!is_finite()) throw DomainError("not a finite ordinal");
  return node_ ? node_->terms[0].coefficient : Natural(0);
}

Natural Ordinal::finite_part() const {
  return is_successor() ? node_->terms.back().coefficient : Natural(0);
}

std::size_t Ordinal::size() const { return node_ ? node_->size : 1; }

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->atom != b.node_->atom || a.node_->size != b.node_->size) return false;
  if (a.node_->atom) return a.node_->index == b.node_->index;
  return a.node_->terms == b.node_->terms;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return compare(a, b); }

bool CardinalRank::is_countable() const { return is_finite() || aleph_index().is_zero(); }

bool operator==(const CardinalRank& a, const CardinalRank& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const CardinalRank& a, const CardinalRank& b) {
  if (a.is_finite() != b.is_finite()) return a.is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_finite()) {
    if (a.count() == b.count()) return std::strong_ordering::equal;
    return a.count() < b.count() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return compare(a.aleph_index(), b.aleph_index());
}

// ---------------------------------------------------------------------------
// Comparison
//
// Lexicographic on term sequences. An atom is viewed as the single term
// omega^atom*1; atom-vs-atom compares indices. Every recursive call is on
// arguments whose combined structural size is strictly smaller, so the
// recursion terminates even though an atom is its own leading exponent.

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  using so = std::strong_ordering;
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return so::equal;
    return a.is_zero() ? so::less : so::greater;
  }
  if (a.is_atom() && b.is_atom()) return compare(a.atom_index(), b.atom_index());
  return with_terms(a, [&](std::span<const Term> ta) {
    return with_terms(b, [&](std::span<const Term> tb) {
      const std::size_t n = std::min(ta.size(), tb.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare(ta[i].exponent, tb[i].exponent); c != so::equal) return c;
        if (ta[i].coefficient != tb[i].coefficient)
          return ta[i].coefficient < tb[i].coefficient ? so::less : so::greater;
      }
      return ta.size() <=> tb.size();
    });
  });
}

// ---------------------------------------------------------------------------
// Arithmetic

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal lead_b = b.leading_exponent();
  if (compare(a.leading_exponent(), lead_b) < 0) return b;
  return with_terms(a, [&](std::span<const Term> ta) {
    return with_terms(b, [&](std::span<const Term> tb) {
      std::vector<Term> out;
      out.reserve(ta.size() + tb.size());
      std::size_t j = 0;
      for (const auto& t : ta) {
        auto c = compare(t.exponent, lead_b);
        if (c > 0) {
          out.push_back(t);
        } else {
          if (c == 0) {
            out.push_back(Term{lead_b, t.coefficient + tb[0].coefficient});
            j = 1;
          }
          break;
        }
      }
      out.insert(out.end(), tb.begin() + static_cast<std::ptrdiff_t>(j), tb.end());
      return make_sum(std::move(out));
    });
  });
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  const Ordinal lead_a = a.leading_exponent();
  const Natural coeff_a = a.leading_coefficient();
  return with_terms(a, [&](std::span<const Term> ta) {
    return with_terms(b, [&](std::span<const Term> tb) {
      std::vector<Term> out;
      for (const auto& t : tb) {
        if (t.exponent.is_zero()) {
          // a * n: only the leading coefficient of a is scaled.
          out.push_back(Term{lead_a, coeff_a * t.coefficient});
          out.insert(out.end(), ta.begin() + 1, ta.end());
        } else {
          out.push_back(Term{add(lead_a, t.exponent), t.coefficient});
        }
      }
      return make_sum(std::move(out));
    });
  });
}

namespace {

Natural finite_power(const Natural& base, const Natural& exponent) {
  if (exponent == 0) return 1;
  if (base <= 1) return base;
  const auto bits = static_cast<unsigned long long>(boost::multiprecision::msb(base)) + 1;
  if (exponent > kMaxFiniteBits / bits)
    throw ResourceLimitError("finite power exceeds the supported size");
  return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

// a^k for infinite a and finite k >= 1.
Ordinal power_by_natural(const Ordinal& a, const Natural& k) {
  if (k == 1) return a;
  const Ordinal lead = a.leading_exponent();
  if (a.finite_part() == 0) {
    // a*a = omega^lead * a when a has no finite part, hence
    // a^k = omega^(lead*(k-1)) * a.
    return mul(Ordinal::omega_power(mul(lead, Ordinal::finite(k - 1))), a);
  }
  const auto infinite_terms = a.terms().size() - 1;
  if (infinite_terms > 0 && k > Natural(kMaxPowerTerms / infinite_terms))
    throw ResourceLimitError("power has too many terms to materialize");
  Ordinal result = Ordinal::finite(1);
  Ordinal square = a;
  Natural e = k;
  while (e > 0) {
    if ((e & 1) != 0) result = mul(result, square);
    e >>= 1;
    if (e > 0) square = mul(square, square);
  }
  return result;
}

}  // namespace

Ordinal pow(const Ordinal& base, const Ordinal& exponent) {
  if (exponent.is_zero()) return Ordinal::finite(1);
  if (base.is_zero()) return Ordinal();
  if (base == Ordinal::finite(1)) return base;

  const Natural k = exponent.finite_part();
  std::vector<Term> infinite_part;
  for (const auto& t : exponent.terms())
    if (!t.exponent.is_zero()) infinite_part.push_back(t);

  if (base.is_finite()) {
    // n^(omega^f * c) = omega^(omega^f' * c), f' = -1 + f.
    Ordinal tower;
    for (const auto& t : infinite_part) {
      Ordinal f = t.exponent;
      if (f.is_finite()) f = Ordinal::finite(f.to_natural() - 1);
      tower = add(tower, Ordinal::omega_power(f, t.coefficient));
    }
    const Ordinal tail = Ordinal::finite(finite_power(base.to_natural(), k));
    if (tower.is_zero()) return tail;
    return mul(Ordinal::omega_power(tower), tail);
  }

  // a^B = omega^(lead(a) * B) for B a nonzero multiple of omega.
  Ordinal head = Ordinal::finite(1);
  if (!infinite_part.empty())
    head = Ordinal::omega_power(mul(base.leading_exponent(), make_sum(std::move(infinite_part))));
  if (k == 0) return head;
  return mul(head, power_by_natural(base, k));
}

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  const auto order = compare(a, b);
  if (order > 0) throw DomainError("left_subtract requires a <= b");
  if (order == 0) return Ordinal();
  if (a.is_zero()) return b;
  return with_terms(a, [&](std::span<const Term> ta) {
    return with_terms(b, [&](std::span<const Term> tb) {
      for (std::size_t i = 0; i < tb.size(); ++i) {
        if (i == ta.size()) return make_sum(tb.subspan(i));
        if (auto c = compare(ta[i].exponent, tb[i].exponent); c != 0) return make_sum(tb.subspan(i));
        if (ta[i].coefficient != tb[i].coefficient) {
          std::vector<Term> out{Term{tb[i].exponent, tb[i].coefficient - ta[i].coefficient}};
          out.insert(out.end(), tb.begin() + static_cast<std::ptrdiff_t>(i) + 1, tb.end());
          return make_sum(std::move(out));
        }
      }
      // Unreachable when a < b.
      throw std::logic_error("left_subtract: inconsistent comparison");
    });
  });
}

Division divide(const Ordinal& xi, const Ordinal& divisor) {
  if (divisor.is_zero()) throw DomainError("division by zero");
  const Ordinal lead = divisor.leading_exponent();
  const Natural coeff = divisor.leading_coefficient();
  const auto div_terms = divisor.terms();
  const std::span<const Term> div_tail(div_terms.data() + 1, div_terms.size() - 1);

  std::vector<Term> quotient;
  const auto xi_terms = xi.terms();
  std::size_t i = 0;
  // divisor * omega^f = omega^(lead + f) for f >= 1.
  for (; i < xi_terms.size() && compare(xi_terms[i].exponent, lead) > 0; ++i)
    quotient.push_back(Term{left_subtract(lead, xi_terms[i].exponent), xi_terms[i].coefficient});

  const std::span<const Term> low(xi_terms.data() + i, xi_terms.size() - i);
  const Ordinal low_value = make_sum(low);
  Natural n = 0;
  if (!low.empty() && low[0].exponent == lead) {
    n = low[0].coefficient / coeff;
    if (n > 0 && n * coeff == low[0].coefficient &&
        compare(make_sum(div_tail), make_sum(low.subspan(1))) > 0)
      n -= 1;
  }
  Ordinal remainder = low_value;
  if (n > 0) {
    quotient.push_back(Term{Ordinal(), n});
    remainder = left_subtract(mul(divisor, Ordinal::finite(n)), low_value);
  }
  return Division{make_sum(std::move(quotient)), std::move(remainder)};
}

Ordinal gamma_min(const Ordinal& xi) {
  if (xi.is_finite()) throw DomainError("gamma_min requires xi >= omega");
  const Ordinal inner = xi.leading_exponent().leading_exponent();
  return Ordinal::omega_power(Ordinal::omega_power(inner));
}

// ---------------------------------------------------------------------------
// Cardinals and cofinality

namespace {

// Largest atom index occurring anywhere in x; zero when x is atom-free.
Ordinal max_atom_index(const Ordinal& x) {
  if (x.is_atom()) return std::max(x.atom_index(), max_atom_index(x.atom_index()));
  Ordinal best;
  for (const auto& t : x.sum_terms()) best = std::max(best, max_atom_index(t.exponent));
  return best;
}

}  // namespace

CardinalRank cardinality(const Ordinal& xi) {
  if (xi.is_finite()) return CardinalRank::finite(xi.to_natural());
  return CardinalRank::aleph(max_atom_index(xi));
}

Ordinal initial_ordinal(const Ordinal& xi) {
  if (xi.is_finite()) return Ordinal::finite(1);
  return Ordinal::aleph(cardinality(xi).aleph_index());
}

Ordinal cofinality(const Ordinal& xi) {
  if (xi.is_zero()) return Ordinal();
  if (xi.is_successor()) return Ordinal::finite(1);
  if (xi.is_atom()) {
    const Ordinal& index = xi.atom_index();
    return index.is_successor() ? xi : cofinality(index);
  }
  // cf(omega^e) for the last term: omega when e is a successor, cf(e) otherwise.
  const Ordinal& e = xi.sum_terms().back().exponent;
  return e.is_successor() ? Ordinal::omega() : cofinality(e);
}

bool is_regular(const Ordinal& xi) {
  if (xi.is_finite()) throw DomainError("regularity is defined for infinite ordinals only");
  return initial_ordinal(xi) == xi && cofinality(xi) == xi;
}

}  // namespace ordcalc
