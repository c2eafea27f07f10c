#pragma once

// Exact arithmetic on ordinals written over the naturals, omega and the
// initial ordinals omega_a (a >= 1).
//
// Every Ordinal is held in normal form:
//   * Atom(a)  -- the initial ordinal omega_a, a >= 1;
//   * Sum      -- omega^e1*c1 + ... + omega^ek*ck with e1 > ... > ek, ci >= 1.
// A Sum consisting of the single term omega^Atom(a)*1 never occurs; it is
// stored as Atom(a), since every uncountable initial ordinal is an epsilon
// number. Because the representation is unique, equality is structural.

#include <compare>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordcalc {

using Natural = boost::multiprecision::cpp_int;

/// Raised when an operation is applied outside its domain
/// (division by zero, gamma_min below omega, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an exact result would be too large to materialize,
/// e.g. 3^(10^30) or (omega + 1)^(10^9).
class ResourceLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct Term;

namespace detail {
struct Node;
}

class Ordinal {
 public:
  /// Zero.
  Ordinal() = default;

  static Ordinal finite(const Natural& n);
  static Ordinal omega();
  /// The initial ordinal omega_index. aleph(0) is omega itself.
  static Ordinal aleph(const Ordinal& index);
  /// omega^exponent * coefficient, with the atom collapse applied.
  static Ordinal omega_power(const Ordinal& exponent, const Natural& coefficient = 1);
  /// Builds a Sum from terms that must already satisfy the normal-form
  /// invariants; throws std::invalid_argument otherwise.
  static Ordinal from_terms(std::vector<Term> terms);
  /// As from_terms, without validation. The caller guarantees strictly
  /// decreasing exponents and positive coefficients.
  static Ordinal from_sorted_terms(std::vector<Term> terms);

  bool is_zero() const { return node_ == nullptr; }
  bool is_atom() const;
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;
  /// Whether any atom occurs anywhere in the hereditary structure.
  bool is_countable() const;

  /// Index a of Atom(a). Only valid when is_atom().
  const Ordinal& atom_index() const;
  /// Stored terms of a Sum (empty for zero and for atoms).
  std::span<const Term> sum_terms() const;
  /// Terms with Atom(a) viewed as the single term omega^Atom(a)*1.
  std::vector<Term> terms() const;
  /// Leading exponent; zero for finite values. Atom(a) is its own exponent.
  Ordinal leading_exponent() const;
  Natural leading_coefficient() const;
  /// Value of a finite ordinal. Only valid when is_finite().
  Natural to_natural() const;
  /// The trailing natural number n in x = y + n with y a limit or zero.
  Natural finite_part() const;

  /// Structural size, the number of nodes and terms in the hereditary tree.
  std::size_t size() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  explicit Ordinal(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::Node> node_;
};

struct Term {
  Ordinal exponent;
  Natural coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

namespace detail {
struct Node {
  bool atom = false;
  Ordinal index;            // atoms only
  std::vector<Term> terms;  // sums only
  std::size_t size = 1;
};
}  // namespace detail

/// Cardinality of an ordinal: a natural number or aleph_index.
class CardinalRank {
 public:
  static CardinalRank finite(Natural n) { return CardinalRank(Finite{std::move(n)}); }
  static CardinalRank aleph(Ordinal index) { return CardinalRank(Aleph{std::move(index)}); }

  bool is_finite() const { return std::holds_alternative<Finite>(value_); }
  bool is_countable() const;
  const Natural& count() const { return std::get<Finite>(value_).n; }
  const Ordinal& aleph_index() const { return std::get<Aleph>(value_).index; }

  friend bool operator==(const CardinalRank& a, const CardinalRank& b);
  friend std::strong_ordering operator<=>(const CardinalRank& a, const CardinalRank& b);

 private:
  struct Finite {
    Natural n;
  };
  struct Aleph {
    Ordinal index;
  };
  explicit CardinalRank(std::variant<Finite, Aleph> v) : value_(std::move(v)) {}

  std::variant<Finite, Aleph> value_;
};

// ---------------------------------------------------------------------------
// Arithmetic. All operations are pure.

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
/// pow(0, 0) = 1. Throws ResourceLimitError when the exact result is
/// impractically large.
Ordinal pow(const Ordinal& base, const Ordinal& exponent);

/// The unique x with a + x = b. Requires a <= b.
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);

struct Division {
  Ordinal quotient;
  Ordinal remainder;
};

/// xi = divisor * quotient + remainder, remainder < divisor.
Division divide(const Ordinal& xi, const Ordinal& divisor);

/// Least gamma with gamma^omega > xi. Requires xi >= omega.
Ordinal gamma_min(const Ordinal& xi);

CardinalRank cardinality(const Ordinal& xi);

/// 1 for finite xi (including 0), otherwise the least ordinal of the same
/// cardinality.
Ordinal initial_ordinal(const Ordinal& xi);

Ordinal cofinality(const Ordinal& xi);

/// Requires xi infinite.
bool is_regular(const Ordinal& xi);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }
inline Ordinal operator*(const Ordinal& a, const Ordinal& b) { return mul(a, b); }

}  // namespace ordcalc
