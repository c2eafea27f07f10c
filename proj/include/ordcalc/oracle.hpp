#pragma once

// Reference implementations used only to cross-check the core engine.
//
// NaiveOrdinal is a hereditary base-omega tree over the countable fragment.
// It keeps its terms as an unordered multiset and shares no code with
// Ordinal: ordering, merging and all three operations are re-derived from
// the textbook recursive definitions.

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordcalc/ordinal.hpp"

namespace ordcalc::oracle {

/// Raised when an operand or result leaves the range the oracle handles.
class FragmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NaiveTerm;

struct NaiveOrdinal {
  std::vector<NaiveTerm> terms;  // value is the sum in decreasing exponent order

  static NaiveOrdinal natural(std::uint64_t n);
  static NaiveOrdinal omega_to(NaiveOrdinal exponent, std::uint64_t coefficient = 1);
};

struct NaiveTerm {
  std::shared_ptr<const NaiveOrdinal> exponent;  // never null; shared, never mutated
  std::uint64_t coefficient;
};

std::strong_ordering naive_compare(const NaiveOrdinal& a, const NaiveOrdinal& b);
inline bool naive_equal(const NaiveOrdinal& a, const NaiveOrdinal& b) { return naive_compare(a, b) == 0; }

NaiveOrdinal naive_add(const NaiveOrdinal& a, const NaiveOrdinal& b);
NaiveOrdinal naive_mul(const NaiveOrdinal& a, const NaiveOrdinal& b);
NaiveOrdinal naive_pow(const NaiveOrdinal& a, const NaiveOrdinal& b);

std::string naive_to_string(const NaiveOrdinal& x);

/// Structural conversion; atoms and coefficients beyond 64 bits throw FragmentError.
NaiveOrdinal to_naive(const Ordinal& x);

struct GridSpec {
  int depth = 0;                 // exponent nesting depth
  unsigned max_coeff = 1;        // coefficients range over 1..max_coeff
  unsigned max_terms = 0;        // terms per sum; 0 means unbounded
  unsigned exponent_max_terms = 0;  // terms in an exponent drawn from the previous level; 0 means unbounded
  unsigned exponent_max_coeff = 0;  // coefficients inside such an exponent; 0 means max_coeff
  std::vector<Ordinal> atoms;    // extra exponents at every level
};

/// G(0) = {0}; G(d) holds every sum of at most max_terms terms w^e*c with
/// strictly decreasing e taken from {0, 1} U atoms U G(d-1). Sorted, no duplicates.
std::vector<Ordinal> enumerate_grid(const GridSpec& spec);

struct NamedGrid {
  std::string name;
  GridSpec spec;
};

/// The versioned grids used by the self-test and acceptance suites.
const std::vector<NamedGrid>& named_grids();
/// Throws std::invalid_argument for unknown names.
const NamedGrid& named_grid(const std::string& name);

enum class Suite { Arith, GammaMin, Division };

std::string to_string(Suite suite);
/// Accepts "arith", "gamma_min", "division"; throws std::invalid_argument.
Suite suite_from_string(const std::string& name);

struct Mismatch {
  std::string operation;
  std::vector<std::string> inputs;
  std::string expected;
  std::string actual;

  friend auto operator<=>(const Mismatch&, const Mismatch&) = default;
};

struct Report {
  Suite suite = Suite::Arith;
  std::string grid;
  std::size_t grid_size = 0;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // cases outside the oracle fragment
  std::vector<Mismatch> mismatches;  // sorted

  bool ok() const { return mismatches.empty(); }
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

Report differential_check(Suite suite, const NamedGrid& grid);

}  // namespace ordcalc::oracle
