#pragma once

#include <random>
#include <string>
#include <string_view>

#include "ordcalc/expr.hpp"
#include "ordcalc/ordinal.hpp"
#include "ordcalc/text_io.hpp"

namespace ordcalc::testing {

inline Ordinal O(std::string_view text) { return normalize(parse_ordinal(text)); }
inline std::string S(const Ordinal& x) { return print_normal(x); }

/// Random expression tree of the given depth over the leaves 0..3, w, w_1,
/// w_2 and w_w. Exponents are drawn one level shallower and kept small so
/// that most samples stay within the engine's resource limits.
class ExprSampler {
 public:
  explicit ExprSampler(std::uint64_t seed) : rng_(seed) {}

  OrdinalExpr expr(int depth) {
    if (depth <= 0 || pick(3) == 0) return leaf();
    switch (pick(3)) {
      case 0: return OrdinalExpr::add(expr(depth - 1), expr(depth - 1));
      case 1: return OrdinalExpr::mul(expr(depth - 1), expr(depth - 1));
      default: return OrdinalExpr::pow(expr(depth - 1), expr(depth - 2));
    }
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }

  OrdinalExpr leaf() {
    switch (pick(8)) {
      case 0: return OrdinalExpr::natural(pick(4));
      case 1:
      case 2: return OrdinalExpr::natural(1 + pick(3));
      case 3:
      case 4: return OrdinalExpr::omega();
      case 5: return OrdinalExpr::aleph(OrdinalExpr::natural(1));
      case 6: return OrdinalExpr::aleph(OrdinalExpr::natural(2));
      default: return OrdinalExpr::aleph(OrdinalExpr::omega());
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace ordcalc::testing
