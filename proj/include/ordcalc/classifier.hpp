#pragma once

// Isomorphic classification of C(xi), C(xi, X) and of spaces of compact
// operators K(C(lambda, l_p), C(xi, l_q)), 1 < p <= q < infinity.
//
// Every decision returns a Verdict carrying the ordered list of rules it
// applied and the set-theoretic assumptions it consumed. The only assumption
// ever recorded is "no real-valued measurable cardinal at or below |lambda|",
// which the K-space criterion needs to separate spaces with infinite lambda.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ordcalc/ordinal.hpp"

namespace ordcalc {

/// A sequence-space exponent p (as in l_p); exact rational.
using Exponent = boost::multiprecision::cpp_rational;

struct ScalarSpace {  // C(xi)
  Ordinal xi;
};
struct VectorSpace {  // C(xi, l_p)
  Ordinal xi;
  Exponent p;
};
struct CompactOperatorSpace {  // K(C(lambda, l_p), C(xi, l_q))
  Ordinal lambda;
  Exponent p;
  Ordinal xi;
  Exponent q;
};

using SpaceExpr = std::variant<ScalarSpace, VectorSpace, CompactOperatorSpace>;

/// What the classification of C(xi, X) needs to know about X.
struct XDescriptor {
  bool square_iso = false;   // X ~ X + X
  bool c0_self_iso = false;  // X ~ c_0(X)
  bool in_class_F = false;   // Mazur property, no copy of c_0(Gamma) with |Gamma| = aleph_1
  bool dual_AP = false;      // X* has the approximation property

  /// l_p with 1 < p < infinity.
  static XDescriptor lp();
  /// The coefficient space of K(C(lambda, l_p), C(xi, l_q)) viewed as
  /// C(xi, X): X ~ c_0(X) exactly when lambda is finite.
  static XDescriptor compact_operator_fibre(const Ordinal& lambda);
};

enum class Outcome { Isomorphic, NotIsomorphic, Undecided, OutOfScope };

enum class PsiMode { Repaired, Literal };

struct AxiomContext {
  bool assume_no_rvm = true;
  PsiMode psi_mode = PsiMode::Repaired;
};

/// "No real-valued measurable cardinal <= aleph_index", i.e. |lambda| < m_r.
struct AxiomTag {
  Ordinal aleph_index;

  friend bool operator==(const AxiomTag&, const AxiomTag&) = default;
};

struct TraceStep {
  std::string label;
  std::string citation;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct CanonicalPair {
  Ordinal lambda0;
  Ordinal psi;

  friend bool operator==(const CanonicalPair&, const CanonicalPair&) = default;
};

struct Verdict {
  Outcome outcome = Outcome::Undecided;
  std::vector<TraceStep> trace;
  std::vector<AxiomTag> assumptions;
  std::optional<std::pair<CanonicalPair, CanonicalPair>> canonical;
  std::string reason;  // set for OutOfScope and Undecided
};

std::string to_string(Outcome outcome);
std::string to_string(PsiMode mode);

/// C(xi) ~ C(eta)? Zero arguments throw DomainError; finite ones are
/// OutOfScope (finite-dimensional spaces are classified by dimension).
Verdict iso_scalar(const Ordinal& xi, const Ordinal& eta);

/// c_0(J, X) ~ c_0(I, X) for |J| = m, |I| = n, both at most aleph_0.
bool c0_sum_iso(const CardinalRank& m, const CardinalRank& n, const XDescriptor& x);

/// C(xi, X) ~ C(eta, X)? Requires X in class F and X ~ X + X; otherwise
/// the verdict is OutOfScope.
Verdict iso_vector(const Ordinal& xi, const Ordinal& eta, const XDescriptor& x);

struct PsiResult {
  Ordinal value;
  TraceStep step;
};

/// The canonical ordinal index psi(lambda, xi) with its deciding rule.
PsiResult psi_explained(const Ordinal& lambda, const Ordinal& xi, const AxiomContext& ctx);
Ordinal psi(const Ordinal& lambda, const Ordinal& xi, const AxiomContext& ctx = {});

CanonicalPair canonical_pair(const Ordinal& lambda, const Ordinal& xi, const AxiomContext& ctx = {});

/// K(C(lambda, l_p), C(xi, l_q)) ~ K(C(mu, l_p), C(eta, l_q)), decided by
/// comparing canonical pairs.
Verdict iso_K(const Ordinal& lambda, const Ordinal& xi, const Ordinal& mu, const Ordinal& eta,
              const Exponent& p, const Exponent& q, const AxiomContext& ctx = {});

/// The same question decided through the scalar classification of C(xi)
/// and C(eta) plus the alpha*m collapse; independent of psi.
Verdict iso_K_abstract(const Ordinal& lambda, const Ordinal& xi, const Ordinal& mu, const Ordinal& eta,
                       const Exponent& p, const Exponent& q, const AxiomContext& ctx = {});

/// Dispatches on the shapes of both spaces.
Verdict classify(const SpaceExpr& a, const SpaceExpr& b, const AxiomContext& ctx = {});

}  // namespace ordcalc
