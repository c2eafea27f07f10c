#include "ordcalc/classifier.hpp"

#include <algorithm>

namespace ordcalc {

namespace {

const Ordinal& one() {
  static const Ordinal v = Ordinal::finite(1);
  return v;
}

const Ordinal& omega() {
  static const Ordinal v = Ordinal::omega();
  return v;
}

const Ordinal& omega_to_omega() {
  static const Ordinal v = Ordinal::omega_power(Ordinal::omega());
  return v;
}

bool is_uncountable_regular(const Ordinal& initial) {
  return !initial.is_finite() && initial != omega() && is_regular(initial);
}

// Rules a decision may fire. Labels are stable identifiers; citations state
// the rule in words.
namespace rule {

const TraceStep kScalarFinite{"scalar.finite", "finite-dimensional C(xi) spaces are isomorphic iff xi = eta"};
const TraceStep kScalarCardinality{"scalar.cardinality", "C(xi) ~ C(eta) implies |xi| = |eta|"};
const TraceStep kScalarPower{"scalar.omega-power-criterion",
                             "initial ordinal omega or singular, or uncountable regular alpha with alpha^2 <= xi: "
                             "for xi <= eta, C(xi) ~ C(eta) iff eta < xi^omega"};
const TraceStep kScalarSplit{"scalar.regular-window.split",
                             "alpha uncountable regular, alpha <= xi < alpha^2 <= eta: C(xi) and C(eta) are not isomorphic"};
const TraceStep kScalarQuotients{"scalar.regular-window.quotients",
                                 "alpha uncountable regular, xi, eta in [alpha, alpha^2]: C(xi) ~ C(eta) iff the "
                                 "quotients xi = alpha*xi' + delta, eta = alpha*eta' + gamma have |xi'| = |eta'|"};

const TraceStep kVectorScope{"vector.scope", "C(xi, X) is classified for X in class F with X ~ X + X"};
const TraceStep kVectorFinite{"vector.finite", "C(n, X) = X^n for finite n; only infinite xi, eta are classified"};
const TraceStep kVectorCardinality{"vector.cardinality", "C(xi, X) ~ C(eta, X) implies |xi| = |eta|"};
const TraceStep kVectorPower{"vector.omega-power-criterion",
                             "alpha singular, or uncountable regular with alpha^2 <= xi: C(xi, X) ~ C(eta, X) iff "
                             "eta < xi^omega"};
const TraceStep kVectorCountable{"vector.countable",
                                 "alpha = omega, X not isomorphic to c_0(X): C(xi, X) ~ C(eta, X) iff C(xi) ~ C(eta), "
                                 "i.e. eta < xi^omega"};
const TraceStep kVectorCountableCollapse{"vector.countable.c0-collapse",
                                         "alpha = omega, X ~ c_0(X): C(xi, X) ~ C(eta, X) iff gamma_min(xi) = "
                                         "gamma_min(eta), every xi < omega^omega giving X itself"};
const TraceStep kVectorSplit{"vector.regular-window.split",
                             "alpha uncountable regular, alpha <= xi < alpha^2 <= eta: C(xi, X) and C(eta, X) are not "
                             "isomorphic"};
const TraceStep kVectorCountableQuotients{"vector.regular-window.countable-quotients",
                                          "alpha uncountable regular, xi, eta in [alpha, alpha^2], |xi'| |eta'| <= "
                                          "aleph_0: C(xi, X) ~ C(eta, X) iff c_0(J, X) ~ c_0(I, X) with |J| = |xi'|, "
                                          "|I| = |eta'|"};
const TraceStep kVectorUncountableQuotients{"vector.regular-window.uncountable-quotients",
                                            "alpha uncountable regular, xi, eta in [alpha, alpha^2], a quotient is "
                                            "uncountable: C(xi, X) ~ C(eta, X) iff |xi'| = |eta'| > aleph_0"};

const TraceStep kPsiTrivial{"psi.trivial", "xi finite, or lambda finite and xi < omega^omega: psi(lambda, xi) = 1"};
const TraceStep kPsiWindowInfinite{"psi.regular-window.infinite-lambda",
                                   "lambda >= omega, xi_0 uncountable regular, xi <= xi_0^2, xi = xi_0*xi' + delta: "
                                   "psi = xi_0*xi'_0 if xi' >= omega, psi = xi_0 if xi' < omega"};
const TraceStep kPsiWindowFiniteLiteral{"psi.regular-window.finite-lambda",
                                        "lambda < omega, xi_0 uncountable regular, xi <= xi_0^2, xi = xi_0*xi' + "
                                        "delta: psi = xi_0*xi'_0 if xi' > omega, psi = xi_0 if xi' <= omega"};
const TraceStep kPsiWindowFiniteRepaired{"psi.regular-window.finite-lambda",
                                         "lambda < omega, xi_0 uncountable regular, xi <= xi_0^2, xi = xi_0*xi' + "
                                         "delta: psi = xi_0*xi'_0 if xi' is uncountable, psi = xi_0 if xi' is "
                                         "countable (C(omega, K(l_p, l_q)) ~ K(l_p, l_q) collapses every countable "
                                         "quotient)"};
const TraceStep kPsiAboveSquare{"psi.above-square",
                                "xi_0 uncountable regular, xi_0^2 < xi: psi = max(xi_0^2, gamma) with gamma least such "
                                "that gamma^omega > xi"};
const TraceStep kPsiGammaMin{"psi.gamma-min",
                             "xi_0 = omega and lambda >= omega, or xi_0 singular: psi is the least ordinal with "
                             "psi^omega > xi"};
const TraceStep kPsiGammaMinFinite{"psi.gamma-min.finite-lambda",
                                   "lambda < omega, xi_0 = omega, xi >= omega^omega: psi is the least ordinal with "
                                   "psi^omega > xi (reduces to the scalar classification of C(xi))"};

const TraceStep kKRegime{"K.exponent-regime", "classification covers 1 < p <= q < infinity with equal exponents"};
const TraceStep kKLambdaClass{"K.lambda-class",
                              "K(C(lambda, l_p), C(xi, l_q)) ~ K(C(mu, l_p), C(eta, l_q)) implies lambda_0 = mu_0"};
const TraceStep kKCanonical{"K.canonical-pair",
                            "K(C(lambda, l_p), C(xi, l_q)) ~ K(C(lambda_0, l_p), C(psi(lambda, xi), l_q)); distinct "
                            "canonical pairs give non-isomorphic spaces when |lambda| < m_r"};
const TraceStep kAbstractFiniteXi{"K-abstract.finite-xi",
                                  "lambda infinite: K(C(lambda, l_p), C(xi, l_q)) with xi finite is isomorphic to "
                                  "K(C(lambda, l_p), l_q), which contains no copy of the space with xi infinite"};
const TraceStep kAbstractPromote{"K-abstract.finite-lambda.promote",
                                 "lambda, mu finite: a finite xi may be replaced by omega, since K(l_p, l_q) ~ "
                                 "K(l_p, c_0(l_q))"};
const TraceStep kAbstractScalar{"K-abstract.scalar", "criterion: C(xi) ~ C(eta)"};
const TraceStep kAbstractMultiplesFinite{"K-abstract.alpha-multiples",
                                         "criterion: alpha uncountable regular and 1 <= m, n < omega with C(xi) ~ "
                                         "C(alpha*m), C(eta) ~ C(alpha*n)"};
const TraceStep kAbstractMultiplesOmega{"K-abstract.alpha-multiples",
                                        "criterion: alpha uncountable regular and 1 <= m, n <= omega with C(xi) ~ "
                                        "C(alpha*m), C(eta) ~ C(alpha*n)"};
const TraceStep kAbstractFails{"K-abstract.criterion-fails",
                               "neither C(xi) ~ C(eta) nor a common alpha-multiple representation"};
const TraceStep kAxiomsWithheld{"axioms.withheld",
                                "separation requires |lambda| < m_r (least real-valued measurable cardinal), which "
                                "is not assumed"};

}  // namespace rule

Verdict decided(bool iso, std::vector<TraceStep> trace) {
  Verdict v;
  v.outcome = iso ? Outcome::Isomorphic : Outcome::NotIsomorphic;
  v.trace = std::move(trace);
  return v;
}

Verdict out_of_scope(std::string reason, std::vector<TraceStep> trace) {
  Verdict v;
  v.outcome = Outcome::OutOfScope;
  v.trace = std::move(trace);
  v.reason = std::move(reason);
  return v;
}

void require_nonzero(const Ordinal& x, const char* what) {
  if (x.is_zero()) throw DomainError(std::string(what) + " must be a nonzero ordinal");
}

// eta < xi^omega, for xi <= eta.
bool below_omega_power(const Ordinal& lo, const Ordinal& hi) { return hi < pow(lo, omega()); }

Ordinal window_quotient(const Ordinal& x, const Ordinal& alpha) { return divide(x, alpha).quotient; }

void apply_axioms(Verdict& v, const AxiomContext& ctx) {
  if (v.outcome != Outcome::NotIsomorphic || v.assumptions.empty() || ctx.assume_no_rvm) return;
  v.outcome = Outcome::Undecided;
  v.reason = "non-isomorphism depends on the absence of real-valued measurable cardinals up to |lambda|";
  v.assumptions.clear();
  v.trace.push_back(rule::kAxiomsWithheld);
}

// Returns a verdict when the exponents leave the supported regime.
std::optional<Verdict> check_exponents(const Exponent& p, const Exponent& q) {
  if (p <= 1 || q <= 1) throw DomainError("exponents p and q must exceed 1");
  if (p > q) return out_of_scope("p > q is not covered (only 1 < p <= q < infinity)", {rule::kKRegime});
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Isomorphic:
      return "Isomorphic";
    case Outcome::NotIsomorphic:
      return "NotIsomorphic";
    case Outcome::Undecided:
      return "Undecided";
    case Outcome::OutOfScope:
      return "OutOfScope";
  }
  return "?";
}

std::string to_string(PsiMode mode) { return mode == PsiMode::Repaired ? "repaired" : "literal"; }

XDescriptor XDescriptor::lp() { return XDescriptor{true, false, true, true}; }

XDescriptor XDescriptor::compact_operator_fibre(const Ordinal& lambda) {
  return XDescriptor{true, lambda.is_finite(), true, true};
}

// ---------------------------------------------------------------------------
// Scalar and vector-valued C(xi)

Verdict iso_scalar(const Ordinal& xi, const Ordinal& eta) {
  require_nonzero(xi, "xi");
  require_nonzero(eta, "eta");
  if (xi.is_finite() || eta.is_finite()) {
    return out_of_scope("finite-dimensional C(xi): isomorphic exactly when the dimensions agree",
                        {rule::kScalarFinite});
  }
  const Ordinal& lo = std::min(xi, eta);
  const Ordinal& hi = std::max(xi, eta);
  if (cardinality(lo) != cardinality(hi)) return decided(false, {rule::kScalarCardinality});

  const Ordinal alpha = initial_ordinal(lo);
  if (!is_uncountable_regular(alpha)) return decided(below_omega_power(lo, hi), {rule::kScalarPower});
  const Ordinal square = mul(alpha, alpha);
  if (lo >= square) return decided(below_omega_power(lo, hi), {rule::kScalarPower});
  if (hi >= square) return decided(false, {rule::kScalarSplit});
  return decided(cardinality(window_quotient(lo, alpha)) == cardinality(window_quotient(hi, alpha)),
                 {rule::kScalarQuotients});
}

bool c0_sum_iso(const CardinalRank& m, const CardinalRank& n, const XDescriptor& x) {
  if (!m.is_countable() || !n.is_countable())
    throw DomainError("c0_sum_iso is defined for index sets of size at most aleph_0");
  if (!x.square_iso) throw DomainError("c0_sum_iso requires X ~ X + X");
  if (m == n) return true;
  if (m.is_finite() && n.is_finite()) return true;
  return x.c0_self_iso;
}

Verdict iso_vector(const Ordinal& xi, const Ordinal& eta, const XDescriptor& x) {
  require_nonzero(xi, "xi");
  require_nonzero(eta, "eta");
  if (!x.in_class_F || !x.square_iso)
    return out_of_scope("X must be in class F and isomorphic to its square", {rule::kVectorScope});
  if (xi.is_finite() || eta.is_finite())
    return out_of_scope("finite xi or eta: C(n, X) = X^n is not classified here", {rule::kVectorFinite});

  const Ordinal& lo = std::min(xi, eta);
  const Ordinal& hi = std::max(xi, eta);
  if (cardinality(lo) != cardinality(hi)) return decided(false, {rule::kVectorCardinality});

  const Ordinal alpha = initial_ordinal(lo);
  if (alpha == omega()) {
    if (x.c0_self_iso) return decided(gamma_min(lo) == gamma_min(hi), {rule::kVectorCountableCollapse});
    return decided(below_omega_power(lo, hi), {rule::kVectorCountable});
  }
  if (!is_regular(alpha)) return decided(below_omega_power(lo, hi), {rule::kVectorPower});
  const Ordinal square = mul(alpha, alpha);
  if (lo >= square) return decided(below_omega_power(lo, hi), {rule::kVectorPower});
  if (hi >= square) return decided(false, {rule::kVectorSplit});

  const CardinalRank m = cardinality(window_quotient(lo, alpha));
  const CardinalRank n = cardinality(window_quotient(hi, alpha));
  if (m.is_countable() && n.is_countable()) return decided(c0_sum_iso(m, n, x), {rule::kVectorCountableQuotients});
  if (!m.is_countable() && !n.is_countable()) return decided(m == n, {rule::kVectorUncountableQuotients});
  return decided(false, {rule::kVectorUncountableQuotients});
}

// ---------------------------------------------------------------------------
// Canonical forms of K(C(lambda, l_p), C(xi, l_q))

PsiResult psi_explained(const Ordinal& lambda, const Ordinal& xi, const AxiomContext& ctx) {
  require_nonzero(lambda, "lambda");
  require_nonzero(xi, "xi");
  const bool finite_lambda = lambda.is_finite();
  if (xi.is_finite() || (finite_lambda && xi < omega_to_omega())) return {one(), rule::kPsiTrivial};

  const Ordinal xi0 = initial_ordinal(xi);
  if (is_uncountable_regular(xi0)) {
    const Ordinal square = mul(xi0, xi0);
    if (xi > square) return {std::max(square, gamma_min(xi)), rule::kPsiAboveSquare};
    const Ordinal quotient = window_quotient(xi, xi0);
    const Ordinal widened = mul(xi0, initial_ordinal(quotient));
    if (!finite_lambda) return {quotient >= omega() ? widened : xi0, rule::kPsiWindowInfinite};
    if (ctx.psi_mode == PsiMode::Literal) return {quotient > omega() ? widened : xi0, rule::kPsiWindowFiniteLiteral};
    return {cardinality(quotient).is_countable() ? xi0 : widened, rule::kPsiWindowFiniteRepaired};
  }
  if (xi0 == omega() && finite_lambda) return {gamma_min(xi), rule::kPsiGammaMinFinite};
  return {gamma_min(xi), rule::kPsiGammaMin};
}

Ordinal psi(const Ordinal& lambda, const Ordinal& xi, const AxiomContext& ctx) {
  return psi_explained(lambda, xi, ctx).value;
}

CanonicalPair canonical_pair(const Ordinal& lambda, const Ordinal& xi, const AxiomContext& ctx) {
  return CanonicalPair{initial_ordinal(lambda), psi(lambda, xi, ctx)};
}

Verdict iso_K(const Ordinal& lambda, const Ordinal& xi, const Ordinal& mu, const Ordinal& eta, const Exponent& p,
              const Exponent& q, const AxiomContext& ctx) {
  if (auto v = check_exponents(p, q)) return *v;
  require_nonzero(mu, "mu");
  require_nonzero(eta, "eta");
  const PsiResult left = psi_explained(lambda, xi, ctx);
  const PsiResult right = psi_explained(mu, eta, ctx);
  const CanonicalPair lhs{initial_ordinal(lambda), left.value};
  const CanonicalPair rhs{initial_ordinal(mu), right.value};

  Verdict v;
  v.trace = {left.step, right.step};
  v.canonical = std::make_pair(lhs, rhs);
  if (lhs.lambda0 != rhs.lambda0) {
    v.outcome = Outcome::NotIsomorphic;
    v.trace.push_back(rule::kKLambdaClass);
    return v;
  }
  v.trace.push_back(rule::kKCanonical);
  if (lhs.psi == rhs.psi) {
    v.outcome = Outcome::Isomorphic;
    return v;
  }
  v.outcome = Outcome::NotIsomorphic;
  if (!lhs.lambda0.is_finite()) v.assumptions.push_back(AxiomTag{cardinality(lambda).aleph_index()});
  apply_axioms(v, ctx);
  return v;
}

namespace {

// m with C(x) ~ C(alpha*m), 1 <= m < omega (or m <= omega when allowed).
std::optional<Ordinal> alpha_multiple(const Ordinal& x, const Ordinal& alpha, bool allow_omega) {
  const Ordinal quotient = divide(x, alpha).quotient;
  if (quotient.is_zero()) return std::nullopt;
  Ordinal m = quotient;
  if (!quotient.is_finite()) {
    if (!allow_omega) return std::nullopt;
    m = omega();
  }
  if (iso_scalar(x, mul(alpha, m)).outcome != Outcome::Isomorphic) return std::nullopt;
  return m;
}

}  // namespace

Verdict iso_K_abstract(const Ordinal& lambda, const Ordinal& xi, const Ordinal& mu, const Ordinal& eta,
                       const Exponent& p, const Exponent& q, const AxiomContext& ctx) {
  if (auto v = check_exponents(p, q)) return *v;
  for (const auto* x : {&lambda, &xi, &mu, &eta}) require_nonzero(*x, "K-space ordinal");

  const Ordinal lambda0 = initial_ordinal(lambda);
  if (lambda0 != initial_ordinal(mu)) return decided(false, {rule::kKLambdaClass});

  const bool finite_lambda = lambda0.is_finite();
  std::vector<TraceStep> trace;
  Ordinal left = xi;
  Ordinal right = eta;

  auto not_iso = [&](std::vector<TraceStep> steps) {
    Verdict v = decided(false, std::move(steps));
    if (!finite_lambda) v.assumptions.push_back(AxiomTag{cardinality(lambda).aleph_index()});
    apply_axioms(v, ctx);
    return v;
  };

  if (finite_lambda) {
    if (left.is_finite() || right.is_finite()) trace.push_back(rule::kAbstractPromote);
    if (left.is_finite()) left = omega();
    if (right.is_finite()) right = omega();
  } else if (left.is_finite() || right.is_finite()) {
    trace.push_back(rule::kAbstractFiniteXi);
    if (left.is_finite() && right.is_finite()) return decided(true, std::move(trace));
    return not_iso(std::move(trace));
  }

  const Verdict scalar = iso_scalar(left, right);
  trace.insert(trace.end(), scalar.trace.begin(), scalar.trace.end());
  if (scalar.outcome == Outcome::Isomorphic) {
    trace.push_back(rule::kAbstractScalar);
    return decided(true, std::move(trace));
  }

  const Ordinal alpha = initial_ordinal(left);
  if (is_uncountable_regular(alpha) && initial_ordinal(right) == alpha &&
      alpha_multiple(left, alpha, finite_lambda) && alpha_multiple(right, alpha, finite_lambda)) {
    trace.push_back(finite_lambda ? rule::kAbstractMultiplesOmega : rule::kAbstractMultiplesFinite);
    return decided(true, std::move(trace));
  }
  trace.push_back(rule::kAbstractFails);
  return not_iso(std::move(trace));
}

// ---------------------------------------------------------------------------

Verdict classify(const SpaceExpr& a, const SpaceExpr& b, const AxiomContext& ctx) {
  if (const auto* s = std::get_if<ScalarSpace>(&a)) {
    if (const auto* t = std::get_if<ScalarSpace>(&b)) return iso_scalar(s->xi, t->xi);
  }
  if (const auto* s = std::get_if<VectorSpace>(&a)) {
    if (const auto* t = std::get_if<VectorSpace>(&b)) {
      if (s->p <= 1 || t->p <= 1) throw DomainError("exponent p must exceed 1");
      if (s->p != t->p) return out_of_scope("C(xi, l_p) and C(eta, l_r) with p != r are not classified", {});
      return iso_vector(s->xi, t->xi, XDescriptor::lp());
    }
  }
  if (const auto* s = std::get_if<CompactOperatorSpace>(&a)) {
    if (const auto* t = std::get_if<CompactOperatorSpace>(&b)) {
      if (auto v = check_exponents(s->p, s->q)) return *v;
      if (auto v = check_exponents(t->p, t->q)) return *v;
      if (s->p != t->p || s->q != t->q)
        return out_of_scope("spaces of compact operators with different exponent pairs are not classified",
                            {rule::kKRegime});
      return iso_K(s->lambda, s->xi, t->lambda, t->xi, s->p, s->q, ctx);
    }
  }
  return out_of_scope("spaces of different shapes are not classified", {});
}

}  // namespace ordcalc
