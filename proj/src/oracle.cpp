#include "ordcalc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "ordcalc/text_io.hpp"

namespace ordcalc::oracle {

namespace {

constexpr std::uint64_t kMaxRepeat = 1u << 16;

using Terms = std::vector<NaiveTerm>;

std::uint64_t checked_sum(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) throw FragmentError("oracle coefficient overflow");
  return a + b;
}

std::strong_ordering compare_canon(const Terms& a, const Terms& b);

const Terms& ex(const NaiveTerm& t) { return t.exponent->terms; }

NaiveTerm make_term(Terms exponent, std::uint64_t coefficient) {
  return {std::make_shared<const NaiveOrdinal>(NaiveOrdinal{std::move(exponent)}), coefficient};
}

// Sorted by decreasing exponent, equal exponents merged, exponents canonical.
Terms canon(const Terms& x) {
  Terms out;
  out.reserve(x.size());
  for (const auto& t : x) {
    if (t.coefficient == 0) continue;
    out.push_back(make_term(canon(ex(t)), t.coefficient));
  }
  std::stable_sort(out.begin(), out.end(), [](const NaiveTerm& l, const NaiveTerm& r) {
    return compare_canon(ex(l), ex(r)) > 0;
  });
  Terms merged;
  for (auto& t : out) {
    if (!merged.empty() && compare_canon(ex(merged.back()), ex(t)) == 0)
      merged.back().coefficient = checked_sum(merged.back().coefficient, t.coefficient);
    else
      merged.push_back(std::move(t));
  }
  return merged;
}

std::strong_ordering compare_canon(const Terms& a, const Terms& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i].exponent != b[i].exponent)
      if (auto c = compare_canon(ex(a[i]), ex(b[i])); c != 0) return c;
    if (auto c = a[i].coefficient <=> b[i].coefficient; c != 0) return c;
  }
  return a.size() <=> b.size();
}

bool is_canon(const Terms& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].coefficient == 0 || !is_canon(ex(x[i]))) return false;
    if (i > 0 && compare_canon(ex(x[i - 1]), ex(x[i])) <= 0) return false;
  }
  return true;
}

// Canonical view of x, copying only when x is not already canonical.
const Terms& view(const Terms& x, Terms& storage) {
  if (is_canon(x)) return x;
  storage = canon(x);
  return storage;
}

bool is_finite(const Terms& c) { return c.empty() || (c.size() == 1 && ex(c[0]).empty()); }

std::uint64_t finite_value(const Terms& c) { return c.empty() ? 0 : c[0].coefficient; }

Terms add_canon(const Terms& a, const Terms& b) {
  if (b.empty()) return a;
  const Terms& e = ex(b[0]);
  Terms out;
  std::uint64_t carried = 0;
  for (const auto& t : a) {
    const auto c = compare_canon(ex(t), e);
    if (c > 0) out.push_back(t);
    else if (c == 0) carried = t.coefficient;
  }
  out.push_back({b[0].exponent, checked_sum(b[0].coefficient, carried)});
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

Terms repeat_add(const Terms& a, std::uint64_t k) {
  if (k > kMaxRepeat) throw FragmentError("oracle repetition bound exceeded");
  Terms out;
  for (std::uint64_t i = 0; i < k; ++i) out = add_canon(out, a);
  return out;
}

Terms mul_canon(const Terms& a, const Terms& b) {
  if (a.empty() || b.empty()) return {};
  Terms out;
  for (const auto& t : b) {
    Terms piece;
    if (ex(t).empty()) {
      piece = repeat_add(a, t.coefficient);
    } else {
      // a * w^f = w^(e1 + f) for f > 0.
      Terms power{make_term(add_canon(ex(a[0]), ex(t)), 1)};
      piece = repeat_add(power, t.coefficient);
    }
    out = add_canon(out, piece);
  }
  return out;
}

Terms repeat_mul(const Terms& a, std::uint64_t k) {
  if (k > 64) throw FragmentError("oracle repetition bound exceeded");
  Terms out{make_term({}, 1)};
  for (std::uint64_t i = 0; i < k; ++i) out = mul_canon(out, a);
  return out;
}

Terms single(Terms exponent) { return Terms{make_term(std::move(exponent), 1)}; }

// a^(w^f) for f > 0.
Terms pow_omega_power(const Terms& a, const Terms& f) {
  if (is_finite(a)) {
    // n^(w^f) = w^(w^g) with g = -1 + f.
    Terms g = f;
    if (is_finite(f)) g = finite_value(f) == 1 ? Terms{} : Terms{make_term({}, finite_value(f) - 1)};
    return single(single(std::move(g)));
  }
  return single(mul_canon(ex(a[0]), single(f)));
}

Terms pow_canon(const Terms& a, const Terms& b) {
  if (b.empty()) return {make_term({}, 1)};
  if (a.empty()) return {};
  if (is_finite(a) && finite_value(a) == 1) return a;
  Terms out{make_term({}, 1)};
  for (const auto& t : b) {
    Terms base = ex(t).empty() ? a : pow_omega_power(a, ex(t));
    out = mul_canon(out, repeat_mul(base, t.coefficient));
  }
  return out;
}

void write(std::ostream& out, const Terms& c) {
  if (c.empty()) {
    out << '0';
    return;
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out << " + ";
    const Terms& e = ex(c[i]);
    if (e.empty()) {
      out << c[i].coefficient;
      continue;
    }
    out << "w^(";
    write(out, e);
    out << ')';
    if (c[i].coefficient != 1) out << '*' << c[i].coefficient;
  }
}

}  // namespace

NaiveOrdinal NaiveOrdinal::natural(std::uint64_t n) {
  if (n == 0) return {};
  return NaiveOrdinal{{make_term({}, n)}};
}

NaiveOrdinal NaiveOrdinal::omega_to(NaiveOrdinal exponent, std::uint64_t coefficient) {
  return NaiveOrdinal{{make_term(std::move(exponent.terms), coefficient)}};
}

std::strong_ordering naive_compare(const NaiveOrdinal& a, const NaiveOrdinal& b) {
  Terms sa, sb;
  return compare_canon(view(a.terms, sa), view(b.terms, sb));
}

NaiveOrdinal naive_add(const NaiveOrdinal& a, const NaiveOrdinal& b) {
  Terms sa, sb;
  return {add_canon(view(a.terms, sa), view(b.terms, sb))};
}

NaiveOrdinal naive_mul(const NaiveOrdinal& a, const NaiveOrdinal& b) {
  Terms sa, sb;
  return {mul_canon(view(a.terms, sa), view(b.terms, sb))};
}

NaiveOrdinal naive_pow(const NaiveOrdinal& a, const NaiveOrdinal& b) {
  Terms sa, sb;
  return {pow_canon(view(a.terms, sa), view(b.terms, sb))};
}

std::string naive_to_string(const NaiveOrdinal& x) {
  std::ostringstream out;
  Terms storage;
  write(out, view(x.terms, storage));
  return out.str();
}

NaiveOrdinal to_naive(const Ordinal& x) {
  if (x.is_atom()) throw FragmentError("oracle covers countable ordinals only");
  NaiveOrdinal out;
  for (const Term& t : x.sum_terms()) {
    if (t.coefficient > std::numeric_limits<std::uint64_t>::max()) throw FragmentError("coefficient exceeds 64 bits");
    out.terms.push_back(make_term(to_naive(t.exponent).terms, t.coefficient.convert_to<std::uint64_t>()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grids

std::vector<Ordinal> enumerate_grid(const GridSpec& spec) {
  std::vector<Ordinal> level{Ordinal()};
  auto sort_unique = [](std::vector<Ordinal>& v, bool descending) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (descending) std::reverse(v.begin(), v.end());
  };
  for (int d = 1; d <= spec.depth; ++d) {
    std::vector<Ordinal> exponents{Ordinal(), Ordinal::finite(1)};
    exponents.insert(exponents.end(), spec.atoms.begin(), spec.atoms.end());
    for (const auto& x : level) {
      const auto terms = x.terms();
      if (spec.exponent_max_terms != 0 && terms.size() > spec.exponent_max_terms) continue;
      if (spec.exponent_max_coeff != 0 &&
          std::any_of(terms.begin(), terms.end(), [&](const Term& t) { return t.coefficient > spec.exponent_max_coeff; }))
        continue;
      exponents.push_back(x);
    }
    sort_unique(exponents, true);

    std::vector<Ordinal> next;
    std::vector<Term> current;
    const std::size_t limit = spec.max_terms == 0 ? exponents.size() : spec.max_terms;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
      next.push_back(Ordinal::from_terms(current));
      if (current.size() == limit) return;
      for (std::size_t i = from; i < exponents.size(); ++i) {
        for (unsigned c = 1; c <= spec.max_coeff; ++c) {
          current.push_back(Term{exponents[i], c});
          extend(i + 1);
          current.pop_back();
        }
      }
    };
    extend(0);
    sort_unique(next, false);
    level = std::move(next);
  }
  return level;
}

const std::vector<NamedGrid>& named_grids() {
  static const std::vector<NamedGrid> grids = [] {
    const std::vector<Ordinal> atoms{Ordinal::aleph(Ordinal::finite(1)), Ordinal::aleph(Ordinal::finite(2)),
                                     Ordinal::aleph(Ordinal::omega())};
    return std::vector<NamedGrid>{
        {"small.v1", GridSpec{2, 2, 2, 1, 0, {}}},
        {"countable-d3c3.v1", GridSpec{3, 3, 2, 1, 0, {}}},
        {"atoms.v1", GridSpec{2, 2, 2, 1, 0, atoms}},
    };
  }();
  return grids;
}

const NamedGrid& named_grid(const std::string& name) {
  for (const auto& g : named_grids())
    if (g.name == name) return g;
  throw std::invalid_argument("unknown grid '" + name + "'");
}

// ---------------------------------------------------------------------------
// Differential suites

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Arith: return "arith";
    case Suite::GammaMin: return "gamma_min";
    case Suite::Division: return "division";
  }
  return "?";
}

Suite suite_from_string(const std::string& name) {
  for (Suite s : {Suite::Arith, Suite::GammaMin, Suite::Division})
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown suite '" + name + "'");
}

namespace {

std::string show(const Ordinal& x) { return print_normal(x); }

// Allocation-free equality between a canonical naive value and a core value.
bool matches(const Terms& n, const Ordinal& x) {
  if (x.is_atom()) return false;
  const auto terms = x.sum_terms();
  if (terms.size() != n.size()) return false;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (terms[i].coefficient != n[i].coefficient) return false;
    if (!matches(ex(n[i]), terms[i].exponent)) return false;
  }
  return true;
}

void check_arith(const std::vector<Ordinal>& grid, Report& report) {
  std::vector<NaiveOrdinal> naive;
  naive.reserve(grid.size());
  for (const auto& x : grid) naive.push_back(to_naive(x));

  using CoreOp = Ordinal (*)(const Ordinal&, const Ordinal&);
  using NaiveOp = NaiveOrdinal (*)(const NaiveOrdinal&, const NaiveOrdinal&);
  const struct {
    const char* name;
    CoreOp core;
    NaiveOp ref;
  } ops[] = {{"add", &add, &naive_add}, {"mul", &mul, &naive_mul}, {"pow", &pow, &naive_pow}};

  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = 0; j < grid.size(); ++j) {
      for (const auto& op : ops) {
        NaiveOrdinal expected;
        Ordinal actual;
        try {
          expected = op.ref(naive[i], naive[j]);
          actual = op.core(grid[i], grid[j]);
        } catch (const FragmentError&) {
          ++report.skipped;
          continue;
        } catch (const ResourceLimitError&) {
          ++report.skipped;
          continue;
        }
        ++report.checked;
        Terms storage;
        if (!matches(view(expected.terms, storage), actual))
          report.mismatches.push_back({op.name, {show(grid[i]), show(grid[j])}, naive_to_string(expected),
                                       naive_to_string(to_naive(actual))});
      }
    }
  }
}

void check_gamma_min(const std::vector<Ordinal>& grid, Report& report) {
  const Ordinal omega = Ordinal::omega();
  std::vector<Ordinal> powers;
  powers.reserve(grid.size());
  for (const auto& g : grid) powers.push_back(pow(g, omega));

  for (const auto& xi : grid) {
    if (xi < omega) continue;
    ++report.checked;
    const Ordinal g = gamma_min(xi);
    if (!(pow(g, omega) > xi)) {
      report.mismatches.push_back({"gamma_min.witness", {show(xi)}, "g^w > xi", "g = " + show(g)});
      continue;
    }
    for (std::size_t k = 0; k < grid.size() && grid[k] < g; ++k) {
      if (powers[k] > xi) {
        report.mismatches.push_back(
            {"gamma_min.minimality", {show(xi)}, "no grid value below " + show(g), "gamma = " + show(grid[k])});
        break;
      }
    }
  }
}

void check_division(const std::vector<Ordinal>& grid, Report& report) {
  for (const auto& xi : grid) {
    for (const auto& alpha : grid) {
      if (alpha.is_zero()) continue;
      ++report.checked;
      const Division d = divide(xi, alpha);
      const std::vector<std::string> inputs{show(xi), show(alpha)};
      if (add(mul(alpha, d.quotient), d.remainder) != xi)
        report.mismatches.push_back({"divide.recomposition", inputs, show(xi),
                                     show(alpha) + " * (" + show(d.quotient) + ") + " + show(d.remainder)});
      else if (!(d.remainder < alpha))
        report.mismatches.push_back({"divide.remainder", inputs, "r < " + show(alpha), "r = " + show(d.remainder)});
      else if (!(mul(alpha, add(d.quotient, Ordinal::finite(1))) > xi))
        report.mismatches.push_back({"divide.maximality", inputs, "alpha*(q+1) > xi", "q = " + show(d.quotient)});
    }
  }
}

}  // namespace

Report differential_check(Suite suite, const NamedGrid& grid) {
  Report report;
  report.suite = suite;
  report.grid = grid.name;
  const std::vector<Ordinal> values = enumerate_grid(grid.spec);
  report.grid_size = values.size();
  switch (suite) {
    case Suite::Arith: {
      std::vector<Ordinal> countable;
      for (const auto& x : values)
        if (x.is_countable()) countable.push_back(x);
      report.skipped += values.size() - countable.size();
      check_arith(countable, report);
      break;
    }
    case Suite::GammaMin: check_gamma_min(values, report); break;
    case Suite::Division: check_division(values, report); break;
  }
  std::sort(report.mismatches.begin(), report.mismatches.end());
  return report;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "suite " << to_string(suite) << " on " << grid << ": " << grid_size << " values, " << checked
      << " checks, " << skipped << " skipped, " << mismatches.size() << " mismatches\n";
  for (const auto& m : mismatches) {
    out << "  " << m.operation << '(';
    for (std::size_t i = 0; i < m.inputs.size(); ++i) out << (i ? ", " : "") << m.inputs[i];
    out << "): expected " << m.expected << ", got " << m.actual << '\n';
  }
  return out.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = to_string(suite);
  j["grid"] = grid;
  j["grid_size"] = grid_size;
  j["checked"] = checked;
  j["skipped"] = skipped;
  auto list = nlohmann::ordered_json::array();
  for (const auto& m : mismatches)
    list.push_back({{"operation", m.operation}, {"inputs", m.inputs}, {"expected", m.expected}, {"actual", m.actual}});
  j["mismatches"] = std::move(list);
  return j;
}

}  // namespace ordcalc::oracle
