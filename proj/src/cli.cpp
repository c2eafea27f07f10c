#include "ordcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ordcalc/classifier.hpp"
#include "ordcalc/json_output.hpp"
#include "ordcalc/oracle.hpp"
#include "ordcalc/text_io.hpp"

namespace ordcalc::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  bool explain = false;
  bool unicode = false;
  bool batch = false;
  AxiomContext ctx;
  std::string grid = "small.v1";
  std::string suite;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Command {
  const char* name;
  const char* help;
  std::size_t arity;
  const char* arg_names;
};

const Command kCommands[] = {
    {"norm", "Print the normal form of an ordinal expression", 1, "EXPR"},
    {"cmp", "Compare two ordinals (less, equal, greater)", 2, "A B"},
    {"calc", "Evaluate an expression and report its cardinality, cofinality and initial ordinal", 1, "EXPR"},
    {"card", "Print the cardinality of an ordinal", 1, "EXPR"},
    {"cof", "Print the cofinality of an ordinal", 1, "EXPR"},
    {"div", "Left division XI = ALPHA * q + r with r < ALPHA", 2, "XI ALPHA"},
    {"psi", "Canonical ordinal index psi(LAMBDA, XI)", 2, "LAMBDA XI"},
    {"classify", "Decide whether two space expressions are isomorphic", 2, "A B"},
    {"selftest", "Run the differential suites on a named grid", 0, ""},
};

const Command* find_command(const std::string& name) {
  for (const auto& c : kCommands)
    if (name == c.name) return &c;
  return nullptr;
}

class Query {
 public:
  Query(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int run(const std::string& name, const std::vector<std::string>& args) {
    const Command* cmd = find_command(name);
    if (cmd == nullptr) throw UsageError("unknown subcommand '" + name + "'");
    if (args.size() != cmd->arity)
      throw UsageError(name + " expects " + std::to_string(cmd->arity) + " argument(s): " + cmd->arg_names);
    if (name == "norm") return norm(args[0]);
    if (name == "cmp") return cmp(args[0], args[1]);
    if (name == "calc") return calc(args[0]);
    if (name == "card") return card(args[0]);
    if (name == "cof") return cof(args[0]);
    if (name == "div") return div(args[0], args[1]);
    if (name == "psi") return psi_cmd(args[0], args[1]);
    if (name == "classify") return classify_cmd(args[0], args[1]);
    return selftest();
  }

 private:
  PrintStyle style() const { return opt_.unicode ? PrintStyle::Unicode : PrintStyle::Ascii; }
  std::string show(const Ordinal& x) const { return print_normal(x, style()); }

  static Ordinal ordinal(const std::string& text) { return normalize(parse_ordinal(text)); }

  void emit(const json& j) { out_ << j.dump(opt_.batch ? -1 : 2) << '\n'; }

  void emit_lines(const std::vector<std::string>& lines) {
    if (opt_.batch) {
      for (std::size_t i = 0; i < lines.size(); ++i) out_ << (i ? " | " : "") << lines[i];
      out_ << '\n';
      return;
    }
    for (const auto& l : lines) out_ << l << '\n';
  }

  std::vector<std::string> context_lines() const {
    return {"psi_mode: " + to_string(opt_.ctx.psi_mode),
            std::string("assume_no_rvm: ") + (opt_.ctx.assume_no_rvm ? "true" : "false")};
  }

  int norm(const std::string& a) {
    const Ordinal x = ordinal(a);
    if (opt_.json) emit({{"normal", show(x)}});
    else emit_lines({show(x)});
    return kOk;
  }

  int cmp(const std::string& a, const std::string& b) {
    const auto c = compare(ordinal(a), ordinal(b));
    const std::string r = c < 0 ? "less" : c > 0 ? "greater" : "equal";
    if (opt_.json) emit({{"result", r}});
    else emit_lines({r});
    return kOk;
  }

  int calc(const std::string& a) {
    const Ordinal x = ordinal(a);
    const std::string value = show(x), card = print_cardinal(cardinality(x), style()),
                      cof = show(cofinality(x)), initial = show(initial_ordinal(x));
    if (opt_.json)
      emit({{"value", value}, {"cardinality", card}, {"cofinality", cof}, {"initial_ordinal", initial}});
    else
      emit_lines({value, "cardinality: " + card, "cofinality: " + cof, "initial ordinal: " + initial});
    return kOk;
  }

  int card(const std::string& a) {
    const std::string c = print_cardinal(cardinality(ordinal(a)), style());
    if (opt_.json) emit({{"cardinality", c}});
    else emit_lines({c});
    return kOk;
  }

  int cof(const std::string& a) {
    const std::string c = show(cofinality(ordinal(a)));
    if (opt_.json) emit({{"cofinality", c}});
    else emit_lines({c});
    return kOk;
  }

  int div(const std::string& a, const std::string& b) {
    const Division d = divide(ordinal(a), ordinal(b));
    if (opt_.json) emit({{"quotient", show(d.quotient)}, {"remainder", show(d.remainder)}});
    else emit_lines({"quotient: " + show(d.quotient), "remainder: " + show(d.remainder)});
    return kOk;
  }

  int psi_cmd(const std::string& l, const std::string& x) {
    const Ordinal lambda = ordinal(l), xi = ordinal(x);
    if (lambda.is_zero() || xi.is_zero()) throw DomainError("psi needs lambda >= 1 and xi >= 1");
    const PsiResult r = psi_explained(lambda, xi, opt_.ctx);
    if (opt_.json) {
      emit({{"psi", show(r.value)},
            {"lambda0", show(initial_ordinal(lambda))},
            {"trace", json::array({{{"case", r.step.label}, {"citation", r.step.citation}}})},
            {"psi_mode", to_string(opt_.ctx.psi_mode)},
            {"assume_no_rvm", opt_.ctx.assume_no_rvm}});
      return kOk;
    }
    std::vector<std::string> lines{show(r.value)};
    if (opt_.explain) {
      lines.push_back("case " + r.step.label + ": " + r.step.citation);
      for (auto& c : context_lines()) lines.push_back(c);
    }
    emit_lines(lines);
    return kOk;
  }

  int classify_cmd(const std::string& a, const std::string& b) {
    const SpaceExpr left = parse_space(a), right = parse_space(b);
    const Verdict v = classify(left, right, opt_.ctx);
    if (opt_.json) {
      emit(verdict_to_json(v, opt_.ctx));
    } else {
      std::vector<std::string> lines{to_string(v.outcome)};
      if (opt_.explain) {
        if (v.canonical) {
          auto pair = [&](const CanonicalPair& p) { return "(" + show(p.lambda0) + ", " + show(p.psi) + ")"; };
          lines.push_back("canonical: " + pair(v.canonical->first) + " vs " + pair(v.canonical->second));
        }
        for (const auto& s : v.trace) lines.push_back("case " + s.label + ": " + s.citation);
        std::string tags;
        for (const auto& t : v.assumptions) tags += (tags.empty() ? "" : ", ") + print_axiom_tag(t);
        lines.push_back("assumptions: " + (tags.empty() ? std::string("none") : tags));
        for (auto& c : context_lines()) lines.push_back(c);
      }
      if (!v.reason.empty() && (opt_.explain || v.outcome == Outcome::OutOfScope))
        lines.push_back("reason: " + v.reason);
      emit_lines(lines);
    }
    return v.outcome == Outcome::OutOfScope ? kOutOfScope : kOk;
  }

  int selftest() {
    const oracle::NamedGrid& grid = oracle::named_grid(opt_.grid);
    std::vector<oracle::Suite> suites{oracle::Suite::Arith, oracle::Suite::GammaMin, oracle::Suite::Division};
    if (!opt_.suite.empty()) suites = {oracle::suite_from_string(opt_.suite)};
    bool ok = true;
    json reports = json::array();
    std::vector<std::string> lines;
    for (auto s : suites) {
      const oracle::Report r = oracle::differential_check(s, grid);
      ok = ok && r.ok();
      reports.push_back(r.to_json());
      std::istringstream text(r.to_text());
      for (std::string line; std::getline(text, line);) lines.push_back(line);
    }
    if (opt_.json) emit({{"grid", grid.name}, {"ok", ok}, {"reports", reports}});
    else emit_lines(lines);
    return ok ? kOk : kSelftestMismatch;
  }

  const Options& opt_;
  std::ostream& out_;
};

std::string caret_line(const std::string& input, SourceSpan span) {
  const std::size_t width = std::max<std::size_t>(1, span.end - span.start);
  return "  " + input + "\n  " + std::string(span.start, ' ') + std::string(width, '^');
}

// Runs one query and maps failures to exit codes. In batch mode every
// outcome, including errors, occupies exactly one line of `out`.
int guarded(const Options& opt, const std::string& name, const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  auto fail = [&](int code, const std::string& message, const std::string& detail = {}) {
    if (opt.batch) {
      out << "error: " << message << '\n';
    } else {
      err << "error: " << message << '\n';
      if (!detail.empty()) err << detail << '\n';
    }
    return code;
  };
  try {
    return Query(opt, out).run(name, args);
  } catch (const ParseError& e) {
    // Locate the argument that failed: the first one that does not parse.
    std::string detail;
    for (const auto& a : args) {
      if (e.span().end > a.size()) continue;
      try {
        if (name == "classify") parse_space(a);
        else parse_ordinal(a);
      } catch (const ParseError&) {
        detail = caret_line(a, e.span());
        break;
      } catch (const std::exception&) {
      }
    }
    return fail(kParseError, e.what(), detail);
  } catch (const DomainError& e) {
    return fail(kDomainError, e.what());
  } catch (const ResourceLimitError& e) {
    return fail(kDomainError, std::string("resource limit: ") + e.what());
  } catch (const UsageError& e) {
    return fail(kParseError, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kParseError, e.what());
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Line format: SUBCOMMAND ARG (";" ARG)*. Blank lines and lines starting
// with '#' are skipped and produce no output.
int run_batch(const Options& opt, const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open batch file '" << path << "'\n";
    return kParseError;
  }
  int status = kOk;
  for (std::string raw; std::getline(in, raw);) {
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto space = line.find_first_of(" \t");
    const std::string name = line.substr(0, space);
    std::vector<std::string> args;
    if (space != std::string::npos) {
      std::istringstream rest(line.substr(space + 1));
      for (std::string a; std::getline(rest, a, ';');) args.push_back(trim(a));
    }
    status = std::max(status, guarded(opt, name, args, out, err));
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordinal arithmetic and isomorphic classification of C(K) and compact-operator spaces", "ordcalc"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  Options opt;
  std::string psi_mode = "repaired", assume = "true", batch_file;
  app.add_flag("--json", opt.json, "Emit JSON instead of text");
  app.add_flag("--explain", opt.explain, "Print the decision trace and the active assumptions");
  app.add_flag("--unicode", opt.unicode, "Print ordinals with Unicode symbols");
  app.add_option("--psi-mode", psi_mode, "psi convention (default repaired)")
      ->check(CLI::IsMember({"repaired", "literal"}));
  app.add_option("--assume-no-rvm", assume, "Assume no real-valued measurable cardinal <= |lambda| (default true)")
      ->check(CLI::IsMember({"true", "false"}));
  app.add_option("--batch", batch_file, "Run one query per line of FILE");

  std::vector<std::pair<CLI::App*, std::vector<std::string>>> subs;
  subs.reserve(std::size(kCommands));
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    subs.push_back({sub, {}});
    if (c.arity > 0)
      sub->add_option("args", subs.back().second, c.arg_names)->expected(static_cast<int>(c.arity))->required();
  }
  CLI::App* selftest = subs.back().first;
  selftest->add_option("--grid", opt.grid, "Named grid")->default_str(opt.grid);
  selftest->add_option("--suite", opt.suite, "Run only this suite")
      ->check(CLI::IsMember({"arith", "gamma_min", "division"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  opt.ctx.psi_mode = psi_mode == "literal" ? PsiMode::Literal : PsiMode::Repaired;
  opt.ctx.assume_no_rvm = assume == "true";

  if (!batch_file.empty()) {
    if (!app.get_subcommands().empty()) {
      err << "error: --batch takes its subcommands from the file\n";
      return kParseError;
    }
    opt.batch = true;
    return run_batch(opt, batch_file, out, err);
  }
  for (const auto& [sub, values] : subs)
    if (sub->parsed()) return guarded(opt, sub->get_name(), values, out, err);

  err << app.help();
  return kParseError;
}

}  // namespace ordcalc::cli
