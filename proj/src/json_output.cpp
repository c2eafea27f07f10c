#include "ordcalc/json_output.hpp"

#include "ordcalc/text_io.hpp"

namespace ordcalc {

namespace {

nlohmann::ordered_json pair_json(const CanonicalPair& p) {
  nlohmann::ordered_json j;
  j["lambda0"] = print_normal(p.lambda0);
  j["psi"] = print_normal(p.psi);
  return j;
}

}  // namespace

nlohmann::ordered_json verdict_to_json(const Verdict& v, const AxiomContext& ctx) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(v.outcome);
  if (v.canonical) {
    j["canonical_left"] = pair_json(v.canonical->first);
    j["canonical_right"] = pair_json(v.canonical->second);
  } else {
    j["canonical_left"] = nullptr;
    j["canonical_right"] = nullptr;
  }
  auto trace = nlohmann::ordered_json::array();
  for (const auto& step : v.trace) trace.push_back({{"case", step.label}, {"citation", step.citation}});
  j["trace"] = std::move(trace);
  auto assumptions = nlohmann::ordered_json::array();
  for (const auto& tag : v.assumptions) assumptions.push_back(print_axiom_tag(tag));
  j["assumptions"] = std::move(assumptions);
  j["psi_mode"] = to_string(ctx.psi_mode);
  j["assume_no_rvm"] = ctx.assume_no_rvm;
  if (v.reason.empty())
    j["reason"] = nullptr;
  else
    j["reason"] = v.reason;
  return j;
}

}  // namespace ordcalc
