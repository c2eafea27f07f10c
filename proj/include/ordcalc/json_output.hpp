#pragma once

#include "json.hpp"

#include "ordcalc/classifier.hpp"

namespace ordcalc {

/// {"verdict", "canonical_left", "canonical_right", "trace", "assumptions",
///  "psi_mode", "assume_no_rvm", "reason"}; field order is fixed.
nlohmann::ordered_json verdict_to_json(const Verdict& v, const AxiomContext& ctx);

}  // namespace ordcalc
