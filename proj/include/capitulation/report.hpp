#pragma once

#include <string>

#include "json.hpp"

#include "capitulation/arithmetic.hpp"
#include "capitulation/finite_group.hpp"
#include "capitulation/presentation.hpp"
#include "capitulation/verify.hpp"

namespace capitulation::report {

struct Analysis {
  nlohmann::json doc;
  bool hypothesis_met = false;  ///< G/G' of type (2,4)
};

/// Enumerates `pres` and collects structural data, plus the capitulation
/// report when G/G' is of type (2,4). Propagates CosetLimitExceeded.
Analysis analyze(const Presentation& pres, std::size_t max_cosets = kDefaultMaxCosets);

std::string analysis_text(const nlohmann::json& doc);

nlohmann::json prediction_json(const arith::FieldPrediction& p, const std::string& mode,
                               const std::vector<std::uint64_t>& input);
std::string prediction_text(const nlohmann::json& doc);

nlohmann::json outcomes_json(const std::vector<verify::Outcome>& outcomes);

}  // namespace capitulation::report
