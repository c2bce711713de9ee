#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lpb/certify/certify.hpp"
#include "lpb/oracle/oracle.hpp"

namespace lpb {

using Json = nlohmann::ordered_json;

/// Structurally invalid report or corpus content.
class MalformedInput : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A rational becomes "n/d"; a number-field value becomes {"minpoly": "...", "coords": [...]}.
Json number_json(const NumberFieldElement& u);
/// Inverse of number_json. All number-field values in one report share a field, passed
/// through `field` (created on first use). Throws MalformedInput.
NumberFieldElement number_from_json(const Json& j, FieldPtr& field);

Json verdict_json(const std::string& input, const RationalFunction& f, const Verdict& v);

/// Adds first_integrals and splitting for an internal verdict.
void add_certificates(Json& report, const RationalFunction& f, const Verdict& v);

struct OracleRun {
  Trajectory trajectory;
  std::vector<ExtendedExpression> phis;
  DriftReport drift;
};

Json oracle_json(const TrajectoryConfig& cfg, const OracleRun& run);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Re-checks every certificate in a report by expression arithmetic. Throws
/// MalformedInput when a required field is missing or unparsable.
std::vector<CheckResult> verify_report(const Json& report);

}  // namespace lpb
