#pragma once

#include <string>

#include <json.hpp>

namespace nodim {

// Common pass/fail record emitted by every verifier. `witness` holds the
// object that was checked (indices, a vector, a matrix, ...), `diagnostics`
// solver counters, `provenance` the config echo and seed.
struct VerificationReport {
  bool pass = false;
  double achieved = 0.0;
  double bound = 0.0;
  nlohmann::json witness;
  nlohmann::json diagnostics = nlohmann::json::object();
  nlohmann::json provenance = nlohmann::json::object();
};

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

}  // namespace nodim
