#include <cmath>

#include "steinermat/verify.hpp"

namespace steinermat {

nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["params"] = report.params;
  j["pass"] = report.pass;
  if (report.witness) {
    j["witness"] = {
        {"row", report.witness->row},
        {"col", report.witness->col},
        {"expected", report.witness->expected.to_string()},
        {"actual", report.witness->actual.to_string()},
    };
  }
  if (!report.details.empty()) j["details"] = report.details;
  if (include_timing) j["elapsed_ms"] = std::round(report.elapsed_ms * 1000.0) / 1000.0;
  return j;
}

}  // namespace steinermat
