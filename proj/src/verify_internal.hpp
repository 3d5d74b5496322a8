#pragma once

#include <chrono>
#include <functional>
#include <string>

#include "steinermat/verify.hpp"

namespace steinermat::detail {

using LabelFn = std::function<std::string(std::size_t)>;

inline LabelFn positional(const char* prefix) {
  return [prefix](std::size_t i) { return std::string(prefix) + " " + std::to_string(i + 1); };
}

inline LabelFn from_labels(const std::vector<VertexSet>& labels) {
  return [&labels](std::size_t i) { return "{" + labels.at(i).to_string() + "}"; };
}

/// Records the first entry where actual differs from expected.
inline bool first_mismatch(VerificationReport& report, const RationalMatrix& expected,
                           const RationalMatrix& actual, const LabelFn& row, const LabelFn& col) {
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
    report.fail({"shape", std::to_string(actual.rows()) + "x" + std::to_string(actual.cols()),
                 Rational(static_cast<long>(expected.rows() * expected.cols())),
                 Rational(static_cast<long>(actual.rows() * actual.cols()))});
    return true;
  }
  for (std::size_t i = 0; i < expected.rows(); ++i) {
    for (std::size_t j = 0; j < expected.cols(); ++j) {
      if (expected(i, j) != actual(i, j)) {
        report.fail({row(i), col(j), expected(i, j), actual(i, j)});
        return true;
      }
    }
  }
  return false;
}

inline nlohmann::ordered_json spec_json(const CaterpillarSpec& spec) {
  nlohmann::ordered_json j;
  j["n"] = spec.n();
  j["leaves"] = std::vector<int>(spec.leaf_counts().begin(), spec.leaf_counts().end());
  return j;
}

/// Runs body and stamps the elapsed wall time on the report.
inline VerificationReport timed(std::string check, nlohmann::ordered_json params,
                                const std::function<void(VerificationReport&)>& body) {
  VerificationReport report;
  report.check = std::move(check);
  report.params = std::move(params);
  auto start = std::chrono::steady_clock::now();
  body(report);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace steinermat::detail
