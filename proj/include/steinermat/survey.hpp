#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace steinermat {

/// Exact rank of D_2(T) for one labeled tree.
struct SurveyRow {
  int num_vertices = 0;
  std::uint64_t tree_id = 0;  // index in Pruefer order within num_vertices
  std::vector<int> prufer;
  std::size_t rank = 0;
  bool is_caterpillar = false;
  long formula_value = 0;  // 2N - p - 1
  bool match = false;      // rank == formula_value

  bool operator==(const SurveyRow&) const = default;
};

struct SurveyOptions {
  static constexpr int kDefaultCap = 8;

  int max_vertices = 2;
  int jobs = 1;
  int cap = kDefaultCap;
};

/// kDefaultCap, raised by the STEINERMAT_MAX_N environment variable when it
/// holds a larger integer.
int survey_cap_from_env();

/// Every labeled tree with 2..max_vertices vertices, in order of N and then
/// Pruefer index. Results do not depend on jobs. Throws
/// std::invalid_argument unless 2 <= max_vertices <= cap.
std::vector<SurveyRow> survey_tree_ranks(const SurveyOptions& options);

/// Header N,tree_id,prufer,rank,is_caterpillar,formula_value,match; Pruefer
/// entries joined by '-'.
std::string survey_csv(const std::vector<SurveyRow>& rows);

/// Caterpillar rows whose rank differs from 2N - p - 1.
std::size_t caterpillar_mismatches(const std::vector<SurveyRow>& rows);

}  // namespace steinermat
