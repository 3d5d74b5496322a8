#include "steinermat/survey.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "steinermat/dk.hpp"
#include "steinermat/matrix.hpp"
#include "steinermat/tree.hpp"

namespace steinermat {

int survey_cap_from_env() {
  const char* raw = std::getenv("STEINERMAT_MAX_N");
  if (!raw) return SurveyOptions::kDefaultCap;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value <= SurveyOptions::kDefaultCap) return SurveyOptions::kDefaultCap;
  return static_cast<int>(value);
}

namespace {

SurveyRow survey_one(const LabeledTreeEnumerator& trees, std::uint64_t index) {
  SurveyRow row;
  row.num_vertices = trees.num_vertices();
  row.tree_id = index;
  row.prufer = trees.prufer_at(index);
  const Tree t = tree_from_prufer(row.num_vertices, row.prufer);
  row.rank = rank(build_dk(t, 2).matrix());
  row.is_caterpillar = is_caterpillar(t);
  row.formula_value = 2L * row.num_vertices - pendant_count(t) - 1;
  row.match = static_cast<long>(row.rank) == row.formula_value;
  return row;
}

}  // namespace

std::vector<SurveyRow> survey_tree_ranks(const SurveyOptions& options) {
  if (options.max_vertices < 2 || options.max_vertices > options.cap) {
    throw std::invalid_argument("survey size must lie in 2.." + std::to_string(options.cap) +
                                " (got " + std::to_string(options.max_vertices) +
                                "); STEINERMAT_MAX_N raises the cap");
  }
  std::vector<LabeledTreeEnumerator> per_size;
  std::vector<std::uint64_t> offsets{0};
  for (int num = 2; num <= options.max_vertices; ++num) {
    per_size.emplace_back(num, options.cap);
    offsets.push_back(offsets.back() + per_size.back().size());
  }
  const std::uint64_t total = offsets.back();
  std::vector<SurveyRow> rows(total);

  constexpr std::uint64_t kChunk = 256;
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    std::size_t bucket = 0;
    while (true) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= total) return;
      const std::uint64_t end = std::min(total, begin + kChunk);
      for (std::uint64_t g = begin; g < end; ++g) {
        while (offsets[bucket + 1] <= g) ++bucket;
        while (offsets[bucket] > g) --bucket;
        rows[g] = survey_one(per_size[bucket], g - offsets[bucket]);
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return rows;
}

std::string survey_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream os;
  os << "N,tree_id,prufer,rank,is_caterpillar,formula_value,match\n";
  for (const SurveyRow& r : rows) {
    os << r.num_vertices << ',' << r.tree_id << ',';
    for (std::size_t i = 0; i < r.prufer.size(); ++i) os << (i ? "-" : "") << r.prufer[i];
    os << ',' << r.rank << ',' << (r.is_caterpillar ? "true" : "false") << ',' << r.formula_value
       << ',' << (r.match ? "true" : "false") << '\n';
  }
  return os.str();
}

std::size_t caterpillar_mismatches(const std::vector<SurveyRow>& rows) {
  std::size_t count = 0;
  for (const SurveyRow& r : rows) count += r.is_caterpillar && !r.match;
  return count;
}

}  // namespace steinermat
