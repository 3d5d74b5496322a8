#include <doctest.h>

#include <cstdlib>
#include <map>

#include "steinermat/survey.hpp"

using namespace steinermat;

TEST_CASE("survey of small trees") {
  SurveyOptions opt;
  opt.max_vertices = 4;
  auto rows = survey_tree_ranks(opt);
  REQUIRE(rows.size() == 1 + 3 + 16);
  CHECK(rows[0].num_vertices == 2);
  CHECK(rows[0].rank == 1);
  CHECK(rows[0].prufer.empty());
  std::map<std::size_t, int> histogram;
  for (const auto& r : rows) {
    CHECK(r.is_caterpillar);
    CHECK(r.match);
    if (r.num_vertices == 4) ++histogram[r.rank];
  }
  CHECK(histogram == std::map<std::size_t, int>{{4, 4}, {5, 12}});
  CHECK(caterpillar_mismatches(rows) == 0);
}

TEST_CASE("survey csv and jobs determinism") {
  SurveyOptions one;
  one.max_vertices = 5;
  SurveyOptions many = one;
  many.jobs = 3;
  auto a = survey_tree_ranks(one);
  auto b = survey_tree_ranks(many);
  CHECK(a == b);
  std::string csv = survey_csv(a);
  CHECK(csv == survey_csv(b));
  CHECK(csv.rfind("N,tree_id,prufer,rank,is_caterpillar,formula_value,match\n2,0,,1,true,1,true\n", 0) == 0);
  CHECK(csv.find("\n5,124,4-4-4,") != std::string::npos);
}

TEST_CASE("survey option validation") {
  SurveyOptions opt;
  opt.max_vertices = 9;
  CHECK_THROWS(survey_tree_ranks(opt));
  opt.max_vertices = 1;
  CHECK_THROWS(survey_tree_ranks(opt));
  opt.max_vertices = 3;
  opt.jobs = 0;  // clamped to one worker
  CHECK(survey_tree_ranks(opt).size() == 4);
}

TEST_CASE("cap from environment only raises the limit") {
  ::setenv("STEINERMAT_MAX_N", "9", 1);
  CHECK(survey_cap_from_env() == 9);
  ::setenv("STEINERMAT_MAX_N", "3", 1);
  CHECK(survey_cap_from_env() == SurveyOptions::kDefaultCap);
  ::unsetenv("STEINERMAT_MAX_N");
  CHECK(survey_cap_from_env() == SurveyOptions::kDefaultCap);
}

TEST_CASE("mismatch counting ignores non-caterpillars") {
  SurveyRow cat{6, 0, {}, 9, true, 8, false};
  SurveyRow other{7, 0, {}, 9, false, 8, false};
  CHECK(caterpillar_mismatches({cat, other}) == 1);
}
