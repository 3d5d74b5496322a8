#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "steinermat/dk.hpp"
#include "steinermat/error.hpp"

using namespace steinermat;

TEST_CASE("binomial and subset tables") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 5) == 0);
  CHECK(SubsetTable(3, 2).subsets() == std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(SubsetTable(5, 2).size() == 10);
  CHECK_THROWS(SubsetTable(4, 5));
  CHECK_THROWS(SubsetTable(4, 0));
  SubsetTable t(7, 3);
  CHECK(t.size() == 35);
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(t.index_of(t.at(i)) == i);
  CHECK(std::is_sorted(t.subsets().begin(), t.subsets().end()));
  CHECK_THROWS_AS(t.index_of(VertexSet{0, 1}), std::out_of_range);
  CHECK_THROWS_AS(t.index_of(VertexSet{0, 1, 7}), std::out_of_range);
}

TEST_CASE("D2 of P4 in a fixed ordering") {
  auto order = oracle::p4_golden_order();
  LabeledMatrix d = build_dk(make_path(4), 2, order);
  CHECK(d.matrix() == oracle::p4_golden());
  CHECK(d.row_labels() == order);
  CHECK(export_labeled(d, ExportFormat::kCsv).find("X,0|1,0|2,0|3,0|4,1|4,2|4,3|4,1|2,1|3,2|3\n") == 0);
  std::string csv = export_labeled(d, ExportFormat::kCsv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);

  LabeledMatrix lex = build_dk(make_path(4), 2);
  auto x = path_x(4);
  CHECK(submatrix(lex, x, x).matrix() == oracle::p4_golden().block(0, 0, 7, 7));
  CHECK(submatrix(lex, lex.row_labels(), lex.col_labels()).matrix() == lex.matrix());
}

TEST_CASE("D2 of the sample caterpillar") {
  Tree c = make_caterpillar(oracle::sample_spec());
  LabeledMatrix full = build_dk(c, 2);
  CHECK(full.matrix().rows() == 28);
  auto x = oracle::caterpillar_golden_x();
  CHECK(canonical_x(oracle::sample_spec()) == x);
  CHECK(submatrix(full, x, x).matrix() == oracle::caterpillar_golden());
  LabeledMatrix ordered = build_dk(c, 2, canonical_first_order(oracle::sample_spec()));
  CHECK(ordered.matrix().block(0, 0, 10, 10) == oracle::caterpillar_golden());
  std::vector<VertexSet> leaves{{0, 5}, {0, 6}, {0, 7}};
  CHECK(submatrix(full, leaves, leaves).matrix() == RationalMatrix{{2, 4, 4}, {4, 3, 4}, {4, 4, 3}});
  CHECK(full.at(VertexSet{0, 5}, VertexSet{0, 7}) == Rational(4));
  CHECK_THROWS_AS(full.at(VertexSet{0, 8}, VertexSet{0, 1}), std::out_of_range);
  CHECK_THROWS_AS(submatrix(full, std::vector<VertexSet>{{0, 9}}, x), std::out_of_range);
}

TEST_CASE("canonical index sets") {
  CHECK(canonical_x(CaterpillarSpec(2, {0})) == std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(canonical_x(CaterpillarSpec(3, {0, 0})) ==
        std::vector<VertexSet>{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    CaterpillarSpec s = oracle::random_spec(rng, 7, 3);
    auto x = canonical_x(s);
    CHECK(static_cast<int>(x.size()) == 2 * s.n() - 1 + s.total_leaves());
    for (int a = 1; a < s.num_vertices(); ++a) CHECK(std::count(x.begin(), x.end(), VertexSet{0, a}) == 1);
    for (int a = 1; a < s.n(); ++a) CHECK(std::count(x.begin(), x.end(), VertexSet{a, s.n()}) == 1);
    auto order = canonical_first_order(s);
    CHECK(order.size() == binomial(s.num_vertices(), 2));
    std::vector<VertexSet> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == SubsetTable(s.num_vertices(), 2).subsets());
    CHECK(complement_pairs(s.num_vertices(), x).size() == order.size() - x.size());
  }
}

TEST_CASE("build_dk properties on random trees") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Tree t = oracle::random_tree(rng, 3 + trial % 8);
    for (int k : {2, 3}) {
      if (k > t.num_vertices()) continue;
      LabeledMatrix d = build_dk(t, k);
      const auto& m = d.matrix();
      CHECK(m == transpose(m));
      for (std::size_t i = 0; i < m.rows(); ++i) {
        CHECK(m(i, i) == Rational(steiner_distance(t, d.row_labels()[i])));
        for (std::size_t j = 0; j < m.cols(); ++j) {
          CHECK_FALSE(m(i, j) < m(i, i));
          CHECK_FALSE(m(i, j) < m(j, j));
        }
      }
    }
    const int num = t.num_vertices();
    CHECK(build_dk(t, num).matrix() == RationalMatrix{{num - 1}});
  }
  CHECK_THROWS(build_dk(make_path(3), 5));
  CHECK_THROWS(build_dk(make_path(3), 0));
  std::vector<VertexSet> bad{{0, 1, 2}};
  CHECK_THROWS(build_dk(make_path(3), 2, bad));
}

TEST_CASE("export and import") {
  LabeledMatrix one(RationalMatrix{{0}}, {VertexSet{0, 1}}, {VertexSet{0, 1}});
  CHECK(export_labeled(one, ExportFormat::kCsv) == "X,0|1\n0|1,0\n");
  CHECK(export_labeled(one, ExportFormat::kJson) == "{\"labels\":[[0,1]],\"entries\":[[\"0\"]]}\n");

  LabeledMatrix ex(oracle::caterpillar_golden(), oracle::caterpillar_golden_x(), oracle::caterpillar_golden_x());
  for (ExportFormat f : {ExportFormat::kCsv, ExportFormat::kJson}) {
    std::string text = export_labeled(ex, f);
    LabeledMatrix back = import_labeled(text, f);
    CHECK(back.matrix() == ex.matrix());
    CHECK(back.row_labels() == ex.row_labels());
    CHECK(export_labeled(back, f) == text);
  }

  LabeledMatrix frac(RationalMatrix{{Rational(-3, 2), 1}}, {VertexSet{0, 1}}, {VertexSet{0}, VertexSet{1}});
  std::string json = export_labeled(frac, ExportFormat::kJson);
  CHECK(json.find("row_labels") != std::string::npos);
  CHECK(json.find("\"-3/2\"") != std::string::npos);
  CHECK(import_labeled(json, ExportFormat::kJson).matrix() == frac.matrix());
  CHECK(import_labeled(export_labeled(frac, ExportFormat::kCsv), ExportFormat::kCsv).matrix() == frac.matrix());

  CHECK_THROWS_AS(import_labeled("{", ExportFormat::kJson), Error);
  CHECK_THROWS_AS(import_labeled("{\"labels\":3}", ExportFormat::kJson), Error);
  CHECK_THROWS_AS(import_labeled("{\"entries\":[]}", ExportFormat::kJson), Error);
  CHECK_THROWS_AS(import_labeled("Y,0|1\n0|1,0\n", ExportFormat::kCsv), Error);
  CHECK_THROWS_AS(import_labeled("X,0|1\n0|1,0,1\n", ExportFormat::kCsv), Error);
  CHECK_THROWS(LabeledMatrix(RationalMatrix{{1, 2}}, {VertexSet{0}}, {VertexSet{0}, VertexSet{0}}));
}
