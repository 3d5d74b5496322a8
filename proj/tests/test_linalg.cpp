#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "steinermat/dk.hpp"
#include "steinermat/matrix.hpp"

using namespace steinermat;

TEST_CASE("Rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(4).to_string() == "4");
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("a"));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(0, 5).is_zero());
}

TEST_CASE("matrix construction and access") {
  RationalMatrix a{{1, 2}, {3, 4}};
  CHECK(a.rows() == 2);
  CHECK(a.at(1, 0) == Rational(3));
  CHECK_THROWS_AS(a.at(2, 0), std::out_of_range);
  CHECK(transpose(a) == RationalMatrix{{1, 3}, {2, 4}});
  CHECK(a.block(1, 1, 1, 1) == RationalMatrix{{4}});
  CHECK(multiply(a, RationalMatrix::identity(2)) == a);
  CHECK(add(a, scale(Rational(-1), a)) == RationalMatrix(2, 2));
  CHECK(subtract(a, a) == RationalMatrix(2, 2));
  CHECK(outer(RationalVector::ones(2), RationalVector::unit(2, 1)) == RationalMatrix{{1, 0}, {1, 0}});
  CHECK_THROWS(multiply(a, RationalMatrix(3, 1)));
  CHECK_THROWS(RationalMatrix(0, 2));
}

TEST_CASE("D2 of the two-edge path") {
  RationalMatrix d = build_dk(make_path(2), 2).matrix();
  CHECK(d == RationalMatrix{{1, 2, 2}, {2, 2, 2}, {2, 2, 1}});
  CHECK(det(d) == Rational(2));
  auto inv = invert(d);
  REQUIRE(inv);
  CHECK(*inv == RationalMatrix{{-1, 1, 0}, {1, Rational(-3, 2), 1}, {0, 1, -1}});
  CHECK(rank(d) == 3);
}

TEST_CASE("singular inputs") {
  RationalMatrix j = RationalMatrix::ones(3, 3);
  CHECK_FALSE(invert(j));
  CHECK(det(j) == Rational(0));
  CHECK(rank(j) == 1);
  CHECK(rank(RationalMatrix(2, 5)) == 0);
  CHECK_THROWS(det(RationalMatrix(2, 3)));
}

TEST_CASE("Schur complement of the caterpillar block") {
  RationalMatrix m = oracle::caterpillar_golden();
  RationalMatrix p = schur_complement(m, 7);
  RationalMatrix expected = subtract(scale(Rational(-1, 4), RationalMatrix::ones(3, 3)),
                                     RationalMatrix::identity(3));
  CHECK(p == expected);
  CHECK(det(m) == det(m.block(0, 0, 7, 7)) * det(p));
  CHECK_THROWS_AS(schur_complement(m, 0), std::out_of_range);
  CHECK_THROWS_AS(schur_complement(m, 10), std::out_of_range);
  CHECK_THROWS_AS(schur_complement(RationalMatrix{{0, 1}, {1, 0}}, 1), std::domain_error);
}

TEST_CASE("rank and determinant agree with naive oracles") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 7;
    std::size_t c = 1 + (trial * 3) % 7;
    std::size_t cap = trial % 3 == 0 ? 1 + trial % 4 : 0;
    RationalMatrix a = oracle::random_matrix(rng, r, c, cap);
    CHECK(rank(a) == oracle::naive_rank(a));
    if (r == c && r <= 6) CHECK(det(a) == oracle::cofactor_det(a));
  }
}

TEST_CASE("large integers go through the big-number path") {
  RationalMatrix a(3, 3);
  mpz_class big("123456789012345678901234567890");
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = Rational(mpz_class(big * (i + 1) + j * j + i));
  }
  CHECK(rank(a) == oracle::naive_rank(a));
  CHECK(det(a) == oracle::cofactor_det(a));
  auto inv = invert(a);
  if (inv) CHECK(multiply(a, *inv) == RationalMatrix::identity(3));
}

TEST_CASE("inverse round trip and det multiplicativity") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + trial % 6;
    RationalMatrix a = oracle::random_matrix(rng, n, n);
    RationalMatrix b = oracle::random_matrix(rng, n, n);
    CHECK(det(multiply(a, b)) == det(a) * det(b));
    auto inv = invert(a);
    CHECK(inv.has_value() == !det(a).is_zero());
    if (inv) {
      CHECK(*invert(*inv) == a);
      CHECK(det(*inv) * det(a) == Rational(1));
    }
  }
}

TEST_CASE("Laplacians") {
  RationalMatrix l = laplacian(make_caterpillar(oracle::sample_spec()));
  std::vector<long> diagonal;
  for (std::size_t i = 0; i < 8; ++i) diagonal.push_back(l(i, i).numerator().get_si());
  CHECK(diagonal == std::vector<long>{1, 3, 4, 2, 1, 1, 1, 1});
  CHECK(l(1, 5) == Rational(-1));
  CHECK(l(0, 2) == Rational(0));
  CHECK(multiply(l, RationalVector::ones(8).as_column()) == RationalMatrix(8, 1));
  CHECK(path_laplacian(3) == RationalMatrix{{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}});
  CHECK(path_laplacian(1) == RationalMatrix{{0}});
  CHECK_THROWS(path_laplacian(0));
}

TEST_CASE("CSV round trip") {
  RationalMatrix a{{1, Rational(-2, 3)}, {0, 5}};
  CHECK(matrix_from_csv(to_csv(a)) == a);
  CHECK_THROWS(matrix_from_csv("1,2\n3\n"));
  CHECK_THROWS(matrix_from_csv(""));
}
