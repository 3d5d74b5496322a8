// Identities for D = D_2(P_n)[X,X] with X = {0,1},...,{0,n},{1,n},...,{n-1,n}.

#include <stdexcept>

#include "verify_internal.hpp"

namespace steinermat {

RationalMatrix path_dx(int n) {
  return build_dk(make_path(n), 2, path_x(n)).matrix();
}

namespace {

void require_spine(int n) {
  if (n < 1) throw std::invalid_argument("path checks need n >= 1");
}

// Row i (1-based) of D: closed forms for the {0,i} rows and the {k-n,n} rows.
std::vector<Rational> closed_form_row(int n, int i) {
  std::vector<Rational> row;
  if (i <= n) {
    for (int c = 0; c < i; ++c) row.emplace_back(i);
    for (int v = i + 1; v <= n; ++v) row.emplace_back(v);
    for (int c = 0; c < n - 1; ++c) row.emplace_back(n);
  } else {
    const int tail = 2 * n - i;
    for (int c = 0; c < n; ++c) row.emplace_back(n);
    for (int v = n - 1; v > tail; --v) row.emplace_back(v);
    for (int c = 0; c < tail; ++c) row.emplace_back(tail);
  }
  return row;
}

}  // namespace

VerificationReport verify_path_rows(int n) {
  require_spine(n);
  return detail::timed("path-rows", {{"n", n}}, [n](VerificationReport& report) {
    const auto labels = path_x(n);
    const RationalMatrix d = path_dx(n);
    const std::size_t size = 2 * static_cast<std::size_t>(n) - 1;
    RationalMatrix expected(size, size);
    for (std::size_t r = 0; r < size; ++r) {
      auto row = closed_form_row(n, static_cast<int>(r) + 1);
      if (row.size() != size) throw std::logic_error("closed-form row has wrong length");
      for (std::size_t c = 0; c < size; ++c) expected(r, c) = row[c];
    }
    detail::first_mismatch(report, expected, d, detail::from_labels(labels),
                           detail::from_labels(labels));
  });
}

VerificationReport verify_ld_identity(int n) {
  require_spine(n);
  return detail::timed("ld", {{"n", n}}, [n](VerificationReport& report) {
    const std::size_t size = 2 * static_cast<std::size_t>(n) - 1;
    const auto labels = path_x(n);
    RationalMatrix lhs = add(multiply(path_laplacian(size), path_dx(n)), RationalMatrix::identity(size));
    RationalMatrix rhs = outer(RationalVector::unit(size, n), RationalVector::ones(size));
    detail::first_mismatch(report, rhs, lhs, detail::positional("row"), detail::from_labels(labels));
  });
}

VerificationReport verify_path_inverse(int n) {
  require_spine(n);
  return detail::timed("path-inverse", {{"n", n}}, [n](VerificationReport& report) {
    const std::size_t size = 2 * static_cast<std::size_t>(n) - 1;
    const auto labels = path_x(n);
    auto inverse = invert(path_dx(n));
    if (!inverse) {
      report.fail({"det", "", Rational(1), Rational(0)});
      return;
    }
    auto u = RationalVector::unit(size, n);
    RationalMatrix formula = add(scale(Rational(-1), path_laplacian(size)),
                                 scale(Rational(1, n), outer(u, u)));
    detail::first_mismatch(report, formula, *inverse, detail::from_labels(labels),
                           detail::from_labels(labels));
  });
}

}  // namespace steinermat
