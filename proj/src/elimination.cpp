// Fraction-free (Bareiss) elimination behind rank, det and invert.
//
// Rational input is first row-scaled to integers. Elimination runs on int64
// with 128-bit intermediates and restarts on mpz_class when a value leaves
// the int64 range.

#include <cstdint>
#include <stdexcept>

#include "steinermat/matrix.hpp"

namespace steinermat {

namespace {

struct Overflow {};

struct EchelonResult {
  std::size_t rank = 0;
  int sign = 1;  // parity of row swaps
};

inline void divexact(mpz_class& out, const mpz_class& num, const mpz_class& den) {
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
}

// Entries are the k x k minors of the leading pivot rows/columns, so every
// division by the previous pivot is exact.
EchelonResult bareiss(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols,
                      std::size_t pivot_cols) {
  EchelonResult res;
  mpz_class prev = 1;
  mpz_class tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
      res.sign = -res.sign;
    }
    const mpz_class& pivot = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpz_class factor = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class& x = a[i * cols + j];
        tmp = pivot * x;
        tmp -= factor * a[r * cols + j];
        divexact(x, tmp, prev);
      }
      a[i * cols + c] = 0;
    }
    prev = pivot;
    ++r;
  }
  res.rank = r;
  return res;
}

EchelonResult bareiss(std::vector<std::int64_t>& a, std::size_t rows, std::size_t cols,
                      std::size_t pivot_cols) {
  EchelonResult res;
  std::int64_t prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
      res.sign = -res.sign;
    }
    const __int128 pivot = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const __int128 factor = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        __int128 x = pivot * a[i * cols + j] - factor * a[r * cols + j];
        x /= prev;
        if (x > INT64_MAX || x < INT64_MIN) throw Overflow{};
        a[i * cols + j] = static_cast<std::int64_t>(x);
      }
      a[i * cols + c] = 0;
    }
    prev = a[r * cols + c];
    ++r;
  }
  res.rank = r;
  return res;
}

// Row-scales a to integers. Returns the per-row multipliers.
std::vector<mpz_class> integer_rows(const RationalMatrix& a, std::vector<mpz_class>& out) {
  std::vector<mpz_class> scales(a.rows());
  out.clear();
  out.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (const Rational& x : a.row(i)) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.raw().get_den_mpz_t());
    }
    for (const Rational& x : a.row(i)) out.push_back(x.raw().get_num() * (l / x.raw().get_den()));
    scales[i] = l;
  }
  return scales;
}

bool narrow(const std::vector<mpz_class>& in, std::vector<std::int64_t>& out) {
  out.resize(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!in[i].fits_slong_p()) return false;
    out[i] = in[i].get_si();
  }
  return true;
}

void require_square(const RationalMatrix& a, const char* op) {
  if (!a.is_square()) throw std::invalid_argument(std::string(op) + ": matrix is not square");
}

}  // namespace

std::size_t rank(const RationalMatrix& a) {
  std::vector<mpz_class> big;
  integer_rows(a, big);
  std::vector<std::int64_t> small;
  if (narrow(big, small)) {
    try {
      return bareiss(small, a.rows(), a.cols(), a.cols()).rank;
    } catch (const Overflow&) {
    }
  }
  return bareiss(big, a.rows(), a.cols(), a.cols()).rank;
}

Rational det(const RationalMatrix& a) {
  require_square(a, "det");
  const std::size_t n = a.rows();
  std::vector<mpz_class> big;
  std::vector<mpz_class> scales = integer_rows(a, big);
  mpz_class scale_product = 1;
  for (const auto& s : scales) scale_product *= s;

  std::vector<std::int64_t> small;
  if (narrow(big, small)) {
    try {
      EchelonResult res = bareiss(small, n, n, n);
      if (res.rank < n) return Rational(0);
      mpz_class d(static_cast<long>(small[n * n - 1]));
      return Rational(d * res.sign, scale_product);
    } catch (const Overflow&) {
    }
  }
  EchelonResult res = bareiss(big, n, n, n);
  if (res.rank < n) return Rational(0);
  return Rational(big[n * n - 1] * res.sign, scale_product);
}

std::optional<RationalMatrix> invert(const RationalMatrix& a) {
  require_square(a, "invert");
  const std::size_t n = a.rows();
  const std::size_t width = 2 * n;
  std::vector<mpz_class> scaled;
  std::vector<mpz_class> scales = integer_rows(a, scaled);

  // [A_int | I]; the same row operations reduce the right half to E with
  // E A_int = U upper triangular.
  std::vector<mpz_class> aug(n * width);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * width + j] = scaled[i * n + j];
    aug[i * width + n + i] = 1;
  }
  if (bareiss(aug, n, width, n).rank < n) return std::nullopt;

  // Back substitution U X = E gives X = A_int^{-1}.
  RationalMatrix x(n, n);
  for (std::size_t ii = n; ii-- > 0;) {
    const Rational pivot(aug[ii * width + ii]);
    for (std::size_t c = 0; c < n; ++c) {
      Rational acc(aug[ii * width + n + c]);
      for (std::size_t k = ii + 1; k < n; ++k) {
        const mpz_class& u = aug[ii * width + k];
        if (u != 0) acc -= Rational(u) * x(k, c);
      }
      x(ii, c) = acc / pivot;
    }
  }
  // A = S^{-1} A_int, so A^{-1} = A_int^{-1} S.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) x(r, c) *= Rational(scales[c]);
  }
  if (multiply(a, x) != RationalMatrix::identity(n)) {
    throw std::logic_error("invert: A * A^{-1} != I");
  }
  return x;
}

RationalMatrix schur_complement(const RationalMatrix& a, std::size_t split) {
  require_square(a, "schur_complement");
  const std::size_t n = a.rows();
  if (split == 0 || split >= n) {
    throw std::out_of_range("schur_complement: split must lie in 1.." + std::to_string(n - 1));
  }
  const std::size_t rest = n - split;
  auto d_inv = invert(a.block(0, 0, split, split));
  if (!d_inv) throw std::domain_error("schur_complement: leading block is singular");
  RationalMatrix m = a.block(0, split, split, rest);
  RationalMatrix m_lower = a.block(split, 0, rest, split);
  RationalMatrix n_blk = a.block(split, split, rest, rest);
  return subtract(n_blk, multiply(m_lower, multiply(*d_inv, m)));
}

}  // namespace steinermat
