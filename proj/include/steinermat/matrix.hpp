#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "steinermat/rational.hpp"
#include "steinermat/tree.hpp"

namespace steinermat {

/// Dense row-major matrix of exact rationals. Dimensions are positive.
class RationalMatrix {
 public:
  /// Zero matrix. Throws std::invalid_argument on a zero dimension.
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-wise literal, e.g. {{1, 2}, {3, 4}}.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  /// J: all ones.
  static RationalMatrix ones(std::size_t rows, std::size_t cols);
  static RationalMatrix from_integers(std::size_t rows, std::size_t cols, std::span<const int> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const;

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::vector<Rational> column(std::size_t c) const;

  /// Rows [r0, r0+nr) x cols [c0, c0+nc).
  RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> entries_;
};

/// Column vector of exact rationals, length >= 1.
class RationalVector {
 public:
  explicit RationalVector(std::vector<Rational> entries);
  /// e_m: 1 at 1-based position m, 0 elsewhere.
  static RationalVector unit(std::size_t length, std::size_t position);
  static RationalVector ones(std::size_t length);

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  RationalMatrix as_column() const;

  bool operator==(const RationalVector&) const = default;

 private:
  std::vector<Rational> entries_;
};

// Elementwise and product operations. All throw std::invalid_argument on a
// dimension mismatch.
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix add(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix subtract(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& a);
RationalMatrix scale(const Rational& s, const RationalMatrix& a);
/// u v'
RationalMatrix outer(const RationalVector& u, const RationalVector& v);

/// Exact rank over Q (fraction-free Bareiss elimination).
std::size_t rank(const RationalMatrix& a);
/// Throws std::invalid_argument if a is not square.
Rational det(const RationalMatrix& a);
/// nullopt iff det(a) == 0. Throws std::invalid_argument if a is not square.
std::optional<RationalMatrix> invert(const RationalMatrix& a);
/// N_blk - M' D_blk^{-1} M for a = [[D_blk, M], [M', N_blk]] where D_blk is
/// the leading split x split block. Throws std::out_of_range unless
/// 0 < split < a.rows(), std::domain_error if D_blk is singular.
RationalMatrix schur_complement(const RationalMatrix& a, std::size_t split);

/// Laplacian of the path on m vertices.
RationalMatrix path_laplacian(std::size_t m);
/// Degree matrix minus adjacency matrix.
RationalMatrix laplacian(const Tree& t);

/// Rows on separate lines, entries comma-separated as "p" or "p/q".
std::string to_csv(const RationalMatrix& a);
RationalMatrix matrix_from_csv(std::string_view text);

}  // namespace steinermat
