#include "steinermat/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace steinermat {

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
  }
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : RationalMatrix(rows, cols, std::vector<Rational>(rows * cols)) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::ones(std::size_t rows, std::size_t cols) {
  return RationalMatrix(rows, cols, std::vector<Rational>(rows * cols, Rational(1)));
}

RationalMatrix RationalMatrix::from_integers(std::size_t rows, std::size_t cols,
                                             std::span<const int> values) {
  std::vector<Rational> entries(values.begin(), values.end());
  return RationalMatrix(rows, cols, std::move(entries));
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return (*this)(r, c);
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
  RationalMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  }
  return out;
}

RationalVector::RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("vector length must be positive");
}

RationalVector RationalVector::unit(std::size_t length, std::size_t position) {
  if (position < 1 || position > length) throw std::out_of_range("unit vector position out of range");
  std::vector<Rational> e(length);
  e[position - 1] = 1;
  return RationalVector(std::move(e));
}

RationalVector RationalVector::ones(std::size_t length) {
  return RationalVector(std::vector<Rational>(length, Rational(1)));
}

RationalMatrix RationalVector::as_column() const {
  return RationalMatrix(entries_.size(), 1, entries_);
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

RationalMatrix add(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b, "add");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

RationalMatrix subtract(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b, "subtract");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

RationalMatrix transpose(const RationalMatrix& a) {
  RationalMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

RationalMatrix scale(const Rational& s, const RationalMatrix& a) {
  RationalMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
  }
  return out;
}

RationalMatrix outer(const RationalVector& u, const RationalVector& v) {
  RationalMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
  }
  return out;
}

std::string to_csv(const RationalMatrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ',';
      os << a(i, j).to_string();
    }
    os << '\n';
  }
  return os.str();
}

RationalMatrix matrix_from_csv(std::string_view text) {
  std::vector<Rational> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      entries.push_back(Rational::parse(line.substr(start, comma == line.npos ? line.npos : comma - start)));
      ++count;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows == 0) cols = count;
    if (count != cols) throw std::invalid_argument("ragged CSV matrix");
    ++rows;
  }
  return RationalMatrix(rows, cols, std::move(entries));
}

}  // namespace steinermat
