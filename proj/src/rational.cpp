#include "steinermat/rational.hpp"

#include <stdexcept>

namespace steinermat {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s, bool allow_sign) {
    std::size_t start = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
      }
    }
    return mpz_class(std::string(s));
  };
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  mpz_class num = parse_int(text.substr(0, slash), true);
  mpz_class den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace steinermat
