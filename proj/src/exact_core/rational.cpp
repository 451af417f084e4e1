#include "ovk/rational.hpp"

#include "ovk/errors.hpp"

#include <string>

namespace ovk {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidArgument("rational with zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_parts(std::string_view numerator, std::string_view denominator) {
  mpz_class num;
  mpz_class den;
  if (num.set_str(std::string(numerator), 10) != 0 || den.set_str(std::string(denominator), 10) != 0) {
    throw InvalidArgument("malformed rational '" + std::string(numerator) + "/" + std::string(denominator) + "'");
  }
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  return Rational(mpq_class(num, den));
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational");
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_parts(text.front() == '+' ? text.substr(1) : text, "1");
  auto num = text.substr(0, slash);
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  return from_parts(num, text.substr(slash + 1));
}

std::string Rational::numerator_str() const { return value_.get_num().get_str(); }
std::string Rational::denominator_str() const { return value_.get_den().get_str(); }

std::string Rational::str() const {
  if (is_integer()) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw InvalidArgument("zero raised to a negative power");
    return Rational(1) / pow(-exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational factorial(long n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(out));
}

// Generalized binomial n(n-1)...(n-k+1)/k!, valid for negative n.
Rational binomial(long n, long k) {
  if (k < 0) return Rational(0);
  Rational out(1);
  for (long i = 0; i < k; ++i) out *= Rational(n - i);
  return out / factorial(k);
}

}  // namespace ovk
