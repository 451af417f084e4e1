#pragma once

#include "ovk/rational.hpp"

#include <string>
#include <vector>

namespace ovk {

/// Laurent series sum_{k=lowest}^{order-1} c_k x^k with exact coefficients.
///
/// Coefficients at exponents >= order are unknown, never implicitly zero:
/// asking for one throws TruncationError. Every arithmetic operation tracks
/// the tightest order at which its result is still fully determined.
class TruncatedSeries {
 public:
  /// `coefficients[i]` is the coefficient of x^(lowest+i). Missing entries up
  /// to `order` are known zeros.
  TruncatedSeries(int lowest, std::vector<Rational> coefficients, int order);

  static TruncatedSeries zero(int order);
  static TruncatedSeries monomial(const Rational& coefficient, int exponent, int order);

  int lowest() const { return lowest_; }
  int order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  /// Coefficient of x^exponent; zero below `lowest`, throws at or above `order`.
  Rational coeff(int exponent) const;

  bool is_zero() const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a);

  /// Multiplicative inverse; throws ZeroLeadingCoefficient if the first
  /// stored coefficient is 0.
  TruncatedSeries inverse() const;

  /// Drops leading zero coefficients, raising `lowest` accordingly.
  TruncatedSeries trimmed() const;

  /// Multiplies by x^shift.
  TruncatedSeries shifted(int shift) const;

  /// Drops information at and beyond `new_order`. Extending is refused.
  TruncatedSeries truncated(int new_order) const;

  /// Same coefficients and same truncation order (leading zeros ignored).
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  /// True when both series agree at every exponent <= `last_exponent`.
  bool agrees_through(const TruncatedSeries& other, int last_exponent) const;

  std::string str(const std::string& variable = "x") const;

 private:
  int lowest_;
  std::vector<Rational> coefficients_;
  int order_;
};

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_inverse(const TruncatedSeries& a);

/// Taylor expansion of sin(scale * x) valid below x^order.
TruncatedSeries sin_series(const Rational& scale, int order);

}  // namespace ovk
