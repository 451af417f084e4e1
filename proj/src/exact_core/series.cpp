#include "ovk/series.hpp"

#include "ovk/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ovk {

TruncatedSeries::TruncatedSeries(int lowest, std::vector<Rational> coefficients, int order)
    : lowest_(lowest), coefficients_(std::move(coefficients)), order_(order) {
  const int width = std::max(0, order_ - lowest_);
  if (static_cast<int>(coefficients_.size()) > width) {
    throw InvalidArgument("series has coefficients at or beyond its truncation order");
  }
  coefficients_.resize(static_cast<std::size_t>(width));
}

TruncatedSeries TruncatedSeries::zero(int order) { return TruncatedSeries(std::min(0, order), {}, order); }

TruncatedSeries TruncatedSeries::monomial(const Rational& coefficient, int exponent, int order) {
  if (exponent >= order) throw TruncationError("monomial exponent at or beyond truncation order");
  return TruncatedSeries(exponent, {coefficient}, order);
}

Rational TruncatedSeries::coeff(int exponent) const {
  if (exponent >= order_) {
    throw TruncationError("coefficient x^" + std::to_string(exponent) + " requested from a series known below x^" +
                          std::to_string(order_));
  }
  if (exponent < lowest_) return Rational(0);
  return coefficients_[static_cast<std::size_t>(exponent - lowest_)];
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::operator-() const {
  std::vector<Rational> out;
  out.reserve(coefficients_.size());
  for (const auto& c : coefficients_) out.push_back(-c);
  return TruncatedSeries(lowest_, std::move(out), order_);
}

namespace {

TruncatedSeries add_with_sign(const TruncatedSeries& a, const TruncatedSeries& b, int sign) {
  const int order = std::min(a.order(), b.order());
  const int lowest = std::min({a.lowest(), b.lowest(), order});
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(order - lowest));
  for (int k = lowest; k < order; ++k) {
    Rational c = a.coeff(k);
    if (sign > 0) {
      c += b.coeff(k);
    } else {
      c -= b.coeff(k);
    }
    out.push_back(std::move(c));
  }
  return TruncatedSeries(lowest, std::move(out), order);
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add_with_sign(a, b, 1); }
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return add_with_sign(a, b, -1); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int lowest = a.lowest_ + b.lowest_;
  const int order = std::min(a.lowest_ + b.order_, b.lowest_ + a.order_);
  const int width = std::max(0, order - lowest);
  std::vector<Rational> out(static_cast<std::size_t>(width));
  const int na = static_cast<int>(a.coefficients_.size());
  const int nb = static_cast<int>(b.coefficients_.size());
  for (int i = 0; i < na && i < width; ++i) {
    const auto& ai = a.coefficients_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; j < nb && i + j < width; ++j) {
      const auto& bj = b.coefficients_[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return TruncatedSeries(std::min(lowest, order), std::move(out), order);
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
  std::vector<Rational> out;
  out.reserve(a.coefficients_.size());
  for (const auto& c : a.coefficients_) out.push_back(s * c);
  return TruncatedSeries(a.lowest_, std::move(out), a.order_);
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coefficients_.empty() || coefficients_.front().is_zero()) {
    throw ZeroLeadingCoefficient("cannot invert a series whose first stored coefficient is zero");
  }
  // x^L (c0 + c1 x + ...) known through N terms inverts to x^-L (b0 + ...) with N terms.
  const int terms = static_cast<int>(coefficients_.size());
  std::vector<Rational> b(static_cast<std::size_t>(terms));
  const Rational inv_c0 = Rational(1) / coefficients_.front();
  b[0] = inv_c0;
  for (int k = 1; k < terms; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) {
      const auto& cj = coefficients_[static_cast<std::size_t>(j)];
      if (!cj.is_zero()) acc += cj * b[static_cast<std::size_t>(k - j)];
    }
    b[static_cast<std::size_t>(k)] = -acc * inv_c0;
  }
  return TruncatedSeries(-lowest_, std::move(b), -lowest_ + terms);
}

TruncatedSeries TruncatedSeries::trimmed() const {
  std::size_t skip = 0;
  while (skip < coefficients_.size() && coefficients_[skip].is_zero()) ++skip;
  std::vector<Rational> rest(coefficients_.begin() + static_cast<std::ptrdiff_t>(skip), coefficients_.end());
  return TruncatedSeries(lowest_ + static_cast<int>(skip), std::move(rest), order_);
}

TruncatedSeries TruncatedSeries::shifted(int shift) const {
  return TruncatedSeries(lowest_ + shift, coefficients_, order_ + shift);
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  if (new_order > order_) {
    throw TruncationError("refusing to extend a series beyond its known order");
  }
  const int lowest = std::min(lowest_, new_order);
  std::vector<Rational> out;
  for (int k = lowest; k < new_order; ++k) out.push_back(coeff(k));
  return TruncatedSeries(lowest, std::move(out), new_order);
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.order_ == b.order_ && a.agrees_through(b, a.order_ - 1);
}

bool TruncatedSeries::agrees_through(const TruncatedSeries& other, int last_exponent) const {
  const int lowest = std::min(lowest_, other.lowest_);
  for (int k = lowest; k <= last_exponent; ++k) {
    if (coeff(k) != other.coeff(k)) return false;
  }
  return true;
}

std::string TruncatedSeries::str(const std::string& variable) const {
  std::ostringstream os;
  bool first = true;
  for (int k = lowest_; k < order_; ++k) {
    const Rational c = coeff(k);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = c.abs();
    if (k == 0) {
      os << mag;
    } else {
      if (mag != Rational(1)) os << mag << "*";
      os << variable;
      if (k != 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  os << " + O(" << variable << "^" << order_ << ")";
  return os.str();
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
TruncatedSeries series_inverse(const TruncatedSeries& a) { return a.inverse(); }

TruncatedSeries sin_series(const Rational& scale, int order) {
  if (order < 1) throw InvalidArgument("sin_series requires order >= 1");
  std::vector<Rational> out(static_cast<std::size_t>(order));
  // sin(s x) = sum_k (-1)^k s^(2k+1) x^(2k+1) / (2k+1)!
  Rational power = scale;
  Rational fact(1);
  for (int k = 1; k < order; k += 2) {
    if (k > 1) {
      power *= scale * scale;
      fact *= Rational(k - 1) * Rational(k);
    }
    const Rational term = power / fact;
    out[static_cast<std::size_t>(k)] = ((k / 2) % 2 == 0) ? term : -term;
  }
  return TruncatedSeries(0, std::move(out), order);
}

}  // namespace ovk
