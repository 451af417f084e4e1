#include "ovk/errors.hpp"
#include "ovk/hodge.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace ovk {

BgTable::BgTable(int gmax) {
  if (gmax < 0) throw InvalidArgument("bg_table requires gmax >= 0");
  // (u/2) / sin(u/2) through u^(2 gmax).
  const TruncatedSeries half_sin = sin_series(Rational(1, 2), 2 * gmax + 2).trimmed();
  const TruncatedSeries half_u = TruncatedSeries::monomial(Rational(1, 2), 1, 2 * gmax + 2);
  const TruncatedSeries ratio = half_u * half_sin.inverse();
  for (int k = 1; k < 2 * gmax; k += 2) {
    if (!ratio.coeff(k).is_zero()) throw Error("odd coefficient of (u/2)/sin(u/2) did not vanish");
  }
  values_.reserve(static_cast<std::size_t>(gmax + 1));
  for (int g = 0; g <= gmax; ++g) values_.push_back(ratio.coeff(2 * g));
}

const Rational& BgTable::operator[](int g) const {
  if (g < 0 || g > gmax()) throw InvalidArgument("genus outside the b_g table");
  return values_[static_cast<std::size_t>(g)];
}

BgTable bg_table(int gmax) { return BgTable(gmax); }

Rational bg(int g) {
  static std::mutex mutex;
  static BgTable table(16);
  std::lock_guard lock(mutex);
  if (g > table.gmax()) table = BgTable(std::max(g, 2 * table.gmax()));
  return table[g];
}

namespace {

void check_marks(const std::vector<int>& exponents) {
  if (exponents.size() < 3) throw InvalidArgument("psi integrals on Mbar_{0,h} need h >= 3");
  if (std::any_of(exponents.begin(), exponents.end(), [](int k) { return k < 0; })) {
    throw InvalidArgument("negative psi exponent");
  }
}

Rational string_recursion(std::vector<int> k) {
  const int h = static_cast<int>(k.size());
  if (std::accumulate(k.begin(), k.end(), 0) != h - 3) return Rational(0);
  if (h == 3) return Rational(1);
  // A dimension-matching insertion list with h > 3 always contains a tau_0.
  auto zero = std::find(k.begin(), k.end(), 0);
  k.erase(zero);
  Rational total(0);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    std::vector<int> lowered = k;
    lowered[i] -= 1;
    total += string_recursion(std::move(lowered));
  }
  return total;
}

}  // namespace

Rational psi_integral_genus0(const std::vector<int>& exponents) {
  check_marks(exponents);
  const int h = static_cast<int>(exponents.size());
  if (std::accumulate(exponents.begin(), exponents.end(), 0) != h - 3) return Rational(0);
  Rational out = factorial(h - 3);
  for (int k : exponents) out /= factorial(k);
  return out;
}

Rational psi_integral_oracle(const std::vector<int>& exponents) {
  check_marks(exponents);
  return string_recursion(exponents);
}

Rational closed_cover_contribution(int genus, int degree) {
  if (degree < 1 || genus < 0) throw InvalidArgument("closed_cover_contribution requires d >= 1, g >= 0");
  Rational sum(0);
  for (int g1 = 0; g1 <= genus; ++g1) sum += bg(g1) * bg(genus - g1);
  return Rational(degree).pow(2 * genus - 3) * sum;
}

TruncatedSeries sphere_cover_series(int degree, int gmax) {
  if (degree < 1 || gmax < 0) throw InvalidArgument("sphere_cover_series requires d >= 1, gmax >= 0");
  const TruncatedSeries two_sin = Rational(2) * sin_series(Rational(degree, 2), 2 * gmax + 2).trimmed();
  const TruncatedSeries inv = (two_sin * two_sin).inverse();
  return (Rational(1) / Rational(degree)) * inv.truncated(2 * gmax - 1);
}

bool verify_sphere_ov(int degree, int gmax) {
  const TruncatedSeries rhs = sphere_cover_series(degree, gmax);
  std::vector<Rational> lhs_coeffs(static_cast<std::size_t>(2 * gmax + 1));
  for (int g = 0; g <= gmax; ++g) {
    lhs_coeffs[static_cast<std::size_t>(2 * g)] = closed_cover_contribution(g, degree);
  }
  const TruncatedSeries lhs(-2, std::move(lhs_coeffs), 2 * gmax - 1);
  return lhs.agrees_through(rhs, 2 * gmax - 2);
}

}  // namespace ovk
