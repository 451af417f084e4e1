#pragma once

#include "ovk/rational.hpp"
#include "ovk/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace ovk {

/// Monomial lambda^p * c_1^e_1 * ... * c_g^e_g.
struct HodgeMonomial {
  int lambda_power = 0;
  std::vector<int> chern;  // chern[i-1] is the exponent of c_i

  int chern_degree() const;
  auto operator<=>(const HodgeMonomial&) const = default;
};

/// Element of Q[c_1..c_g, lambda], where c_i are the Chern classes of the
/// rank-g Hodge bundle (degree i) and lambda is the equivariant parameter.
class HodgeExpr {
 public:
  explicit HodgeExpr(int genus);

  static HodgeExpr constant(int genus, const Rational& value);
  /// c_i, with c_0 = 1 and c_i = 0 for i > genus.
  static HodgeExpr chern(int genus, int i);
  static HodgeExpr lambda(int genus, int power = 1);
  /// c_g(E^dual(t*lambda)) = sum_{i=0}^g (-1)^i c_i (t*lambda)^(g-i).
  static HodgeExpr dual_twisted_top_chern(int genus, const Rational& twist);

  int genus() const { return genus_; }
  const std::map<HodgeMonomial, Rational>& terms() const { return terms_; }

  void add_term(const HodgeMonomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool has_chern_classes() const;

  /// If the expression is r * lambda^p with no Chern classes, returns true
  /// and fills the pair.
  bool as_lambda_monomial(Rational& coefficient, int& power) const;

  friend HodgeExpr operator+(const HodgeExpr& a, const HodgeExpr& b);
  friend HodgeExpr operator-(const HodgeExpr& a, const HodgeExpr& b);
  friend HodgeExpr operator*(const HodgeExpr& a, const HodgeExpr& b);
  friend HodgeExpr operator*(const Rational& s, const HodgeExpr& a);
  friend bool operator==(const HodgeExpr& a, const HodgeExpr& b) = default;

  /// Deterministic rendering, monomials in descending order.
  std::string str() const;

 private:
  void check_genus(const HodgeExpr& other) const;

  int genus_;
  std::map<HodgeMonomial, Rational> terms_;
};

/// Canonical form modulo the ideal generated by the homogeneous parts of
/// c(E)c(E^dual) - 1. Linear and idempotent.
HodgeExpr mumford_reduce(const HodgeExpr& expr);

/// Checks c_g(E^dual(lambda)) c_g(E^dual(-lambda)) == (-1)^g lambda^(2g) after reduction.
bool lambda_product_identity(int genus);

/// Number of standard monomials of weighted degree `degree` in the quotient ring.
int mumford_quotient_dimension(int genus, int degree);

/// b_0..b_gmax: the even coefficients of (u/2)/sin(u/2).
class BgTable {
 public:
  explicit BgTable(int gmax);
  int gmax() const { return static_cast<int>(values_.size()) - 1; }
  const Rational& operator[](int g) const;
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

BgTable bg_table(int gmax);
/// Shared table, extended on demand. Safe for concurrent callers.
Rational bg(int g);

/// Integral of psi_1^k_1...psi_h^k_h over Mbar_{0,h}: the multinomial
/// coefficient (h-3)!/prod k_i!, or 0 on a dimension mismatch.
Rational psi_integral_genus0(const std::vector<int>& exponents);

/// Same integral by string-equation recursion down to <tau_0^3> = 1.
Rational psi_integral_oracle(const std::vector<int>& exponents);

/// C(g,d) = d^(2g-3) sum_{g1+g2=g} b_g1 b_g2.
Rational closed_cover_contribution(int genus, int degree);

/// Compares sum_{g<=gmax} C(g,d) lambda^(2g-2) with 1/(d (2 sin(lambda d/2))^2).
bool verify_sphere_ov(int degree, int gmax);

/// Laurent expansion of 1/(d (2 sin(lambda d / 2))^2) through lambda^(2 gmax - 2).
TruncatedSeries sphere_cover_series(int degree, int gmax);

}  // namespace ovk
