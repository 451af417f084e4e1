#pragma once

#include "ovk/series.hpp"

#include <map>
#include <string>
#include <vector>

namespace ovk {

/// Exponent vector (k_1, ..., k_h) of a monomial psi_1^k_1 ... psi_h^k_h.
using PsiExponents = std::vector<int>;

/// Polynomial in nilpotent classes psi_1..psi_h with series coefficients in
/// the equivariant parameter. Monomials of total degree above `cap` vanish.
class PsiPolynomial {
 public:
  PsiPolynomial(int marks, int cap);

  static PsiPolynomial constant(int marks, int cap, const TruncatedSeries& value);
  /// value * psi_index (index is 0-based).
  static PsiPolynomial psi(int marks, int cap, int index, const TruncatedSeries& value);

  int marks() const { return marks_; }
  int cap() const { return cap_; }
  const std::map<PsiExponents, TruncatedSeries>& terms() const { return terms_; }

  /// Adds value * psi^exponents; dropped when the total degree exceeds the cap.
  void add_term(const PsiExponents& exponents, const TruncatedSeries& value);

  /// Coefficient of psi^0; throws if the polynomial has no constant term.
  const TruncatedSeries& constant_term() const;

  friend PsiPolynomial operator+(const PsiPolynomial& a, const PsiPolynomial& b);
  friend PsiPolynomial operator-(const PsiPolynomial& a, const PsiPolynomial& b);
  friend PsiPolynomial operator*(const PsiPolynomial& a, const PsiPolynomial& b);
  friend PsiPolynomial operator*(const TruncatedSeries& s, const PsiPolynomial& a);

  /// Inverse via P0^-1 * sum_k (-(P - P0) P0^-1)^k, which terminates because
  /// the non-constant part is nilpotent under the cap.
  PsiPolynomial inverse() const;

  std::string str(const std::string& variable = "lambda") const;

 private:
  void check_compatible(const PsiPolynomial& other) const;

  int marks_;
  int cap_;
  std::map<PsiExponents, TruncatedSeries> terms_;
};

int total_degree(const PsiExponents& exponents);

}  // namespace ovk
