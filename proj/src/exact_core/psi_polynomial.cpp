#include "ovk/psi_polynomial.hpp"

#include "ovk/errors.hpp"

#include <numeric>
#include <sstream>

namespace ovk {

int total_degree(const PsiExponents& exponents) { return std::accumulate(exponents.begin(), exponents.end(), 0); }

PsiPolynomial::PsiPolynomial(int marks, int cap) : marks_(marks), cap_(cap) {
  if (marks < 0) throw InvalidArgument("negative number of psi classes");
}

PsiPolynomial PsiPolynomial::constant(int marks, int cap, const TruncatedSeries& value) {
  PsiPolynomial out(marks, cap);
  out.add_term(PsiExponents(static_cast<std::size_t>(marks), 0), value);
  return out;
}

PsiPolynomial PsiPolynomial::psi(int marks, int cap, int index, const TruncatedSeries& value) {
  if (index < 0 || index >= marks) throw InvalidArgument("psi index out of range");
  PsiExponents e(static_cast<std::size_t>(marks), 0);
  e[static_cast<std::size_t>(index)] = 1;
  PsiPolynomial out(marks, cap);
  out.add_term(e, value);
  return out;
}

void PsiPolynomial::add_term(const PsiExponents& exponents, const TruncatedSeries& value) {
  if (static_cast<int>(exponents.size()) != marks_) throw InvalidArgument("psi exponent vector has wrong length");
  if (total_degree(exponents) > cap_) return;
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(exponents, value);
  } else {
    it->second = it->second + value;
    // The constant slot stays so constant_term() keeps its meaning.
    if (it->second.is_zero() && total_degree(exponents) > 0) terms_.erase(it);
  }
}

const TruncatedSeries& PsiPolynomial::constant_term() const {
  auto it = terms_.find(PsiExponents(static_cast<std::size_t>(marks_), 0));
  if (it == terms_.end()) throw ZeroLeadingCoefficient("psi polynomial has no constant term");
  return it->second;
}

void PsiPolynomial::check_compatible(const PsiPolynomial& other) const {
  if (marks_ != other.marks_ || cap_ != other.cap_) {
    throw InvalidArgument("psi polynomials over different moduli spaces");
  }
}

PsiPolynomial operator+(const PsiPolynomial& a, const PsiPolynomial& b) {
  a.check_compatible(b);
  PsiPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

PsiPolynomial operator-(const PsiPolynomial& a, const PsiPolynomial& b) {
  a.check_compatible(b);
  PsiPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

PsiPolynomial operator*(const PsiPolynomial& a, const PsiPolynomial& b) {
  a.check_compatible(b);
  PsiPolynomial out(a.marks_, a.cap_);
  PsiExponents e(static_cast<std::size_t>(a.marks_));
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > a.cap_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

PsiPolynomial operator*(const TruncatedSeries& s, const PsiPolynomial& a) {
  PsiPolynomial out(a.marks_, a.cap_);
  for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
  return out;
}

PsiPolynomial PsiPolynomial::inverse() const {
  const TruncatedSeries inv0 = constant_term().inverse();
  PsiPolynomial nilpotent(marks_, cap_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) > 0) nilpotent.add_term(e, -(c * inv0));
  }
  // 1/P = inv0 * sum_{k=0}^{cap} (-N inv0)^k
  const int width = inv0.order() - inv0.lowest();
  PsiPolynomial sum = constant(marks_, cap_, TruncatedSeries::monomial(Rational(1), 0, width));
  PsiPolynomial power = sum;
  for (int k = 1; k <= cap_; ++k) {
    power = power * nilpotent;
    sum = sum + power;
  }
  return inv0 * sum;
}

std::string PsiPolynomial::str(const std::string& variable) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str(variable) << ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*psi_" << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ovk
