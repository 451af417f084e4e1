#include "ovk/errors.hpp"
#include "ovk/hodge.hpp"

#include <numeric>
#include <sstream>

namespace ovk {

int HodgeMonomial::chern_degree() const {
  int degree = 0;
  for (std::size_t i = 0; i < chern.size(); ++i) degree += static_cast<int>(i + 1) * chern[i];
  return degree;
}

HodgeExpr::HodgeExpr(int genus) : genus_(genus) {
  if (genus < 0) throw InvalidArgument("negative genus");
}

HodgeExpr HodgeExpr::constant(int genus, const Rational& value) {
  HodgeExpr out(genus);
  out.add_term(HodgeMonomial{0, std::vector<int>(static_cast<std::size_t>(genus), 0)}, value);
  return out;
}

HodgeExpr HodgeExpr::chern(int genus, int i) {
  if (i < 0) throw InvalidArgument("negative Chern class index");
  if (i == 0) return constant(genus, Rational(1));
  HodgeExpr out(genus);
  if (i > genus) return out;
  HodgeMonomial m{0, std::vector<int>(static_cast<std::size_t>(genus), 0)};
  m.chern[static_cast<std::size_t>(i - 1)] = 1;
  out.add_term(m, Rational(1));
  return out;
}

HodgeExpr HodgeExpr::lambda(int genus, int power) {
  HodgeExpr out(genus);
  out.add_term(HodgeMonomial{power, std::vector<int>(static_cast<std::size_t>(genus), 0)}, Rational(1));
  return out;
}

HodgeExpr HodgeExpr::dual_twisted_top_chern(int genus, const Rational& twist) {
  HodgeExpr out(genus);
  for (int i = 0; i <= genus; ++i) {
    const Rational coeff = ((i % 2 == 0) ? Rational(1) : Rational(-1)) * twist.pow(genus - i);
    out = out + coeff * (chern(genus, i) * lambda(genus, genus - i));
  }
  return out;
}

void HodgeExpr::add_term(const HodgeMonomial& m, const Rational& c) {
  if (static_cast<int>(m.chern.size()) != genus_) throw InvalidArgument("Hodge monomial has wrong genus");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool HodgeExpr::has_chern_classes() const {
  for (const auto& [m, c] : terms_) {
    if (m.chern_degree() > 0) return true;
  }
  return false;
}

bool HodgeExpr::as_lambda_monomial(Rational& coefficient, int& power) const {
  if (terms_.size() > 1 || has_chern_classes()) return false;
  if (terms_.empty()) {
    coefficient = Rational(0);
    power = 0;
    return true;
  }
  coefficient = terms_.begin()->second;
  power = terms_.begin()->first.lambda_power;
  return true;
}

void HodgeExpr::check_genus(const HodgeExpr& other) const {
  if (genus_ != other.genus_) throw InvalidArgument("Hodge expressions of different genus");
}

HodgeExpr operator+(const HodgeExpr& a, const HodgeExpr& b) {
  a.check_genus(b);
  HodgeExpr out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

HodgeExpr operator-(const HodgeExpr& a, const HodgeExpr& b) {
  a.check_genus(b);
  HodgeExpr out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

HodgeExpr operator*(const HodgeExpr& a, const HodgeExpr& b) {
  a.check_genus(b);
  HodgeExpr out(a.genus_);
  HodgeMonomial m{0, std::vector<int>(static_cast<std::size_t>(a.genus_), 0)};
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      m.lambda_power = ma.lambda_power + mb.lambda_power;
      for (std::size_t i = 0; i < m.chern.size(); ++i) m.chern[i] = ma.chern[i] + mb.chern[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

HodgeExpr operator*(const Rational& s, const HodgeExpr& a) {
  HodgeExpr out(a.genus_);
  for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
  return out;
}

std::string HodgeExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = c.abs();
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.chern.size(); ++i) {
      if (m.chern[i] == 0) continue;
      std::string f = "c" + std::to_string(i + 1);
      if (m.chern[i] != 1) f += "^" + std::to_string(m.chern[i]);
      factors.push_back(f);
    }
    if (m.lambda_power != 0) {
      std::string f = "lambda";
      if (m.lambda_power != 1) f += "^" + std::to_string(m.lambda_power);
      factors.push_back(f);
    }
    if (factors.empty() || mag != Rational(1)) factors.insert(factors.begin(), mag.str());
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

}  // namespace ovk
