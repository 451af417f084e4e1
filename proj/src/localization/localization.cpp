#include "ovk/localization.hpp"

#include "ovk/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ovk {

Rational WeightList::euler_scalar() const {
  if (trivial_count > 0) return Rational(0);
  Rational out(1);
  for (const auto& w : weights) out *= w;
  return out;
}

bool operator==(const WeightList& a, const WeightList& b) {
  if (a.trivial_count != b.trivial_count || a.weights.size() != b.weights.size()) return false;
  auto wa = a.weights;
  auto wb = b.weights;
  std::sort(wa.begin(), wa.end());
  std::sort(wb.begin(), wb.end());
  return wa == wb;
}

WeightList tangent_weights_H0(int degree) {
  if (degree < 1) throw InvalidArgument("tangent_weights_H0 requires d >= 1");
  WeightList out;
  for (int j = degree; j >= 1; --j) out.weights.emplace_back(j, degree);
  out.trivial_count = 1;
  return out;
}

WeightList obstruction_weights_H1(int n, long framing) {
  if (n < 1) throw InvalidArgument("obstruction_weights_H1 requires n >= 1");
  WeightList out;
  for (int j = 1; j < n; ++j) out.weights.push_back(Rational(j, n) - Rational(framing));
  return out;
}

FixedLocusDescriptor FixedLocusDescriptor::from_key(const OpenInvariantKey& key) {
  FixedLocusDescriptor out;
  out.genus = key.genus();
  out.parts = key.parts();
  if (out.genus == 0 && out.boundaries() == 1) {
    out.kind = FixedLocusKind::PointDisc;
  } else if (out.genus == 0 && out.boundaries() == 2) {
    out.kind = FixedLocusKind::PointNodal;
  } else {
    out.kind = FixedLocusKind::Stacky;
  }
  return out;
}

int FixedLocusDescriptor::degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Rational FixedLocusDescriptor::automorphism_order() const {
  Rational out(1);
  for (int n : parts) out *= Rational(n);
  return out;
}

int FixedLocusDescriptor::moduli_dimension() const {
  return kind == FixedLocusKind::Stacky ? 3 * genus - 3 + boundaries() : 0;
}

HodgeExpr EulerExpression::hodge_numerator() const {
  HodgeExpr out = HodgeExpr::constant(genus, Rational(1));
  for (const auto& t : twists) out = out * HodgeExpr::dual_twisted_top_chern(genus, t);
  return out;
}

HodgeExpr EulerExpression::hodge_denominator() const {
  HodgeExpr out = HodgeExpr::constant(genus, Rational(1));
  for (const auto& t : inverse_twists) out = out * HodgeExpr::dual_twisted_top_chern(genus, t);
  return out;
}

namespace {

PsiPolynomial node_polynomial(const NodeFactor& node, int marks, int cap, int window) {
  return PsiPolynomial::constant(marks, cap, TruncatedSeries::monomial(node.lambda_coeff, 1, 1 + window)) -
         PsiPolynomial::psi(marks, cap, node.mark, TruncatedSeries::monomial(node.psi_coeff, 0, window));
}

std::string twist_str(const Rational& t) {
  if (t.is_zero()) return "0";
  if (t == Rational(1)) return "lambda";
  if (t == Rational(-1)) return "-lambda";
  return t.str() + "lambda";
}

std::string node_str(const NodeFactor& node) {
  std::ostringstream os;
  os << "(";
  if (node.lambda_coeff != Rational(1)) os << node.lambda_coeff << "*";
  os << "lambda - ";
  if (node.psi_coeff != Rational(1)) os << node.psi_coeff << "*";
  os << "psi_" << node.mark + 1 << ")";
  return os.str();
}

}  // namespace

PsiPolynomial EulerExpression::psi_part(int cap, int window) const {
  const auto one = TruncatedSeries::monomial(Rational(1), 0, window);
  PsiPolynomial numerator = PsiPolynomial::constant(marks, cap, one);
  for (const auto& node : nodes) numerator = numerator * node_polynomial(node, marks, cap, window);
  if (inverse_nodes.empty()) return numerator;
  PsiPolynomial denominator = PsiPolynomial::constant(marks, cap, one);
  for (const auto& node : inverse_nodes) denominator = denominator * node_polynomial(node, marks, cap, window);
  return numerator * denominator.inverse();
}

EulerExpression operator*(const EulerExpression& a, const EulerExpression& b) {
  if (a.genus != b.genus || a.marks != b.marks) throw InvalidArgument("Euler classes on different fixed loci");
  EulerExpression out = a;
  out.scalar *= b.scalar;
  out.lambda_power += b.lambda_power;
  out.twists.insert(out.twists.end(), b.twists.begin(), b.twists.end());
  out.inverse_twists.insert(out.inverse_twists.end(), b.inverse_twists.begin(), b.inverse_twists.end());
  out.nodes.insert(out.nodes.end(), b.nodes.begin(), b.nodes.end());
  out.inverse_nodes.insert(out.inverse_nodes.end(), b.inverse_nodes.begin(), b.inverse_nodes.end());
  return out;
}

EulerExpression operator/(const EulerExpression& a, const EulerExpression& b) {
  if (b.scalar.is_zero()) throw InvalidArgument("division by a vanishing Euler class");
  EulerExpression inverse = b;
  inverse.scalar = Rational(1) / b.scalar;
  inverse.lambda_power = -b.lambda_power;
  std::swap(inverse.twists, inverse.inverse_twists);
  std::swap(inverse.nodes, inverse.inverse_nodes);
  return a * inverse;
}

std::string EulerExpression::str() const {
  std::ostringstream os;
  os << scalar;
  if (lambda_power != 0) os << " * lambda^" << lambda_power;
  const std::string cg = "c_" + std::to_string(genus);
  for (const auto& t : twists) os << " * " << cg << "(E^v(" << twist_str(t) << "))";
  for (const auto& n : nodes) os << " * " << node_str(n);
  if (!inverse_twists.empty() || !inverse_nodes.empty()) {
    os << " / (";
    bool first = true;
    for (const auto& t : inverse_twists) {
      os << (first ? "" : " * ") << cg << "(E^v(" << twist_str(t) << "))";
      first = false;
    }
    for (const auto& n : inverse_nodes) {
      os << (first ? "" : " * ") << node_str(n);
      first = false;
    }
    os << ")";
  }
  return os.str();
}

EulerExpression obstruction_euler(const FixedLocusDescriptor& locus, long framing) {
  EulerExpression out;
  out.genus = locus.genus;
  out.marks = locus.boundaries();
  for (int n : locus.parts) {
    const WeightList disc = obstruction_weights_H1(n, framing);
    out.scalar *= disc.euler_scalar();
    out.lambda_power += disc.euler_lambda_power();
  }
  // h - 1 copies of (a-1) + (-a) from the nodes joining the discs.
  const WeightList node{{Rational(framing - 1), Rational(-framing)}, 0};
  for (int i = 1; i < locus.boundaries(); ++i) {
    out.scalar *= node.euler_scalar();
    out.lambda_power += node.euler_lambda_power();
  }
  if (locus.genus > 0) out.twists = {Rational(framing - 1), Rational(-framing)};
  return out;
}

EulerExpression virtual_normal_euler(const FixedLocusDescriptor& locus) {
  EulerExpression out;
  out.genus = locus.genus;
  out.marks = locus.boundaries();
  // Moving parts of the disc deformations; (0)_R summands are fixed.
  for (int n : locus.parts) {
    WeightList moving = tangent_weights_H0(n);
    moving.trivial_count = 0;
    out.scalar *= moving.euler_scalar();
    out.lambda_power += moving.euler_lambda_power();
  }
  switch (locus.kind) {
    case FixedLocusKind::PointDisc: {
      // Infinitesimal automorphisms (1/d) + (0)_R.
      out.scalar /= Rational(1, locus.degree());
      out.lambda_power -= 1;
      break;
    }
    case FixedLocusKind::PointNodal: {
      // (T P^1)_0 = (1) removed; node smoothing T_0 D_1 (x) T_0 D_2 added.
      out.lambda_power -= 1;
      out.scalar *= Rational(1, locus.parts[0]) + Rational(1, locus.parts[1]);
      out.lambda_power += 1;
      break;
    }
    case FixedLocusKind::Stacky: {
      // + H^0(Sigma_0, O)(1), - h copies of (T P^1)_0 = (1), - H^1(Sigma_0, O)(1).
      out.lambda_power += 1 - locus.boundaries();
      if (locus.genus > 0) out.inverse_twists = {Rational(1)};
      for (int i = 0; i < locus.boundaries(); ++i) {
        out.nodes.push_back(NodeFactor{i, Rational(1, locus.parts[static_cast<std::size_t>(i)]), Rational(1)});
      }
      break;
    }
  }
  return out;
}

namespace {

Rational degree_zero_part(const TruncatedSeries& series, const OpenInvariantKey& key) {
  for (int k = series.lowest(); k < series.order(); ++k) {
    if (k != 0 && !series.coeff(k).is_zero()) {
      throw DimensionMismatch(key.str() + ": localization left a lambda^" + std::to_string(k) + " term");
    }
  }
  return series.coeff(0);
}

int series_window(const FixedLocusDescriptor& locus, int cap) {
  return 4 * (locus.boundaries() + cap) + 2 * locus.genus + 8;
}

}  // namespace

Rational localize_open(const OpenInvariantKey& key) {
  if (!closed_form_supported(key)) {
    throw UnsupportedRegime(key.str() + ": fixed-locus integral needs triple Hodge integrals");
  }
  const auto locus = FixedLocusDescriptor::from_key(key);
  EulerExpression ratio = obstruction_euler(locus, key.framing()) / virtual_normal_euler(locus);
  ratio.scalar /= locus.automorphism_order();
  if (ratio.scalar.is_zero()) return Rational(0);

  if (locus.kind != FixedLocusKind::Stacky) {
    if (ratio.lambda_power != 0) {
      throw DimensionMismatch(key.str() + ": point locus left lambda^" + std::to_string(ratio.lambda_power));
    }
    return ratio.scalar;
  }

  const int h = locus.boundaries();
  if (locus.genus == 0) {
    const int cap = locus.moduli_dimension();
    const PsiPolynomial integrand = ratio.psi_part(cap, series_window(locus, cap));
    TruncatedSeries total = TruncatedSeries::zero(integrand.constant_term().order());
    for (const auto& [exponents, coeff] : integrand.terms()) {
      const Rational value = psi_integral_genus0(exponents);
      if (!value.is_zero()) total = total + value * coeff;
    }
    return ratio.scalar * degree_zero_part(total.shifted(ratio.lambda_power), key);
  }

  // g >= 1, h = 1, a in {0, 1}: one Hodge factor is c_g(E^dual(0)) = (-1)^g lambda_g
  // and the remaining pair collapses by Mumford's relation.
  std::vector<Rational> twists = ratio.twists;
  if (!ratio.inverse_twists.empty() || h != 1) {
    throw UnsupportedRegime(key.str() + ": unexpected Hodge structure");
  }
  auto zero = std::find(twists.begin(), twists.end(), Rational(0));
  if (zero == twists.end()) throw UnsupportedRegime(key.str() + ": no lambda_g factor");
  twists.erase(zero);
  HodgeExpr pair = HodgeExpr::constant(locus.genus, Rational(1));
  for (const auto& t : twists) pair = pair * HodgeExpr::dual_twisted_top_chern(locus.genus, t);
  Rational pair_coeff;
  int pair_power = 0;
  if (!mumford_reduce(pair).as_lambda_monomial(pair_coeff, pair_power)) {
    throw UnsupportedRegime(key.str() + ": Hodge classes survive Mumford reduction");
  }
  const Rational lambda_g_sign = (locus.genus % 2 == 0) ? Rational(1) : Rational(-1);

  // int_{Mbar_{g,1}} psi^k lambda_g is b_g for k = 2g - 2 and vanishes otherwise.
  const int cap = locus.moduli_dimension() - locus.genus;
  const PsiPolynomial integrand = ratio.psi_part(cap, series_window(locus, cap));
  TruncatedSeries total = TruncatedSeries::zero(integrand.constant_term().order());
  for (const auto& [exponents, coeff] : integrand.terms()) {
    if (total_degree(exponents) == cap) total = total + bg(locus.genus) * coeff;
  }
  const Rational factor = ratio.scalar * pair_coeff * lambda_g_sign;
  return factor * degree_zero_part(total.shifted(ratio.lambda_power + pair_power), key);
}

HodgeExpr SymbolicIntegrand::reduced_class_part() const {
  return mumford_reduce(integrand.hodge_numerator());
}

bool SymbolicIntegrand::integrable() const {
  const HodgeExpr reduced = reduced_class_part();
  const int g = integrand.genus;
  if (g == 0) return true;
  if (reduced.terms().size() != 1) return reduced.is_zero();
  std::vector<int> lambda_g(static_cast<std::size_t>(g), 0);
  lambda_g.back() = 1;
  return reduced.terms().begin()->first.chern == lambda_g;
}

std::string SymbolicIntegrand::str() const {
  std::ostringstream os;
  os << key.str() << " = int_{Mbar_{" << key.genus() << "," << key.boundaries() << "} x BU(1)} "
     << integrand.str();
  return os.str();
}

SymbolicIntegrand symbolic_integrand(const OpenInvariantKey& key) {
  const auto locus = FixedLocusDescriptor::from_key(key);
  EulerExpression ratio = obstruction_euler(locus, key.framing()) / virtual_normal_euler(locus);
  ratio.scalar /= locus.automorphism_order();
  // 1/(lambda/n - psi) = n/(lambda - n psi).
  for (auto& node : ratio.inverse_nodes) {
    const Rational n = Rational(1) / node.lambda_coeff;
    ratio.scalar *= n;
    node.lambda_coeff = Rational(1);
    node.psi_coeff *= n;
  }
  // Display order: normal-bundle factor first, then the two obstruction twists.
  std::rotate(ratio.twists.begin(), ratio.twists.end() - static_cast<std::ptrdiff_t>(ratio.twists.empty() ? 0 : 1),
              ratio.twists.end());
  return SymbolicIntegrand{key, std::move(ratio)};
}

}  // namespace ovk
