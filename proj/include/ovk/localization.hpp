#pragma once

#include "ovk/hodge.hpp"
#include "ovk/open_invariants.hpp"
#include "ovk/psi_polynomial.hpp"
#include "ovk/rational.hpp"

#include <string>
#include <vector>

namespace ovk {

/// Real U(1) representation: a 2-dimensional summand (w) per weight plus
/// `trivial_count` copies of the trivial line (0)_R.
struct WeightList {
  std::vector<Rational> weights;
  int trivial_count = 0;

  /// Euler class is euler_scalar() * lambda^euler_lambda_power(); any
  /// trivial real summand makes it zero.
  Rational euler_scalar() const;
  int euler_lambda_power() const { return static_cast<int>(weights.size()); }

  /// Real dimension.
  int real_dimension() const { return 2 * static_cast<int>(weights.size()) + trivial_count; }

  /// Multiset equality.
  friend bool operator==(const WeightList& a, const WeightList& b);
};

/// H^0(D^2, S^1; L(2d), L(2d)_R): weights j/d for j = 1..d and one (0)_R.
WeightList tangent_weights_H0(int degree);

/// Moving weights j/n - a, j = 1..n-1, of the disc obstruction space.
WeightList obstruction_weights_H1(int n, long framing);

enum class FixedLocusKind { PointDisc, PointNodal, Stacky };

struct FixedLocusDescriptor {
  int genus = 0;
  std::vector<int> parts;
  FixedLocusKind kind = FixedLocusKind::Stacky;

  static FixedLocusDescriptor from_key(const OpenInvariantKey& key);

  int boundaries() const { return static_cast<int>(parts.size()); }
  int degree() const;
  /// n_1 * ... * n_h, the degree of the cover of the fixed component.
  Rational automorphism_order() const;
  /// Dimension of Mbar_{g,h}; zero for the point loci.
  int moduli_dimension() const;
};

/// Node smoothing factor (lambda_coeff * lambda - psi_coeff * psi_mark).
struct NodeFactor {
  int mark = 0;
  Rational lambda_coeff;
  Rational psi_coeff;
};

/// scalar * lambda^lambda_power
///   * prod_{t in twists} c_g(E^dual(t lambda)) / prod_{t in inverse_twists} c_g(E^dual(t lambda))
///   * prod nodes / prod inverse_nodes
struct EulerExpression {
  int genus = 0;
  int marks = 0;
  Rational scalar{1};
  int lambda_power = 0;
  std::vector<Rational> twists;
  std::vector<Rational> inverse_twists;
  std::vector<NodeFactor> nodes;
  std::vector<NodeFactor> inverse_nodes;

  HodgeExpr hodge_numerator() const;
  HodgeExpr hodge_denominator() const;

  /// Expands the node factors (inverses by nilpotent geometric expansion)
  /// with psi degree capped at `cap`; lambda coefficients are carried with
  /// `window` known orders above their leading exponent.
  PsiPolynomial psi_part(int cap, int window) const;

  friend EulerExpression operator*(const EulerExpression& a, const EulerExpression& b);
  friend EulerExpression operator/(const EulerExpression& a, const EulerExpression& b);

  std::string str() const;
};

/// Equivariant Euler class of the obstruction bundle on the fixed component.
EulerExpression obstruction_euler(const FixedLocusDescriptor& locus, long framing);

/// Equivariant Euler class of the virtual normal bundle of the fixed component.
EulerExpression virtual_normal_euler(const FixedLocusDescriptor& locus);

/// C(g;h|d;n|a) by U(1) localization on the single fixed component.
/// Supported: g = 0 (any h), or g >= 1 with a in {0, 1}.
Rational localize_open(const OpenInvariantKey& key);

/// Unevaluated integrand over Mbar_{g,h} x BU(1), normalized as
/// prefactor * lambda^(2h-3) * prod c_g(E^dual(t lambda)) / prod (lambda - n_i psi_i).
struct SymbolicIntegrand {
  OpenInvariantKey key;
  EulerExpression integrand;

  /// Mumford-reduced product of the Hodge factors.
  HodgeExpr reduced_class_part() const;
  /// True when the class part reduces to a multiple of lambda_g times a
  /// pure power of lambda, which the engine can integrate.
  bool integrable() const;
  bool vanishes() const { return integrand.scalar.is_zero(); }
  std::string str() const;
};

SymbolicIntegrand symbolic_integrand(const OpenInvariantKey& key);

}  // namespace ovk
