#pragma once

#include "ovk/rational.hpp"
#include "ovk/series.hpp"

#include <string>
#include <vector>

namespace ovk {

/// Labels the framed disc invariant C(g;h | d; n_1..n_h | a).
class OpenInvariantKey {
 public:
  /// Validates ranges and that the parts sum to `degree`; parts are stored
  /// in non-increasing order.
  OpenInvariantKey(int genus, int boundaries, int degree, std::vector<int> parts, long framing);

  /// Key with h = parts.size() and d = sum of parts.
  static OpenInvariantKey from_parts(int genus, std::vector<int> parts, long framing);

  int genus() const { return genus_; }
  int boundaries() const { return static_cast<int>(parts_.size()); }
  int degree() const { return degree_; }
  const std::vector<int>& parts() const { return parts_; }
  long framing() const { return framing_; }

  OpenInvariantKey with_framing(long framing) const;

  /// "C(g;h|d;n1,...,nh|a)"
  std::string str() const;

  friend bool operator==(const OpenInvariantKey&, const OpenInvariantKey&) = default;
  friend auto operator<=>(const OpenInvariantKey&, const OpenInvariantKey&) = default;

 private:
  int genus_;
  int degree_;
  std::vector<int> parts_;
  long framing_;
};

/// prod_{j=1}^{n-1} (j - n a) / (n-1)!.
Rational winding_factor(int n, long framing);

/// True when open_invariant can evaluate the key in closed form.
bool closed_form_supported(const OpenInvariantKey& key);

/// Closed-form value. Throws UnsupportedRegime for g >= 1 with a outside {0, 1}.
Rational open_invariant(const OpenInvariantKey& key);

/// C(..|1-a) == (-1)^(d-h) C(..|a).
bool verify_framing_symmetry(const OpenInvariantKey& key);

struct IntegerInvariants {
  long framing = 0;
  std::vector<Rational> values;  // values[d-1] = N_d
  std::vector<int> non_integral_degrees;

  bool integral() const { return non_integral_degrees.empty(); }
};

/// Solves (-1)^(a d) C(0;1|d;d|a) = sum_{k|d} N_{d/k} / k^2 for N_1..N_dmax.
IntegerInvariants integer_invariants(int dmax, long framing);

/// sum_{k|d} N_{d/k} / k^2, the inverse of the elimination above.
Rational integer_invariant_resum(const std::vector<Rational>& values, int degree);

/// sum_{g<=gmax} lambda^(2g-1) C(g;1|d;d|0), valid through lambda^(2 gmax - 1).
TruncatedSeries open_potential_series(int degree, int gmax);

/// Laurent expansion of 1/(2 d sin(lambda d / 2)) through lambda^(2 gmax - 1).
TruncatedSeries disc_cover_series(int degree, int gmax);

bool verify_disc_ov(int degree, int gmax);

/// All multisets of `count` positive integers summing to `total`, each in
/// non-increasing order, listed in descending lexicographic order.
std::vector<std::vector<int>> partitions_into(int total, int count);

}  // namespace ovk
