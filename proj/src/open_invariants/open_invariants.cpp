#include "ovk/open_invariants.hpp"

#include "ovk/errors.hpp"
#include "ovk/hodge.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace ovk {

OpenInvariantKey::OpenInvariantKey(int genus, int boundaries, int degree, std::vector<int> parts, long framing)
    : genus_(genus), degree_(degree), parts_(std::move(parts)), framing_(framing) {
  if (genus < 0) throw InvalidArgument("genus must be >= 0");
  if (boundaries < 1) throw InvalidArgument("boundary count must be >= 1");
  if (degree < 1) throw InvalidArgument("degree must be >= 1");
  if (static_cast<int>(parts_.size()) != boundaries) {
    throw InvalidArgument("expected " + std::to_string(boundaries) + " winding parts, got " +
                          std::to_string(parts_.size()));
  }
  if (std::any_of(parts_.begin(), parts_.end(), [](int n) { return n < 1; })) {
    throw InvalidArgument("winding parts must be positive");
  }
  if (std::accumulate(parts_.begin(), parts_.end(), 0) != degree) {
    throw InvalidArgument("winding parts must sum to the degree");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

OpenInvariantKey OpenInvariantKey::from_parts(int genus, std::vector<int> parts, long framing) {
  const int h = static_cast<int>(parts.size());
  const int d = std::accumulate(parts.begin(), parts.end(), 0);
  return OpenInvariantKey(genus, h, d, std::move(parts), framing);
}

OpenInvariantKey OpenInvariantKey::with_framing(long framing) const {
  OpenInvariantKey out = *this;
  out.framing_ = framing;
  return out;
}

std::string OpenInvariantKey::str() const {
  std::ostringstream os;
  os << "C(" << genus_ << ";" << boundaries() << "|" << degree_ << ";";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << "|" << framing_ << ")";
  return os.str();
}

Rational winding_factor(int n, long framing) {
  if (n < 1) throw InvalidArgument("winding_factor requires n >= 1");
  Rational product(1);
  for (long j = 1; j < n; ++j) product *= Rational(j - static_cast<long>(n) * framing);
  return product / factorial(n - 1);
}

bool closed_form_supported(const OpenInvariantKey& key) {
  return key.genus() == 0 || key.framing() == 0 || key.framing() == 1;
}

Rational open_invariant(const OpenInvariantKey& key) {
  if (!closed_form_supported(key)) {
    throw UnsupportedRegime(key.str() + ": no closed form for g >= 1 away from a in {0, 1}");
  }
  const int h = key.boundaries();
  const Rational d(key.degree());
  const long a = key.framing();
  if (key.genus() > 0) {
    // a in {0, 1}; the framing factor a(1-a) kills every h > 1 term.
    if (h > 1) return Rational(0);
    const Rational value = d.pow(2 * key.genus() - 2) * bg(key.genus());
    return (a == 1 && key.degree() % 2 == 0) ? -value : value;
  }
  Rational windings(1);
  for (int n : key.parts()) windings *= winding_factor(n, a);
  if (h == 1) return windings / (d * d);
  const Rational framing_factor = Rational(a) * Rational(1 - a);
  if (h == 2) return framing_factor * windings / d;
  return framing_factor.pow(h - 1) * windings * d.pow(h - 3);
}

bool verify_framing_symmetry(const OpenInvariantKey& key) {
  const Rational direct = open_invariant(key);
  const Rational mirrored = open_invariant(key.with_framing(1 - key.framing()));
  const Rational sign = ((key.degree() - key.boundaries()) % 2 == 0) ? Rational(1) : Rational(-1);
  return mirrored == sign * direct;
}

Rational integer_invariant_resum(const std::vector<Rational>& values, int degree) {
  Rational sum(0);
  for (int k = 1; k <= degree; ++k) {
    if (degree % k != 0) continue;
    sum += values.at(static_cast<std::size_t>(degree / k - 1)) / Rational(k * k);
  }
  return sum;
}

IntegerInvariants integer_invariants(int dmax, long framing) {
  if (dmax < 1) throw InvalidArgument("integer_invariants requires dmax >= 1");
  IntegerInvariants out;
  out.framing = framing;
  out.values.reserve(static_cast<std::size_t>(dmax));
  for (int d = 1; d <= dmax; ++d) {
    const bool odd = (framing * d) % 2 != 0;
    const Rational lhs = (odd ? Rational(-1) : Rational(1)) * open_invariant(OpenInvariantKey::from_parts(0, {d}, framing));
    // N_d is the k = 1 term; every other divisor term is already known.
    Rational known(0);
    for (int k = 2; k <= d; ++k) {
      if (d % k == 0) known += out.values[static_cast<std::size_t>(d / k - 1)] / Rational(k * k);
    }
    out.values.push_back(lhs - known);
    if (!out.values.back().is_integer()) out.non_integral_degrees.push_back(d);
  }
  return out;
}

TruncatedSeries open_potential_series(int degree, int gmax) {
  if (degree < 1 || gmax < 0) throw InvalidArgument("open_potential_series requires d >= 1, gmax >= 0");
  std::vector<Rational> coeffs(static_cast<std::size_t>(2 * gmax + 1));
  for (int g = 0; g <= gmax; ++g) {
    coeffs[static_cast<std::size_t>(2 * g)] = open_invariant(OpenInvariantKey::from_parts(g, {degree}, 0));
  }
  return TruncatedSeries(-1, std::move(coeffs), 2 * gmax);
}

TruncatedSeries disc_cover_series(int degree, int gmax) {
  if (degree < 1 || gmax < 0) throw InvalidArgument("disc_cover_series requires d >= 1, gmax >= 0");
  const TruncatedSeries denom = Rational(2 * degree) * sin_series(Rational(degree, 2), 2 * gmax + 2).trimmed();
  return denom.inverse().truncated(2 * gmax);
}

bool verify_disc_ov(int degree, int gmax) {
  return open_potential_series(degree, gmax).agrees_through(disc_cover_series(degree, gmax), 2 * gmax - 1);
}

std::vector<std::vector<int>> partitions_into(int total, int count) {
  std::vector<std::vector<int>> out;
  if (count < 1 || total < count) return out;
  std::vector<int> current;
  std::function<void(int, int, int)> rec = [&](int remaining, int slots, int max_part) {
    if (slots == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (int part = std::min(max_part, remaining - (slots - 1)); part >= 1; --part) {
      if (part * slots < remaining) break;
      current.push_back(part);
      rec(remaining - part, slots - 1, part);
      current.pop_back();
    }
  };
  rec(total, count, total);
  return out;
}

}  // namespace ovk
