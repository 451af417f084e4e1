#include "ovk/maslov.hpp"

#include "ovk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>

namespace ovk {

namespace {

std::complex<double> evaluate(const LoopEntry& entry, double theta) {
  std::complex<double> sum(0.0, 0.0);
  for (const auto& term : entry) {
    sum += term.coefficient.to_complex() * std::polar(1.0, term.frequency.to_double() * theta);
  }
  return sum;
}

double wrap(double phase) {
  phase = std::remainder(phase, 2.0 * std::numbers::pi);
  return phase;
}

}  // namespace

MatrixLoop::MatrixLoop(std::vector<std::vector<LoopEntry>> entries, int sample_count)
    : dimension_(static_cast<int>(entries.size())), sample_count_(sample_count), entries_(std::move(entries)) {
  if (dimension_ < 1) throw InvalidArgument("matrix loop needs at least one row");
  for (const auto& row : entries_) {
    if (static_cast<int>(row.size()) != dimension_) throw InvalidArgument("matrix loop must be square");
  }
  if (sample_count_ < 2) throw InvalidArgument("matrix loop needs at least two samples");
}

MatrixLoop::MatrixLoop(int dimension, Sampler sampler, int sample_count)
    : dimension_(dimension), sample_count_(sample_count), sampler_(std::move(sampler)) {
  if (dimension_ < 1) throw InvalidArgument("matrix loop needs dimension >= 1");
  if (!sampler_) throw InvalidArgument("matrix loop sampler is empty");
  if (sample_count_ < 2) throw InvalidArgument("matrix loop needs at least two samples");
}

MatrixLoop MatrixLoop::with_sample_count(int sample_count) const {
  MatrixLoop out = *this;
  if (sample_count < 2) throw InvalidArgument("matrix loop needs at least two samples");
  out.sample_count_ = sample_count;
  return out;
}

Eigen::MatrixXcd MatrixLoop::at(double theta) const {
  if (sampler_) {
    Eigen::MatrixXcd m = sampler_(theta);
    if (m.rows() != dimension_ || m.cols() != dimension_) throw InvalidArgument("sampler returned wrong shape");
    return m;
  }
  Eigen::MatrixXcd m(dimension_, dimension_);
  for (int r = 0; r < dimension_; ++r) {
    for (int c = 0; c < dimension_; ++c) m(r, c) = evaluate(entries_[r][c], theta);
  }
  return m;
}

int maslov_index(const MatrixLoop& loop, const MaslovOptions& options) {
  const int n0 = loop.sample_count();
  if (n0 > options.sample_budget) throw NonConvergent("initial sample count exceeds the budget");
  auto phase = [](std::complex<double> d) { return std::arg(d / std::conj(d)); };

  std::vector<double> thetas(static_cast<std::size_t>(n0) + 1);
  std::vector<std::complex<double>> dets(thetas.size());
  double max_mag = 0.0;
  for (int k = 0; k <= n0; ++k) {
    thetas[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi * k / n0;
    dets[static_cast<std::size_t>(k)] = loop.at(thetas[static_cast<std::size_t>(k)]).determinant();
    max_mag = std::max(max_mag, std::abs(dets[static_cast<std::size_t>(k)]));
  }
  int samples = n0;
  auto check_floor = [&](double theta, std::complex<double> d) {
    if (max_mag == 0.0 || std::abs(d) < options.relative_floor * max_mag) {
      throw DegenerateFrame("determinant vanishes near theta = " + std::to_string(theta));
    }
  };
  for (std::size_t k = 0; k < dets.size(); ++k) check_floor(thetas[k], dets[k]);

  // A step is trusted once its midpoint reproduces it with two small half steps; this also catches aliasing.
  std::function<double(double, std::complex<double>, double, std::complex<double>)> span =
      [&](double ta, std::complex<double> da, double tb, std::complex<double> db) -> double {
    const double step = wrap(phase(db) - phase(da));
    const double tm = 0.5 * (ta + tb);
    if (++samples > options.sample_budget) {
      throw NonConvergent("phase refinement exceeded the sample budget of " + std::to_string(options.sample_budget));
    }
    const std::complex<double> dm = loop.at(tm).determinant();
    max_mag = std::max(max_mag, std::abs(dm));
    check_floor(tm, dm);
    const double h1 = wrap(phase(dm) - phase(da));
    const double h2 = wrap(phase(db) - phase(dm));
    constexpr double quarter = std::numbers::pi / 2;
    if (std::abs(step) < quarter && std::abs(h1) < quarter && std::abs(h2) < quarter && std::abs(h1 + h2 - step) < 1e-9) {
      return step;
    }
    return span(ta, da, tm, dm) + span(tm, dm, tb, db);
  };

  double total = 0.0;
  for (std::size_t k = 0; k + 1 < thetas.size(); ++k) total += span(thetas[k], dets[k], thetas[k + 1], dets[k + 1]);
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 1e-6) throw NonConvergent("loop does not close at the subspace level");
  return static_cast<int>(rounded);
}

std::optional<int> maslov_index_exact(const MatrixLoop& loop) {
  if (!loop.has_entries() || loop.dimension() > 8) return std::nullopt;
  const int n = loop.dimension();
  using Poly = std::map<Rational, ComplexRational>;
  auto multiply = [](const Poly& a, const LoopEntry& b) {
    Poly out;
    for (const auto& [q, c] : a) {
      for (const auto& term : b) {
        auto& slot = out[q + term.frequency];
        slot = slot + c * term.coefficient;
      }
    }
    return out;
  };
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Poly det;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Poly product{{Rational(0), ComplexRational{Rational(inversions % 2 == 0 ? 1 : -1), Rational(0)}}};
    for (int r = 0; r < n && !product.empty(); ++r) product = multiply(product, loop.entries()[r][perm[r]]);
    for (const auto& [q, c] : product) {
      auto& slot = det[q];
      slot = slot + c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::erase_if(det, [](const auto& kv) { return kv.second.is_zero(); });
  if (det.size() != 1) return std::nullopt;
  const Rational index = Rational(2) * det.begin()->first;
  if (!index.is_integer()) throw InvalidArgument("det(A conj(A)^-1) does not close up over the circle");
  return static_cast<int>(std::stol(index.str()));
}

int maslov_index_symbolic(const std::vector<long>& phases) {
  return static_cast<int>(std::accumulate(phases.begin(), phases.end(), 0L));
}

int double_degree(const MatrixLoop& loop, const MaslovOptions& options) {
  if (auto exact = maslov_index_exact(loop)) return *exact;
  return maslov_index(loop, options);
}

MatrixLoop line_loop(long m, int sample_count) {
  const ComplexRational i_unit{Rational(0), Rational(1)};
  return MatrixLoop({{LoopEntry{PhaseMonomial{i_unit, Rational(m, 2)}}}}, sample_count);
}

MatrixLoop normal_loop(long d, int sample_count) {
  const ComplexRational one{Rational(1), Rational(0)};
  const ComplexRational i_unit{Rational(0), Rational(1)};
  const ComplexRational minus_i{Rational(0), Rational(-1)};
  const Rational q(-d);
  return MatrixLoop({{LoopEntry{PhaseMonomial{one, Rational(0)}}, LoopEntry{PhaseMonomial{i_unit, Rational(0)}}},
                     {LoopEntry{PhaseMonomial{one, q}}, LoopEntry{PhaseMonomial{minus_i, q}}}},
                    sample_count);
}

MatrixLoop block_diagonal(const MatrixLoop& a, const MatrixLoop& b) {
  const int na = a.dimension();
  const int nb = b.dimension();
  const int samples = std::max(a.sample_count(), b.sample_count());
  if (a.has_entries() && b.has_entries()) {
    std::vector<std::vector<LoopEntry>> entries(static_cast<std::size_t>(na + nb),
                                                std::vector<LoopEntry>(static_cast<std::size_t>(na + nb)));
    for (int r = 0; r < na; ++r) {
      for (int c = 0; c < na; ++c) entries[r][c] = a.entries()[r][c];
    }
    for (int r = 0; r < nb; ++r) {
      for (int c = 0; c < nb; ++c) entries[na + r][na + c] = b.entries()[r][c];
    }
    return MatrixLoop(std::move(entries), samples);
  }
  return MatrixLoop(
      na + nb,
      [a, b, na, nb](double theta) {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(na + nb, na + nb);
        m.topLeftCorner(na, na) = a.at(theta);
        m.bottomRightCorner(nb, nb) = b.at(theta);
        return m;
      },
      samples);
}

long bordered_rr_chi(long mu, int rank, BorderedType type) {
  if (rank < 1) throw InvalidArgument("rank must be >= 1");
  return mu + static_cast<long>(rank) * (2 - 2 * type.g - type.h);
}

namespace {

int exact_rank(std::vector<std::vector<Rational>> rows, int columns) {
  int rank = 0;
  for (int col = 0; col < columns && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [col](const auto& r) { return !r[col].is_zero(); });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col] / p[col];
      for (int c = col; c < columns; ++c) rows[r][c] -= f * p[c];
    }
    ++rank;
  }
  return rank;
}

// Real dimension of {v in C^N : v_{pair(j)} = sign * conj(v_j) for all j}.
int fixed_real_dimension(int n, const std::function<int(int)>& pair, int sign) {
  if (n == 0) return 0;
  std::vector<std::vector<Rational>> rows;
  for (int j = 0; j < n; ++j) {
    const int p = pair(j);
    // Real parts x live in columns [0, n), imaginary parts y in [n, 2n).
    std::vector<Rational> re(static_cast<std::size_t>(2 * n));
    std::vector<Rational> im(static_cast<std::size_t>(2 * n));
    re[p] += Rational(1);
    re[j] -= Rational(sign);
    im[n + p] += Rational(1);
    im[n + j] += Rational(sign);
    rows.push_back(std::move(re));
    rows.push_back(std::move(im));
  }
  return 2 * n - exact_rank(std::move(rows), 2 * n);
}

}  // namespace

CohomologyDims example_cohomology_dims(ExampleBundle bundle, int parameter) {
  switch (bundle) {
    case ExampleBundle::Line: {
      if (parameter < 0) throw InvalidArgument("L(m) requires m >= 0");
      const int m = parameter;
      // Sections sum_{j=0}^m a_j z^j with a_{m-j} = -conj(a_j).
      return {fixed_real_dimension(m + 1, [m](int j) { return m - j; }, -1), 0};
    }
    case ExampleBundle::DualLine: {
      if (parameter < 0) throw InvalidArgument("L(-m-1) requires m >= 0");
      const int m = parameter;
      // H^1 classes sum_{j=1}^m a_j z^-j with a_{m+1-j} = -conj(a_j); index j-1.
      return {0, fixed_real_dimension(m, [m](int j) { return m - 1 - j; }, -1)};
    }
    case ExampleBundle::Normal: {
      if (parameter < 1) throw InvalidArgument("N(d) requires d >= 1");
      const int k = parameter - 1;
      // H^1 classes pair a_j with a_{-j}, j = 1..d-1, through conjugation.
      return {0, fixed_real_dimension(2 * k, [k](int j) { return j < k ? j + k : j - k; }, 1)};
    }
  }
  throw InvalidArgument("unknown example bundle");
}

int example_rank(ExampleBundle bundle) { return bundle == ExampleBundle::Normal ? 2 : 1; }

long example_maslov(ExampleBundle bundle, int parameter) {
  switch (bundle) {
    case ExampleBundle::Line:
      return parameter;
    case ExampleBundle::DualLine:
      return -static_cast<long>(parameter) - 1;
    case ExampleBundle::Normal:
      return -2L * parameter;
  }
  throw InvalidArgument("unknown example bundle");
}

long nodal_maslov(const NodalBundleData& data) {
  const long closed = std::accumulate(data.closed_components.begin(), data.closed_components.end(), 0L);
  const long bordered = std::accumulate(data.bordered_components.begin(), data.bordered_components.end(), 0L);
  return 2 * closed + bordered;
}

DoubleType double_type(BorderedType type) { return {2 * type.g + type.h - 1, type.h, 0}; }

long nodal_rr_chi(long mu, int rank, int g_tilde) {
  if (rank < 1) throw InvalidArgument("rank must be >= 1");
  return mu + static_cast<long>(rank) * (1 - g_tilde);
}

}  // namespace ovk
