#pragma once

#include "ovk/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ovk {

/// re + i*im with exact parts.
struct ComplexRational {
  Rational re;
  Rational im;

  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

/// coefficient * e^(i q theta)
struct PhaseMonomial {
  ComplexRational coefficient;
  Rational frequency;
};

/// Matrix entry: a finite sum of phase monomials.
using LoopEntry = std::vector<PhaseMonomial>;

/// Parses an entry such as "1", "-i*e^(-3)", "(1+2i)*e^(1/2) - 3". `e^(q)`
/// stands for e^(i q theta).
LoopEntry parse_loop_entry(const std::string& text);

/// theta -> A(theta), an invertible complex matrix whose columns span a
/// totally real subspace. Either built from exact phase-monomial entries or
/// from an arbitrary sampler.
class MatrixLoop {
 public:
  using Sampler = std::function<Eigen::MatrixXcd(double)>;

  MatrixLoop(std::vector<std::vector<LoopEntry>> entries, int sample_count = 64);
  MatrixLoop(int dimension, Sampler sampler, int sample_count = 64);

  int dimension() const { return dimension_; }
  int sample_count() const { return sample_count_; }
  MatrixLoop with_sample_count(int sample_count) const;

  bool has_entries() const { return !entries_.empty(); }
  const std::vector<std::vector<LoopEntry>>& entries() const { return entries_; }

  Eigen::MatrixXcd at(double theta) const;

 private:
  int dimension_;
  int sample_count_;
  std::vector<std::vector<LoopEntry>> entries_;
  Sampler sampler_;
};

struct MaslovOptions {
  int sample_budget = 1 << 16;
  double relative_floor = 1e-9;
};

/// Winding number of det(A conj(A)^-1) by phase accumulation. Starts from
/// loop.sample_count() uniform samples and bisects every step whose phase
/// jump is at least pi/2.
int maslov_index(const MatrixLoop& loop, const MaslovOptions& options = {});

/// Exact path: expands det A over phase monomials. Returns the index when
/// det A is a single monomial c e^(i q theta), nothing otherwise.
std::optional<int> maslov_index_exact(const MatrixLoop& loop);

/// Index of a loop given by det B = e^(i k_1 theta) ... e^(i k_r theta).
int maslov_index_symbolic(const std::vector<long>& phases);

/// Degree of the complex double; equal to the Maslov index.
int double_degree(const MatrixLoop& loop, const MaslovOptions& options = {});

/// L(m): A = [i e^(i m theta / 2)].
MatrixLoop line_loop(long m, int sample_count = 64);
/// N(d): columns (1, e^(-i d theta)) and (i, -i e^(-i d theta)).
MatrixLoop normal_loop(long d, int sample_count = 64);
MatrixLoop block_diagonal(const MatrixLoop& a, const MatrixLoop& b);

struct BorderedType {
  int g = 0;
  int h = 1;
};

long bordered_rr_chi(long mu, int rank, BorderedType type);

enum class ExampleBundle { Line, DualLine, Normal };

struct CohomologyDims {
  int h0 = 0;
  int h1 = 0;
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// Real dimensions of H^0 and H^1 for L(m), L(-m-1) (parameter m >= 0) and
/// N(d) (parameter d >= 1), by exact rank of the conjugation constraints.
CohomologyDims example_cohomology_dims(ExampleBundle bundle, int parameter);

/// Rank and Maslov index of the example bundle.
int example_rank(ExampleBundle bundle);
long example_maslov(ExampleBundle bundle, int parameter);

struct NodalBundleData {
  std::vector<long> closed_components;
  std::vector<long> bordered_components;
};

long nodal_maslov(const NodalBundleData& data);

struct DoubleType {
  int g_tilde = 0;
  int h = 0;
  int k = 0;
  friend bool operator==(const DoubleType&, const DoubleType&) = default;
};

DoubleType double_type(BorderedType type);

long nodal_rr_chi(long mu, int rank, int g_tilde);

}  // namespace ovk
