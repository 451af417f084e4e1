#include "ovk/errors.hpp"
#include "ovk/maslov.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace ovk;

namespace {

MatrixLoop identity_loop(int n) {
  return MatrixLoop(n, [n](double) { return Eigen::MatrixXcd::Identity(n, n).eval(); });
}

// A(theta) R(theta) for a smooth loop R of real matrices with positive determinant.
MatrixLoop retrivialized(const MatrixLoop& loop, std::mt19937& rng) {
  const int n = loop.dimension();
  std::uniform_real_distribution<double> coef(-0.3, 0.3);
  std::vector<Eigen::MatrixXd> harmonics;
  for (int k = 0; k < 3; ++k) {
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) m(r, c) = coef(rng) / n;
    }
    harmonics.push_back(m);
  }
  return MatrixLoop(
      n,
      [loop, harmonics, n](double theta) {
        Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
        for (std::size_t k = 0; k < harmonics.size(); ++k) r += harmonics[k] * std::cos((k + 1) * theta + 0.3 * k);
        return (loop.at(theta) * r.cast<std::complex<double>>()).eval();
      },
      loop.sample_count());
}

}  // namespace

TEST_CASE("maslov index examples") {
  CHECK(maslov_index(line_loop(4)) == 4);
  CHECK(maslov_index(identity_loop(3)) == 0);
  CHECK(maslov_index(normal_loop(3)) == -6);
  CHECK(maslov_index_exact(line_loop(4)) == 4);
  CHECK(maslov_index_exact(normal_loop(3)) == -6);
  CHECK(maslov_index_symbolic({3, -1, 2}) == 4);
  CHECK(!maslov_index_exact(identity_loop(2)).has_value());
}

TEST_CASE("double degree") {
  for (long m = -4; m <= 4; ++m) CHECK(double_degree(line_loop(m)) == m);
  for (long d = 1; d <= 4; ++d) CHECK(double_degree(normal_loop(d)) == -2 * d);
  CHECK(double_degree(identity_loop(2)) == 0);
}

TEST_CASE("line and normal families through both paths") {
  for (long m = -10; m <= 10; ++m) {
    CHECK(maslov_index_exact(line_loop(m)) == m);
    CHECK(maslov_index(line_loop(m, 64)) == m);
  }
  for (long d = 1; d <= 10; ++d) {
    CHECK(maslov_index_exact(normal_loop(d)) == -2 * d);
    CHECK(maslov_index(normal_loop(d, 64)) == -2 * d);
  }
}

TEST_CASE("adaptive refinement and sample halving") {
  // 16 samples cannot resolve winding 20 without bisection.
  for (int samples : {64, 32, 16}) {
    CHECK(maslov_index(line_loop(20, samples)) == 20);
    CHECK(maslov_index(normal_loop(7, samples)) == -14);
  }
  CHECK_THROWS_AS(maslov_index(line_loop(2000, 64), MaslovOptions{128, 1e-9}), NonConvergent);
}

TEST_CASE("degenerate frames are rejected") {
  const MatrixLoop singular({{parse_loop_entry("1"), parse_loop_entry("1")}, {parse_loop_entry("1"), parse_loop_entry("1")}});
  CHECK_THROWS_AS(maslov_index(singular), DegenerateFrame);
  const MatrixLoop vanishing(1, [](double theta) {
    Eigen::MatrixXcd m(1, 1);
    m(0, 0) = std::complex<double>(std::cos(theta), 0.0);
    return m;
  });
  CHECK_THROWS_AS(maslov_index(vanishing), DegenerateFrame);
}

TEST_CASE("trivialization independence") {
  std::mt19937 rng(1234);
  const std::vector<MatrixLoop> loops{line_loop(3), line_loop(-5), normal_loop(2), block_diagonal(line_loop(1), normal_loop(1))};
  for (const auto& loop : loops) {
    const int base = maslov_index(loop);
    for (int trial = 0; trial < 5; ++trial) CHECK(maslov_index(retrivialized(loop, rng)) == base);
  }
}

TEST_CASE("block additivity") {
  for (long m = -3; m <= 3; ++m) {
    for (long d = 1; d <= 3; ++d) {
      const auto block = block_diagonal(line_loop(m), normal_loop(d));
      CHECK(maslov_index_exact(block) == m - 2 * d);
      CHECK(maslov_index(block) == m - 2 * d);
      const auto mixed = block_diagonal(identity_loop(1), line_loop(m));
      CHECK(maslov_index(mixed) == m);
    }
  }
}

TEST_CASE("loop entry parser") {
  const auto e = parse_loop_entry("(1+2i)*e^(1/2) - 3 + -i*e^(-3)");
  REQUIRE(e.size() == 3);
  CHECK(e[0].coefficient == ComplexRational{Rational(1), Rational(2)});
  CHECK(e[0].frequency == Rational(1, 2));
  CHECK(e[1].coefficient == ComplexRational{Rational(-3), Rational(0)});
  CHECK(e[2].coefficient == ComplexRational{Rational(0), Rational(-1)});
  CHECK(e[2].frequency == Rational(-3));
  CHECK(parse_loop_entry("2i").front().coefficient == ComplexRational{Rational(0), Rational(2)});
  CHECK(parse_loop_entry("e^(4)").front().coefficient == ComplexRational{Rational(1), Rational(0)});
  CHECK(parse_loop_entry("0").empty());
  CHECK_THROWS_AS(parse_loop_entry("e^(x)"), InvalidArgument);
  CHECK_THROWS_AS(parse_loop_entry("(1+i"), InvalidArgument);
  CHECK_THROWS_AS(parse_loop_entry(""), InvalidArgument);
}

TEST_CASE("riemann-roch and cohomology examples") {
  CHECK(bordered_rr_chi(5, 1, {0, 1}) == 6);
  CHECK(bordered_rr_chi(-4, 1, {0, 1}) == -3);
  CHECK(bordered_rr_chi(-4, 2, {0, 1}) == -2);
  CHECK(example_cohomology_dims(ExampleBundle::Line, 0) == CohomologyDims{1, 0});
  CHECK(example_cohomology_dims(ExampleBundle::Line, 3) == CohomologyDims{4, 0});
  CHECK(example_cohomology_dims(ExampleBundle::DualLine, 3) == CohomologyDims{0, 3});
  CHECK(example_cohomology_dims(ExampleBundle::Normal, 4) == CohomologyDims{0, 6});
  CHECK(example_cohomology_dims(ExampleBundle::Normal, 1) == CohomologyDims{0, 0});

  for (int m = 0; m <= 10; ++m) {
    const auto line = example_cohomology_dims(ExampleBundle::Line, m);
    CHECK(bordered_rr_chi(*maslov_index_exact(line_loop(m)), 1, {0, 1}) == line.h0 - line.h1);
    const auto dual = example_cohomology_dims(ExampleBundle::DualLine, m);
    CHECK(bordered_rr_chi(*maslov_index_exact(line_loop(-m - 1)), 1, {0, 1}) == dual.h0 - dual.h1);
  }
  for (int d = 1; d <= 10; ++d) {
    const auto n = example_cohomology_dims(ExampleBundle::Normal, d);
    CHECK(bordered_rr_chi(*maslov_index_exact(normal_loop(d)), 2, {0, 1}) == n.h0 - n.h1);
  }
}

TEST_CASE("nodal data and double types") {
  CHECK(nodal_maslov({{}, {7}}) == 7);
  CHECK(nodal_maslov({{3}, {-2}}) == 4);
  CHECK(nodal_maslov({}) == 0);
  CHECK(double_type({0, 1}) == DoubleType{0, 1, 0});
  CHECK(double_type({0, 2}) == DoubleType{1, 2, 0});
  CHECK(double_type({1, 2}) == DoubleType{3, 2, 0});
  for (long m = 0; m <= 5; ++m) CHECK(nodal_rr_chi(m, 1, 0) == bordered_rr_chi(m, 1, {0, 1}));
  CHECK(nodal_rr_chi(0, 2, 1) == 0);
  CHECK(nodal_rr_chi(-6, 2, 0) == -4);
  // Smooth surfaces: nodal RR on the double matches bordered RR.
  for (int g = 0; g <= 3; ++g) {
    for (int h = 1; h <= 3; ++h) {
      CHECK(nodal_rr_chi(3, 2, double_type({g, h}).g_tilde) == bordered_rr_chi(3, 2, {g, h}));
    }
  }
}
