#include "ovk/errors.hpp"
#include "ovk/hodge.hpp"
#include "ovk/open_invariants.hpp"

#include <doctest.h>

#include <algorithm>

using namespace ovk;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

OpenInvariantKey key(int g, std::vector<int> parts, long a) { return OpenInvariantKey::from_parts(g, std::move(parts), a); }

std::vector<long> as_longs(const IntegerInvariants& nd) {
  std::vector<long> out;
  for (const auto& v : nd.values) out.push_back(std::stol(v.str()));
  return out;
}

}  // namespace

TEST_CASE("key validation and canonical order") {
  const OpenInvariantKey k(0, 3, 6, {1, 3, 2}, 2);
  CHECK(k.parts() == std::vector<int>{3, 2, 1});
  CHECK(k.str() == "C(0;3|6;3,2,1|2)");
  CHECK_THROWS_AS(OpenInvariantKey(0, 2, 5, {1, 3}, 0), InvalidArgument);
  CHECK_THROWS_AS(OpenInvariantKey(0, 2, 4, {4}, 0), InvalidArgument);
  CHECK_THROWS_AS(OpenInvariantKey(0, 1, 0, {0}, 0), InvalidArgument);
  CHECK_THROWS_AS(OpenInvariantKey(-1, 1, 1, {1}, 0), InvalidArgument);
}

TEST_CASE("winding factor examples and binomial identity") {
  CHECK(winding_factor(1, 7) == q(1));
  for (int n = 1; n <= 10; ++n) CHECK(winding_factor(n, 0) == q(1));
  CHECK(winding_factor(3, 1) == q(1));
  for (int n = 1; n <= 40; ++n) {
    for (long a = -5; a <= 5; ++a) {
      const Rational w = winding_factor(n, a);
      CHECK(w.is_integer());
      if (a >= 1) {
        const Rational sign = (n - 1) % 2 == 0 ? q(1) : q(-1);
        CHECK(w == sign * binomial(n * a - 1, n - 1));
      }
    }
  }
}

TEST_CASE("open invariant examples") {
  for (int d = 1; d <= 6; ++d) CHECK(open_invariant(key(0, {d}, 0)) == q(1, d * d));
  CHECK(open_invariant(key(0, {1, 1}, 1)) == q(0));
  CHECK(open_invariant(key(0, {2}, 1)) == q(-1, 4));
  CHECK(open_invariant(key(0, {1, 1, 1}, 2)) == q(4));
  CHECK(open_invariant(key(2, {1}, 0)) == q(7, 5760));
  CHECK(open_invariant(key(1, {2}, 0)) == q(1, 24));
  CHECK(open_invariant(key(1, {2}, 1)) == q(-1, 24));
  CHECK(open_invariant(key(1, {3}, 1)) == q(1, 24));
  CHECK(open_invariant(key(2, {2, 1}, 0)) == q(0));
  CHECK_THROWS_AS(open_invariant(key(1, {1}, 2)), UnsupportedRegime);
  CHECK_THROWS_AS(open_invariant(key(1, {2, 1}, 3)), UnsupportedRegime);
}

TEST_CASE("framing symmetry examples and grid") {
  CHECK(verify_framing_symmetry(key(0, {2}, 0)));
  CHECK(verify_framing_symmetry(key(0, {1, 1}, 0)));
  CHECK(verify_framing_symmetry(key(0, {2, 1, 1, 1}, 3)));
  for (int h = 1; h <= 4; ++h) {
    for (int d = h; d <= 8; ++d) {
      for (const auto& parts : partitions_into(d, h)) {
        for (long a = -3; a <= 4; ++a) CHECK(verify_framing_symmetry(key(0, parts, a)));
      }
    }
  }
}

TEST_CASE("vanishing at a in {0,1} for h > 1") {
  for (int g = 0; g <= 3; ++g) {
    for (int h = 2; h <= 5; ++h) {
      for (int d = h; d <= 8; ++d) {
        for (const auto& parts : partitions_into(d, h)) {
          CHECK(open_invariant(key(g, parts, 0)) == q(0));
          CHECK(open_invariant(key(g, parts, 1)) == q(0));
        }
      }
    }
  }
}

TEST_CASE("invariants depend only on the parts multiset") {
  std::vector<int> parts{4, 2, 1, 1};
  const Rational reference = open_invariant(key(0, parts, -2));
  std::sort(parts.begin(), parts.end());
  do {
    CHECK(open_invariant(key(0, parts, -2)) == reference);
  } while (std::next_permutation(parts.begin(), parts.end()));
}

TEST_CASE("integer invariants") {
  const auto a0 = integer_invariants(20, 0);
  CHECK(a0.integral());
  CHECK(a0.values[0] == q(1));
  for (int d = 2; d <= 20; ++d) CHECK(a0.values[static_cast<std::size_t>(d - 1)] == q(0));

  const auto a1 = integer_invariants(20, 1);
  CHECK(a1.values[0] == q(-1));
  for (int d = 2; d <= 20; ++d) CHECK(a1.values[static_cast<std::size_t>(d - 1)] == q(0));

  // Frozen from an independent Fraction-based elimination.
  CHECK(as_longs(integer_invariants(12, 2)) == std::vector<long>{1, -1, 1, -2, 5, -13, 35, -100, 300, -925, 2915, -9386});
  CHECK(as_longs(integer_invariants(12, 3)) ==
        std::vector<long>{-1, -1, -3, -10, -40, -171, -791, -3828, -19287, -100140, -533159, -2897358});
  CHECK(as_longs(integer_invariants(12, 4)) ==
        std::vector<long>{1, -2, 6, -28, 155, -936, 6041, -41080, 290565, -2119190, 15845742, -120952080});
  CHECK(as_longs(integer_invariants(12, 5)) ==
        std::vector<long>{-1, -2, -10, -60, -425, -3296, -27447, -240312, -2188056, -20544450, -197774489, -1943553120});
  CHECK(as_longs(integer_invariants(6, -2)) == std::vector<long>{1, 1, 3, 10, 40, 171});

  for (long a = -5; a <= 5; ++a) {
    const auto nd = integer_invariants(20, a);
    CHECK(nd.integral());
    for (int d = 1; d <= 20; ++d) {
      const Rational sign = (a * d) % 2 == 0 ? q(1) : q(-1);
      CHECK(integer_invariant_resum(nd.values, d) == sign * open_invariant(key(0, {d}, a)));
    }
  }
}

TEST_CASE("disc potential and multiple-cover formula") {
  const auto d1 = open_potential_series(1, 3);
  CHECK(d1.lowest() == -1);
  CHECK(d1.coeff(-1) == q(1));
  CHECK(d1.coeff(1) == q(1, 24));
  CHECK(open_potential_series(2, 2).coeff(-1) == q(1, 4));
  for (int d = 1; d <= 5; ++d) CHECK(open_potential_series(d, 3).coeff(0) == q(0));

  const auto d3 = disc_cover_series(3, 4);
  CHECK(d3.coeff(-1) == q(1, 9));
  CHECK(d3.coeff(1) == q(1, 24));
  CHECK(d3.coeff(3) == q(7, 640));
  CHECK(d3.coeff(5) == q(93, 35840));
  CHECK(d3.coeff(7) == q(3429, 5734400));

  CHECK(verify_disc_ov(1, 0));
  CHECK(verify_disc_ov(3, 4));
  for (int d = 1; d <= 8; ++d) CHECK(verify_disc_ov(d, 6));
}

TEST_CASE("partitions") {
  CHECK(partitions_into(6, 3) == std::vector<std::vector<int>>{{4, 1, 1}, {3, 2, 1}, {2, 2, 2}});
  CHECK(partitions_into(2, 3).empty());
  CHECK(partitions_into(8, 1) == std::vector<std::vector<int>>{{8}});
}
