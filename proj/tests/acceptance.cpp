// One PASS/FAIL line per acceptance criterion; exit status is the conjunction.
#include "ovk/hodge.hpp"
#include "ovk/localization.hpp"
#include "ovk/maslov.hpp"
#include "ovk/open_invariants.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ovk;

namespace {

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // <= 0: no limit
  std::function<bool(std::string&)> check;
};

void for_each_genus_zero_key(const std::function<void(const OpenInvariantKey&)>& visit) {
  for (int h = 1; h <= 5; ++h) {
    for (int d = h; d <= 8; ++d) {
      for (const auto& parts : partitions_into(d, h)) {
        for (long a = -3; a <= 4; ++a) visit(OpenInvariantKey::from_parts(0, parts, a));
      }
    }
  }
}

void for_each_exponent(int h, int total, std::vector<int>& k, int i, const std::function<void(const std::vector<int>&)>& visit) {
  if (i == h - 1) {
    k[static_cast<std::size_t>(i)] = total;
    visit(k);
    return;
  }
  for (int v = 0; v <= total; ++v) {
    k[static_cast<std::size_t>(i)] = v;
    for_each_exponent(h, total - v, k, i + 1, visit);
  }
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;

  out.push_back({1, "disc multiple-cover formula, d <= 8 through lambda^11", 5.0, [](std::string& note) {
                   for (int d = 1; d <= 8; ++d) {
                     if (!verify_disc_ov(d, 6)) {
                       note = "d=" + std::to_string(d);
                       return false;
                     }
                   }
                   return true;
                 }});

  out.push_back({2, "sphere multiple-cover formula, d <= 8 through lambda^10", 5.0, [](std::string& note) {
                   for (int d = 1; d <= 8; ++d) {
                     if (!verify_sphere_ov(d, 6)) {
                       note = "d=" + std::to_string(d);
                       return false;
                     }
                   }
                   return true;
                 }});

  out.push_back({3, "localization equals closed form on the oracle grid", 60.0, [](std::string& note) {
                   int cases = 0;
                   bool ok = true;
                   auto check = [&](const OpenInvariantKey& key) {
                     ++cases;
                     if (ok && localize_open(key) != open_invariant(key)) {
                       note = key.str();
                       ok = false;
                     }
                   };
                   for_each_genus_zero_key(check);
                   for (int g = 1; g <= 6; ++g) {
                     for (int d = 1; d <= 8; ++d) {
                       for (long a : {0L, 1L}) check(OpenInvariantKey::from_parts(g, {d}, a));
                     }
                   }
                   if (ok) note = std::to_string(cases) + " keys";
                   return ok;
                 }});

  out.push_back({4, "framing symmetry (-1)^(d-h) on the genus-0 grid", 0.0, [](std::string& note) {
                   bool ok = true;
                   for_each_genus_zero_key([&](const OpenInvariantKey& key) {
                     if (ok && !verify_framing_symmetry(key)) {
                       note = key.str();
                       ok = false;
                     }
                   });
                   return ok;
                 }});

  out.push_back({5, "vanishing at a in {0,1} for h > 1", 0.0, [](std::string& note) {
                   bool ok = true;
                   int cases = 0;
                   for_each_genus_zero_key([&](const OpenInvariantKey& key) {
                     if (key.boundaries() < 2 || (key.framing() != 0 && key.framing() != 1)) return;
                     ++cases;
                     if (ok && (!open_invariant(key).is_zero() || !localize_open(key).is_zero())) {
                       note = key.str();
                       ok = false;
                     }
                   });
                   if (ok) note = std::to_string(cases) + " keys";
                   return ok;
                 }});

  out.push_back({6, "binomial integrality of winding factors, n <= 40, |a| <= 5", 0.0, [](std::string& note) {
                   for (int n = 1; n <= 40; ++n) {
                     for (long a = -5; a <= 5; ++a) {
                       const Rational w = winding_factor(n, a);
                       bool ok = w.is_integer();
                       if (a >= 1) ok = ok && w == ((n - 1) % 2 == 0 ? Rational(1) : Rational(-1)) * binomial(n * a - 1, n - 1);
                       if (!ok) {
                         note = "n=" + std::to_string(n) + " a=" + std::to_string(a);
                         return false;
                       }
                     }
                   }
                   return true;
                 }});

  out.push_back({7, "integer invariants N_d, d <= 20", 0.0, [](std::string& note) {
                   const auto a0 = integer_invariants(20, 0);
                   for (int d = 1; d <= 20; ++d) {
                     if (a0.values[static_cast<std::size_t>(d - 1)] != Rational(d == 1 ? 1 : 0)) {
                       note = "a=0 d=" + std::to_string(d);
                       return false;
                     }
                   }
                   for (long a = 1; a <= 5; ++a) {
                     if (!integer_invariants(20, a).integral()) {
                       note = "a=" + std::to_string(a);
                       return false;
                     }
                   }
                   return true;
                 }});

  out.push_back({8, "Mumford identity for g <= 8", 10.0, [](std::string& note) {
                   for (int g = 0; g <= 8; ++g) {
                     if (!lambda_product_identity(g)) {
                       note = "g=" + std::to_string(g);
                       return false;
                     }
                   }
                   return true;
                 }});

  out.push_back({9, "psi multinomial equals string recursion, h <= 8", 0.0, [](std::string& note) {
                   bool ok = true;
                   int cases = 0;
                   for (int h = 3; h <= 8 && ok; ++h) {
                     // Every total degree up to one past the dimension, so mismatches are covered too.
                     for (int total = 0; total <= h - 2 && ok; ++total) {
                       std::vector<int> k(static_cast<std::size_t>(h));
                       for_each_exponent(h, total, k, 0, [&](const std::vector<int>& e) {
                         ++cases;
                         if (ok && psi_integral_genus0(e) != psi_integral_oracle(e)) ok = false;
                       });
                     }
                   }
                   note = std::to_string(cases) + " vectors";
                   return ok;
                 }});

  out.push_back({10, "Maslov examples, exact and sampled, with Riemann-Roch", 2.0, [](std::string& note) {
                   for (long m = -10; m <= 10; ++m) {
                     const MatrixLoop loop = line_loop(m, 64);
                     if (maslov_index_exact(loop) != m || maslov_index(loop) != m) {
                       note = "L(" + std::to_string(m) + ")";
                       return false;
                     }
                   }
                   for (long d = 1; d <= 10; ++d) {
                     const MatrixLoop loop = normal_loop(d, 64);
                     if (maslov_index_exact(loop) != -2 * d || maslov_index(loop) != -2 * d) {
                       note = "N(" + std::to_string(d) + ")";
                       return false;
                     }
                     const auto dims = example_cohomology_dims(ExampleBundle::Normal, static_cast<int>(d));
                     if (bordered_rr_chi(*maslov_index_exact(loop), 2, {0, 1}) != dims.h0 - dims.h1) {
                       note = "RR N(" + std::to_string(d) + ")";
                       return false;
                     }
                   }
                   for (int m = 0; m <= 10; ++m) {
                     const auto line = example_cohomology_dims(ExampleBundle::Line, m);
                     const auto dual = example_cohomology_dims(ExampleBundle::DualLine, m);
                     if (bordered_rr_chi(*maslov_index_exact(line_loop(m)), 1, {0, 1}) != line.h0 - line.h1 ||
                         bordered_rr_chi(*maslov_index_exact(line_loop(-m - 1)), 1, {0, 1}) != dual.h0 - dual.h1) {
                       note = "RR L(" + std::to_string(m) + ")";
                       return false;
                     }
                   }
                   return true;
                 }});
  return out;
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : criteria()) {
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      ok = false;
      note += " over the " + std::to_string(c.limit_seconds) + " s limit";
    }
    if (!ok) ++failures;
    std::printf("%s criterion %2d: %s [%.3f s]%s%s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), seconds,
                note.empty() ? "" : "  ", note.c_str());
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
