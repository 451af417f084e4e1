#include "ovk/cli.hpp"
#include "ovk/errors.hpp"
#include "ovk/hodge.hpp"
#include "ovk/localization.hpp"
#include "ovk/maslov.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace ovk::cli {

namespace {

using Job = std::function<CaseResult()>;

std::vector<CaseResult> run_jobs(const std::vector<Job>& jobs) {
  std::vector<CaseResult> results(jobs.size());
  const std::size_t workers = std::min<std::size_t>(worker_count(), jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = jobs[i]();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

struct Resolved {
  int gmax, dmax, hmax, mmax, samples;
  long amin, amax;
};

Resolved resolve(const SuiteRanges& r, Resolved defaults) {
  Resolved out{r.gmax.value_or(defaults.gmax), r.dmax.value_or(defaults.dmax), r.hmax.value_or(defaults.hmax),
               r.mmax.value_or(defaults.mmax), r.samples.value_or(defaults.samples),
               r.amin.value_or(defaults.amin), r.amax.value_or(defaults.amax)};
  require(out.gmax >= 0, "--gmax must be >= 0");
  require(out.dmax >= 1, "--dmax must be >= 1");
  require(out.hmax >= 1, "--hmax must be >= 1");
  require(out.mmax >= 0, "--mmax must be >= 0");
  require(out.samples >= 2, "--samples must be >= 2");
  require(out.amin <= out.amax, "--amin must not exceed --amax");
  return out;
}

std::string compare_detail(const Rational& a, const Rational& b) {
  return "closed-form=" + a.str() + " localization=" + b.str();
}

void genus_zero_grid(const Resolved& r, const std::function<void(const OpenInvariantKey&)>& visit) {
  for (int h = 1; h <= r.hmax; ++h) {
    for (int d = h; d <= r.dmax; ++d) {
      for (const auto& parts : partitions_into(d, h)) {
        for (long a = r.amin; a <= r.amax; ++a) visit(OpenInvariantKey::from_parts(0, parts, a));
      }
    }
  }
}

std::vector<Job> suite_jobs(const std::string& suite, const SuiteRanges& ranges) {
  std::vector<Job> jobs;
  if (suite == "sphere-ov" || suite == "disc-ov") {
    const auto r = resolve(ranges, {6, 8, 1, 0, 64, 0, 0});
    const bool sphere = suite == "sphere-ov";
    for (int d = 1; d <= r.dmax; ++d) {
      jobs.push_back([d, r, sphere] {
        const bool ok = sphere ? verify_sphere_ov(d, r.gmax) : verify_disc_ov(d, r.gmax);
        const int last = sphere ? 2 * r.gmax - 2 : 2 * r.gmax - 1;
        return CaseResult{"d=" + std::to_string(d), ok, "through lambda^" + std::to_string(last)};
      });
    }
  } else if (suite == "symmetry") {
    const auto r = resolve(ranges, {0, 8, 5, 0, 64, -3, 4});
    genus_zero_grid(r, [&](const OpenInvariantKey& key) {
      jobs.push_back([key] {
        const Rational direct = open_invariant(key);
        const Rational mirrored = open_invariant(key.with_framing(1 - key.framing()));
        return CaseResult{key.str(), verify_framing_symmetry(key),
                          "a=" + direct.str() + " 1-a=" + mirrored.str()};
      });
    });
  } else if (suite == "mumford") {
    const auto r = resolve(ranges, {8, 1, 1, 0, 64, 0, 0});
    for (int g = 0; g <= r.gmax; ++g) {
      jobs.push_back([g] {
        return CaseResult{"g=" + std::to_string(g), lambda_product_identity(g),
                          "c_g(E^v(lambda)) c_g(E^v(-lambda)) = (-1)^g lambda^2g"};
      });
    }
  } else if (suite == "localization-xcheck") {
    const auto r = resolve(ranges, {6, 8, 5, 0, 64, -3, 4});
    auto add = [&](const OpenInvariantKey& key) {
      jobs.push_back([key] {
        const Rational closed = open_invariant(key);
        const Rational localized = localize_open(key);
        return CaseResult{key.str(), closed == localized, compare_detail(closed, localized)};
      });
    };
    genus_zero_grid(r, add);
    for (int g = 1; g <= r.gmax; ++g) {
      for (int h = 1; h <= r.hmax; ++h) {
        for (int d = h; d <= r.dmax; ++d) {
          for (const auto& parts : partitions_into(d, h)) {
            for (long a : {0L, 1L}) add(OpenInvariantKey::from_parts(g, parts, a));
          }
        }
      }
    }
  } else if (suite == "nd-integrality") {
    const auto r = resolve(ranges, {0, 20, 1, 0, 64, 0, 5});
    for (long a = r.amin; a <= r.amax; ++a) {
      jobs.push_back([a, r] {
        const IntegerInvariants nd = integer_invariants(r.dmax, a);
        bool ok = nd.integral();
        if (a == 0) {
          for (int d = 1; d <= r.dmax; ++d) ok = ok && nd.values[static_cast<std::size_t>(d - 1)] == Rational(d == 1 ? 1 : 0);
        }
        std::string detail = "N_1..N_" + std::to_string(r.dmax) + " =";
        for (const auto& v : nd.values) detail += " " + v.str();
        return CaseResult{"a=" + std::to_string(a), ok, detail};
      });
    }
  } else if (suite == "maslov-examples") {
    const auto r = resolve(ranges, {0, 10, 1, 10, 64, 0, 0});
    auto check = [samples = r.samples](const std::string& id, const MatrixLoop& loop, long expected) {
      return [id, loop, expected, samples] {
        const auto exact = maslov_index_exact(loop);
        const int numeric = maslov_index(loop.with_sample_count(samples));
        const bool ok = exact && *exact == expected && numeric == expected;
        return CaseResult{id, ok,
                          "exact=" + (exact ? std::to_string(*exact) : std::string("none")) +
                              " numeric=" + std::to_string(numeric) + " expected=" + std::to_string(expected)};
      };
    };
    for (long m = -r.mmax; m <= r.mmax; ++m) jobs.push_back(check("L(" + std::to_string(m) + ")", line_loop(m), m));
    for (long d = 1; d <= r.dmax; ++d) {
      jobs.push_back(check("N(" + std::to_string(d) + ")", normal_loop(d), -2 * d));
    }
  } else if (suite == "rr-examples") {
    const auto r = resolve(ranges, {0, 10, 1, 10, 64, 0, 0});
    auto check = [](const std::string& id, ExampleBundle bundle, int parameter, const MatrixLoop& loop) {
      return [id, bundle, parameter, loop] {
        const int mu = double_degree(loop);
        const int n = example_rank(bundle);
        const long chi = bordered_rr_chi(mu, n, BorderedType{0, 1});
        const long nodal_chi = nodal_rr_chi(mu, n, double_type(BorderedType{0, 1}).g_tilde);
        const CohomologyDims dims = example_cohomology_dims(bundle, parameter);
        const bool ok = mu == example_maslov(bundle, parameter) && chi == dims.h0 - dims.h1 && nodal_chi == chi;
        return CaseResult{id, ok,
                          "mu=" + std::to_string(mu) + " chi=" + std::to_string(chi) + " h0=" + std::to_string(dims.h0) +
                              " h1=" + std::to_string(dims.h1)};
      };
    };
    for (int m = 0; m <= r.mmax; ++m) {
      jobs.push_back(check("L(" + std::to_string(m) + ")", ExampleBundle::Line, m, line_loop(m)));
      jobs.push_back(check("L(" + std::to_string(-m - 1) + ")", ExampleBundle::DualLine, m, line_loop(-m - 1)));
    }
    for (int d = 1; d <= r.dmax; ++d) {
      jobs.push_back(check("N(" + std::to_string(d) + ")", ExampleBundle::Normal, d, normal_loop(d)));
    }
  } else {
    throw InvalidArgument("unknown suite '" + suite + "'");
  }
  return jobs;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sphere-ov",           "disc-ov",        "symmetry",
                                              "mumford",             "localization-xcheck", "nd-integrality",
                                              "maslov-examples",     "rr-examples"};
  return names;
}

std::vector<CaseResult> run_suite(const std::string& suite, const SuiteRanges& ranges) {
  return run_jobs(suite_jobs(suite, ranges));
}

}  // namespace ovk::cli
