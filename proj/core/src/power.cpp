#include "mineq/power.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mineq/normal.hpp"

namespace mineq {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TestSpec make_test(std::size_t k, double alpha, NormOrder p, const SimConfig& cfg,
                   CriticalValueCache* cache) {
  TestSpec test;
  test.k = k;
  test.p = p;
  test.alpha = alpha;
  test.critical = critical_value(k, alpha, p, cfg, cache);
  return test;
}

bool reject(const TestSpec& test, std::span<const double> z, double theta0) {
  if (z.size() != test.k) {
    throw std::invalid_argument("reject: observation length does not match the test's k");
  }
  return s_p(z, theta0, test.p) > test.critical.value;
}

double minimax_power_exact(const TestSpec& test, double b) {
  if (!(b > 0.0)) throw std::domain_error("minimax_power_exact: b must be positive");
  return 1.0 - std_normal_cdf(test.critical.value - b);
}

double minimax_power_exact_se(const TestSpec& test, double b) {
  if (!test.critical.mc_std_error) return 0.0;
  return std_normal_pdf(test.critical.value - b) * *test.critical.mc_std_error;
}

PowerReport power_at(const TestSpec& test, const ModelParams& mu, double theta0,
                     const SimConfig& cfg) {
  if (mu.k() != test.k) {
    throw std::invalid_argument("power_at: model dimension does not match the test's k");
  }
  const StreamSeed base{cfg.master_seed, stream_domain::power};
  const MeanEstimate est =
      mc_mean(cfg, base, [&](NormalStream& stream) {
        thread_local std::vector<double> z;
        z.resize(mu.k());
        sample_z_into(mu.mu(), stream, z);
        return s_p(z, theta0, test.p) > test.critical.value ? 1.0 : 0.0;
      });
  PowerReport report;
  report.estimate = est.mean;
  report.std_error = est.se;
  report.reps = est.reps;
  return report;
}

FamilyPower family_power(std::span<const TestSpec> tests,
                         std::span<const std::vector<double>> members, const SimConfig& cfg) {
  if (tests.empty()) throw std::invalid_argument("family_power: no tests");
  if (members.empty()) throw std::invalid_argument("family_power: no members");
  const std::size_t k = tests.front().k;
  for (const TestSpec& t : tests) {
    if (t.k != k || t.alpha != tests.front().alpha) {
      throw std::invalid_argument("family_power: tests must share (k, alpha)");
    }
  }

  if (members.size() > stream_domain::span / stream_domain::member_stride) {
    throw std::invalid_argument("family_power: too many members for the stream layout");
  }
  if (detail::block_count(cfg.reps, cfg.block_size) > stream_domain::member_stride) {
    throw std::invalid_argument("family_power: too many blocks per member; raise block_size");
  }

  FamilyPower out;
  out.members.assign(members.begin(), members.end());
  out.power.resize(members.size());
  for (std::size_t mi = 0; mi < members.size(); ++mi) {
    const std::vector<double>& mu = members[mi];
    if (mu.size() != k) {
      throw std::invalid_argument("family_power: member dimension does not match k");
    }
    const StreamSeed base{cfg.master_seed,
                          stream_domain::family + mi * stream_domain::member_stride};
    out.power[mi] = mc_mean_multi(
        cfg, base, tests.size(), [&](NormalStream& stream, std::span<double> row) {
          thread_local std::vector<double> z;
          z.resize(k);
          sample_z_into(mu, stream, z);
          for (std::size_t ti = 0; ti < tests.size(); ++ti) {
            row[ti] = s_p(z, 0.0, tests[ti].p) > tests[ti].critical.value ? 1.0 : 0.0;
          }
        });
  }
  return out;
}

std::vector<std::vector<double>> lp_alt_family(std::size_t k, double b, NormOrder p_alt,
                                               std::span<const std::size_t> ms) {
  if (k == 0) throw std::domain_error("lp_alt_family: k must be >= 1");
  if (!(b > 0.0)) throw std::domain_error("lp_alt_family: b must be positive");
  std::vector<std::size_t> all;
  if (ms.empty()) {
    all.resize(k);
    for (std::size_t m = 1; m <= k; ++m) all[m - 1] = m;
    ms = all;
  }
  std::vector<std::vector<double>> members;
  members.reserve(ms.size());
  for (std::size_t m : ms) {
    if (m == 0 || m > k) throw std::domain_error("lp_alt_family: need 1 <= m <= k");
    const double coord =
        p_alt.is_infinity() ? -b : -b * std::pow(static_cast<double>(m), -1.0 / p_alt.value());
    std::vector<double> mu(k, kInf);
    std::fill_n(mu.begin(), m, coord);
    members.push_back(std::move(mu));
  }
  return members;
}

PowerReport minimax_power_lp_alt(const TestSpec& test, double b, NormOrder p_alt,
                                 std::size_t k, const SimConfig& cfg,
                                 std::span<const std::size_t> ms) {
  if (k != test.k) {
    throw std::invalid_argument("minimax_power_lp_alt: k does not match the test");
  }
  const auto members = lp_alt_family(k, b, p_alt, ms);
  const TestSpec tests[] = {test};
  const FamilyPower fp = family_power(tests, members, cfg);

  std::size_t argmin = 0;
  for (std::size_t mi = 1; mi < members.size(); ++mi) {
    if (fp.power[mi][0].mean < fp.power[argmin][0].mean) argmin = mi;
  }
  PowerReport report;
  report.estimate = fp.power[argmin][0].mean;
  report.std_error = fp.power[argmin][0].se;
  report.reps = cfg.reps;
  report.worst_case_mu = members[argmin];
  return report;
}

}  // namespace mineq
