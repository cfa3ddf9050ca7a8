#include "mineq/treatment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mineq {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// The treatment problem at tau is the moment problem at mu = -tau with
// theta0 = 0; all welfare power computations route through that mapping so
// the equivalence holds draw for draw.
std::vector<double> negate(std::span<const double> x) {
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = -x[j];
  return out;
}

}  // namespace

TreatmentModel::TreatmentModel(std::vector<double> tau) : tau_(std::move(tau)) {
  if (tau_.empty()) throw std::domain_error("TreatmentModel: k must be >= 1");
  for (double t : tau_) {
    if (std::isnan(t)) throw std::domain_error("TreatmentModel: NaN component");
    if (t == kInf) throw std::domain_error("TreatmentModel: +inf component not allowed");
  }
}

double welfare_gain(const TreatmentModel& model) {
  double sum = 0.0;
  for (double t : model.tau()) {
    if (t > 0.0) sum += t;  // -inf contributes nothing
  }
  return sum / static_cast<double>(model.k());
}

bool treatment_reject(const TestSpec& test, std::span<const double> z) {
  if (z.size() != test.k) {
    throw std::invalid_argument("treatment_reject: observation length does not match k");
  }
  return s_p(negate(z), 0.0, test.p) > test.critical.value;
}

std::vector<std::vector<double>> welfare_family(std::size_t k, double b,
                                                std::span<const std::size_t> ms) {
  if (k == 0) throw std::domain_error("welfare_family: k must be >= 1");
  if (!(b > 0.0)) throw std::domain_error("welfare_family: b must be positive");
  std::vector<std::size_t> all;
  if (ms.empty()) {
    all.resize(k);
    for (std::size_t m = 1; m <= k; ++m) all[m - 1] = m;
    ms = all;
  }
  std::vector<std::vector<double>> members;
  members.reserve(ms.size());
  for (std::size_t m : ms) {
    if (m == 0 || m > k) throw std::domain_error("welfare_family: need 1 <= m <= k");
    // w* = (1/k) * m * (k b / m) = b exactly.
    const double effect = static_cast<double>(k) * b / static_cast<double>(m);
    std::vector<double> tau(k, -kInf);
    std::fill_n(tau.begin(), m, effect);
    members.push_back(std::move(tau));
  }
  return members;
}

WelfareComparison compare_tests_welfare(std::span<const TestSpec> tests,
                                        std::span<const double> b_grid, std::size_t k,
                                        const SimConfig& cfg) {
  if (tests.empty()) throw std::invalid_argument("compare_tests_welfare: no tests");
  if (b_grid.empty()) throw std::invalid_argument("compare_tests_welfare: empty b grid");
  for (const TestSpec& t : tests) {
    if (t.k != k) throw std::invalid_argument("compare_tests_welfare: test k mismatch");
  }

  WelfareComparison cmp;
  cmp.b_grid.assign(b_grid.begin(), b_grid.end());
  cmp.reports.resize(b_grid.size());
  cmp.winner.resize(b_grid.size());

  for (std::size_t bi = 0; bi < b_grid.size(); ++bi) {
    const auto tau_members = welfare_family(k, b_grid[bi]);
    std::vector<std::vector<double>> mu_members;
    mu_members.reserve(tau_members.size());
    for (const auto& tau : tau_members) mu_members.push_back(negate(tau));

    const FamilyPower fp = family_power(tests, mu_members, cfg);

    cmp.reports[bi].resize(tests.size());
    for (std::size_t ti = 0; ti < tests.size(); ++ti) {
      std::size_t argmin = 0;
      for (std::size_t mi = 1; mi < tau_members.size(); ++mi) {
        if (fp.power[mi][ti].mean < fp.power[argmin][ti].mean) argmin = mi;
      }
      PowerReport& rep = cmp.reports[bi][ti];
      rep.estimate = fp.power[argmin][ti].mean;
      rep.std_error = fp.power[argmin][ti].se;
      rep.reps = cfg.reps;
      rep.worst_case_mu = tau_members[argmin];
    }
    std::size_t best = 0;
    for (std::size_t ti = 1; ti < tests.size(); ++ti) {
      if (cmp.reports[bi][ti].estimate > cmp.reports[bi][best].estimate) best = ti;
    }
    cmp.winner[bi] = best;
  }
  return cmp;
}

PowerReport minimax_power_welfare(const TestSpec& test, double b, std::size_t k,
                                  const SimConfig& cfg, std::span<const std::size_t> ms) {
  if (k != test.k) {
    throw std::invalid_argument("minimax_power_welfare: k does not match the test");
  }
  const auto tau_members = welfare_family(k, b, ms);
  std::vector<std::vector<double>> mu_members;
  mu_members.reserve(tau_members.size());
  for (const auto& tau : tau_members) mu_members.push_back(negate(tau));

  const TestSpec tests[] = {test};
  const FamilyPower fp = family_power(tests, mu_members, cfg);

  std::size_t argmin = 0;
  for (std::size_t mi = 1; mi < tau_members.size(); ++mi) {
    if (fp.power[mi][0].mean < fp.power[argmin][0].mean) argmin = mi;
  }
  PowerReport report;
  report.estimate = fp.power[argmin][0].mean;
  report.std_error = fp.power[argmin][0].se;
  report.reps = cfg.reps;
  report.worst_case_mu = tau_members[argmin];
  return report;
}

std::vector<double> aggregate_treatment(const TreatmentRawSample& raw) {
  if (raw.k < 1) throw std::invalid_argument("aggregate_treatment: k must be >= 1");
  const std::size_t n = raw.x.size();
  if (raw.d.size() != n || raw.y.size() != n) {
    throw std::invalid_argument("aggregate_treatment: column lengths differ");
  }
  const std::size_t cells = 2 * static_cast<std::size_t>(raw.k);
  if (n == 0 || n % cells != 0) {
    throw std::invalid_argument("aggregate_treatment: n must be a positive multiple of 2k");
  }
  const std::size_t per_cell = n / cells;

  std::vector<double> sums(cells, 0.0);
  std::vector<std::size_t> counts(cells, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int label = raw.x[i];
    if (label < 1 || label > raw.k) {
      throw std::invalid_argument("aggregate_treatment: stratum label " +
                                  std::to_string(label) + " outside {1,...," +
                                  std::to_string(raw.k) + "}");
    }
    if (raw.d[i] != 0 && raw.d[i] != 1) {
      throw std::invalid_argument("aggregate_treatment: treatment indicator must be 0 or 1");
    }
    const std::size_t cell =
        static_cast<std::size_t>(label - 1) * 2 + static_cast<std::size_t>(raw.d[i]);
    sums[cell] += raw.y[i];
    counts[cell] += 1;
  }
  std::vector<double> z(static_cast<std::size_t>(raw.k));
  for (std::size_t j = 0; j < z.size(); ++j) {
    const std::size_t control = j * 2, treated = j * 2 + 1;
    if (counts[control] != per_cell || counts[treated] != per_cell) {
      throw std::invalid_argument("aggregate_treatment: unbalanced design in stratum " +
                                  std::to_string(j + 1));
    }
    z[j] = sums[treated] / static_cast<double>(per_cell) -
           sums[control] / static_cast<double>(per_cell);
  }
  return z;
}

}  // namespace mineq
