#include "mineq/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mineq/critical.hpp"
#include "mineq/normal.hpp"

namespace mineq {

double np_statistic_log(std::span<const double> z, double b) {
  if (z.empty()) throw std::domain_error("np_statistic: empty vector");
  if (!(b > 0.0)) throw std::domain_error("np_statistic: b must be positive");
  double max_exponent = -std::numeric_limits<double>::infinity();
  for (double zj : z) {
    if (!std::isfinite(zj)) throw std::domain_error("np_statistic: non-finite component");
    max_exponent = std::max(max_exponent, -zj * b);
  }
  double sum = 0.0;
  for (double zj : z) sum += std::exp(-zj * b - max_exponent);
  return max_exponent + std::log(sum);
}

double np_statistic(std::span<const double> z, double b) {
  return std::exp(np_statistic_log(z, b));
}

BoundReport upper_bound_power(std::size_t k, double b, double alpha, const SimConfig& cfg) {
  if (k == 0) throw std::domain_error("upper_bound_power: k must be >= 1");
  if (!(b > 0.0)) throw std::domain_error("upper_bound_power: b must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("upper_bound_power: alpha must lie in (0,1)");
  }

  // Rejection compares in log units; the threshold is the (1-alpha) order
  // statistic of the log statistic under mu = 0.
  auto log_stat_at = [k, b](NormalStream& stream, double shift_first) {
    thread_local std::vector<double> z;
    z.resize(k);
    stream.fill(z);
    z[0] += shift_first;
    return np_statistic_log(z, b);
  };

  std::vector<double> null_stats =
      mc_collect(cfg, StreamSeed{cfg.master_seed, stream_domain::bound_quantile},
                 [&](NormalStream& stream) { return log_stat_at(stream, 0.0); });
  const QuantileEstimate threshold = upper_order_statistic(null_stats, alpha);

  const MeanEstimate power =
      mc_mean(cfg, StreamSeed{cfg.master_seed, stream_domain::bound_power},
              [&](NormalStream& stream) {
                return log_stat_at(stream, -b) > threshold.value ? 1.0 : 0.0;
              });

  BoundReport report;
  report.beta_bar = power.mean;
  report.beta_inf = 1.0 - std_normal_cdf(critical_value_max(k, alpha).value - b);
  report.b = b;
  report.k = k;
  report.c_tilde = std::exp(threshold.value);
  report.se = power.se;
  report.c_tilde_se = threshold.se;
  report.reps = cfg.reps;
  return report;
}

std::vector<SweepRow> asymptotic_sweep(double alpha, double epsilon,
                                       std::span<const std::size_t> ks, const SimConfig& cfg) {
  if (!(epsilon > 0.0 && epsilon < 2.0)) {
    throw std::domain_error("asymptotic_sweep: epsilon must lie in (0,2)");
  }
  std::size_t prev = 1;
  for (std::size_t k : ks) {
    if (k < 2 || k <= prev) {
      throw std::invalid_argument("asymptotic_sweep: ks must be increasing, each >= 2");
    }
    if (k > 100'000) {
      throw std::invalid_argument("asymptotic_sweep: k capped at 10^5");
    }
    prev = k;
  }

  std::vector<SweepRow> rows;
  rows.reserve(ks.size());
  for (std::size_t k : ks) {
    const double logk = std::log(static_cast<double>(k));
    SweepRow row;
    row.k = k;
    row.b_minus = std::sqrt((2.0 - epsilon) * logk);
    row.b_plus = std::sqrt((2.0 + epsilon) * logk);
    const BoundReport bound = upper_bound_power(k, row.b_minus, alpha, cfg);
    row.beta_bar_minus = bound.beta_bar;
    row.beta_bar_se = bound.se;
    row.beta_inf_plus = 1.0 - std_normal_cdf(critical_value_max(k, alpha).value - row.b_plus);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mineq
