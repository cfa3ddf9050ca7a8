#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mineq/sim.hpp"

namespace mineq {

// Statistic of the most powerful test of mu = 0 against the uniform mixture
// of single-violation alternatives at separation b: sum_j exp(-z_j * b).
// Computed in log-sum-exp form; np_statistic exponentiates the log form
// (and may round to +inf where the plain sum itself would overflow).
double np_statistic_log(std::span<const double> z, double b);
double np_statistic(std::span<const double> z, double b);

// Power upper bound: no valid level-alpha test can beat the mixture test, so
// beta_bar caps the minimax power of every test. beta_inf tags along for
// comparison (exact closed form for the max test). The bound's quantile and
// power use independent streams so their errors do not correlate.
struct BoundReport {
  double beta_bar = 0.0;
  double beta_inf = 0.0;
  double b = 0.0;
  std::size_t k = 0;
  double c_tilde = 0.0;
  double se = 0.0;          // Monte Carlo se of beta_bar
  double c_tilde_se = 0.0;  // order-statistic bracket se, in log-statistic units
  std::uint64_t reps = 0;
};

BoundReport upper_bound_power(std::size_t k, double b, double alpha, const SimConfig& cfg);

// Sharpness sweep: at separation sqrt((2-eps) log k) the bound collapses to
// alpha as k grows, while the max test's exact power at sqrt((2+eps) log k)
// climbs to one.
struct SweepRow {
  std::size_t k = 0;
  double b_minus = 0.0;
  double beta_bar_minus = 0.0;
  double beta_bar_se = 0.0;
  double b_plus = 0.0;
  double beta_inf_plus = 0.0;
};

std::vector<SweepRow> asymptotic_sweep(double alpha, double epsilon,
                                       std::span<const std::size_t> ks, const SimConfig& cfg);

}  // namespace mineq
