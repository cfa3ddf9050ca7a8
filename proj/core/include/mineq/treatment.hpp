#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mineq/power.hpp"
#include "mineq/sim.hpp"

namespace mineq {

// Per-stratum treatment effects tau(j) = E(Y1|X=j) - E(Y0|X=j), observed
// through Z_j ~ N(tau(j), 1). A -inf component encodes a stratum so harmful
// it never contributes welfare nor triggers a one-sided rejection.
class TreatmentModel {
 public:
  explicit TreatmentModel(std::vector<double> tau);

  [[nodiscard]] std::size_t k() const { return tau_.size(); }
  [[nodiscard]] const std::vector<double>& tau() const { return tau_; }

 private:
  std::vector<double> tau_;
};

// Average welfare gain of the oracle rule (treat where tau > 0) over blanket
// nontreatment: (1/k) * sum_j (tau(j))_+.
double welfare_gain(const TreatmentModel& model);

// Test of "no stratum benefits" (tau <= 0 componentwise): the sign-flipped
// moment-inequality test, rejecting when s_p(-z, 0) > c.
bool treatment_reject(const TestSpec& test, std::span<const double> z);

// The m-sparse candidate family on the welfare sphere w* = b: m strata at
// k*b/m, the rest at -inf. Returned in the tau parameterization.
std::vector<std::vector<double>> welfare_family(std::size_t k, double b,
                                                std::span<const std::size_t> ms = {});

// Minimum Monte Carlo power over the welfare family: an upper bound on the
// minimax power over all tau with welfare gain >= b. worst_case_mu holds the
// argmin tau vector.
PowerReport minimax_power_welfare(const TestSpec& test, double b, std::size_t k,
                                  const SimConfig& cfg, std::span<const std::size_t> ms = {});

// Family-minimum power of several tests per separation b, common random
// numbers across tests, with the per-b winner flagged.
struct WelfareComparison {
  std::vector<double> b_grid;
  std::vector<std::vector<PowerReport>> reports;  // [b][test]
  std::vector<std::size_t> winner;                // argmax test index per b
};

WelfareComparison compare_tests_welfare(std::span<const TestSpec> tests,
                                        std::span<const double> b_grid, std::size_t k,
                                        const SimConfig& cfg);

// Balanced stratified experiment: n/(2k) observations per (stratum, arm)
// cell. aggregate_treatment() returns the per-stratum mean differences.
struct TreatmentRawSample {
  std::vector<int> x;  // stratum labels in {1,...,k}
  std::vector<int> d;  // treatment indicator in {0,1}
  std::vector<double> y;
  int k = 0;
};

std::vector<double> aggregate_treatment(const TreatmentRawSample& raw);

}  // namespace mineq
