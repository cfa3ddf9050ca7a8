#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mineq/critical.hpp"
#include "mineq/model.hpp"
#include "mineq/sim.hpp"
#include "mineq/stats.hpp"

namespace mineq {

// A calibrated one-sided L^p test: rejects H0 at theta0 when
// s_p(Z, theta0) > critical.value.
struct TestSpec {
  std::size_t k = 0;
  NormOrder p = NormOrder::infinity();
  double alpha = 0.0;
  CriticalValue critical;
};

// Builds the test with its matching critical value (closed form for p = inf,
// cache-aware Monte Carlo otherwise).
TestSpec make_test(std::size_t k, double alpha, NormOrder p, const SimConfig& cfg,
                   CriticalValueCache* cache = nullptr);

struct PowerReport {
  double estimate = 0.0;
  double std_error = 0.0;  // 0 for exact formulas
  std::optional<std::uint64_t> reps;
  std::optional<std::vector<double>> worst_case_mu;
};

bool reject(const TestSpec& test, std::span<const double> z, double theta0);

// Exact minimax power over the alternatives whose identified set sits at
// least b below theta0: 1 - Phi(c - b), independent of theta0 by location
// invariance. Standard error of the critical value propagates through the
// density when c itself was simulated.
double minimax_power_exact(const TestSpec& test, double b);
double minimax_power_exact_se(const TestSpec& test, double b);

// Monte Carlo rejection probability at a fixed mean vector.
PowerReport power_at(const TestSpec& test, const ModelParams& mu, double theta0,
                     const SimConfig& cfg);

// Power of each test against each member of a family of mean vectors, all
// tests evaluated on common draws per member; members get per-member streams.
// power[member][test].
struct FamilyPower {
  std::vector<std::vector<double>> members;
  std::vector<std::vector<MeanEstimate>> power;
};

FamilyPower family_power(std::span<const TestSpec> tests,
                         std::span<const std::vector<double>> members, const SimConfig& cfg);

// The m-sparse candidate family for one-sided L^p-norm alternatives with
// separation b: m coordinates at -b * m^{-1/p_alt}, the rest slack (+inf),
// every member exactly on the norm sphere. m = 1..k unless `ms` is given.
std::vector<std::vector<double>> lp_alt_family(std::size_t k, double b, NormOrder p_alt,
                                               std::span<const std::size_t> ms = {});

// Minimum Monte Carlo power over the candidate family: an upper bound on the
// minimax power over the full norm-separated alternative set (the search is
// restricted to the symmetric sparse boundary). worst_case_mu is the argmin.
PowerReport minimax_power_lp_alt(const TestSpec& test, double b, NormOrder p_alt,
                                 std::size_t k, const SimConfig& cfg,
                                 std::span<const std::size_t> ms = {});

}  // namespace mineq
