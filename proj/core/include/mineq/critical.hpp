#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mineq/seed.hpp"
#include "mineq/sim.hpp"
#include "mineq/stats.hpp"

namespace mineq {

// Least-favorable level-alpha critical value for the one-sided L^p test:
// the (1-alpha) quantile of s_p(Z, 0) under Z ~ N(0, I_k).
struct CriticalValue {
  enum class Method { closed_form, monte_carlo };

  double value = 0.0;
  std::size_t k = 0;
  NormOrder p = NormOrder::infinity();
  double alpha = 0.0;
  Method method = Method::closed_form;
  std::optional<std::uint64_t> reps;
  std::optional<StreamSeed> seed;
  std::optional<double> mc_std_error;
};

// Exact critical value for p = infinity: Phi^{-1}((1-alpha)^{1/k}), valid
// because P(S_inf <= c) = Phi(c)^k for c >= 0 under mu = 0. Requires
// 0 < alpha <= 1/2 (the sign of c is otherwise not guaranteed).
CriticalValue critical_value_max(std::size_t k, double alpha);

// Monte Carlo critical value for any order (including infinity, for
// diagnostics): the ceil((1-alpha)N)-th order statistic of N simulated
// s_p(Z,0) values; the standard error comes from the binomial bracket of
// order statistics around the quantile. Requires reps >= 10^4.
CriticalValue critical_value_mc(std::size_t k, double alpha, NormOrder p, const SimConfig& cfg);

// Critical values for several orders evaluated on one shared sample (common
// random numbers), so pointwise orderings carry over to the quantiles exactly.
std::vector<CriticalValue> critical_values_crn(std::size_t k, double alpha,
                                               std::span<const NormOrder> ps,
                                               const SimConfig& cfg);

// JSON file cache keyed by (k, p, alpha, reps, master seed). Closed-form
// values are never cached (they are cheaper than the lookup).
class CriticalValueCache {
 public:
  explicit CriticalValueCache(std::filesystem::path file);  // loads file if present

  std::optional<CriticalValue> find(std::size_t k, NormOrder p, double alpha,
                                    std::uint64_t reps, std::uint64_t master) const;
  void insert(const CriticalValue& cv);
  void save() const;

  [[nodiscard]] const std::filesystem::path& path() const { return file_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }

 private:
  std::filesystem::path file_;
  std::map<std::string, CriticalValue> entries_;
};

// Dispatch: closed form for p = infinity, cache-aware Monte Carlo otherwise.
CriticalValue critical_value(std::size_t k, double alpha, NormOrder p, const SimConfig& cfg,
                             CriticalValueCache* cache = nullptr);

// Upper order statistic at rank ceil((1-alpha)N) of `values` (sorted in
// place), with the binomial-bracket standard error. Shared by every module
// that turns simulated statistics into quantiles.
struct QuantileEstimate {
  double value = 0.0;
  double se = 0.0;
  std::uint64_t rank = 0;  // 1-based
};

QuantileEstimate upper_order_statistic(std::vector<double>& values, double alpha);

}  // namespace mineq
