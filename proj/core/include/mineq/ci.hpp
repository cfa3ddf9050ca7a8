#pragma once

#include <cstdint>
#include <span>

#include "mineq/model.hpp"
#include "mineq/power.hpp"
#include "mineq/sim.hpp"

namespace mineq {

// Default bisection tolerance for test inversion, in theta units.
inline constexpr double kInversionTol = 1e-8;

// Upper confidence bound: the interval is (-inf, c_hat].
struct UpperCI {
  double c_hat = 0.0;
};

// Nondecreasing loss on the CI's excess length (c_hat - theta_bar)_+, from a
// catalog whose representing measure nu (loss(t) = integral of 1{t >= b} dnu)
// is known in closed form: point mass at b, Lebesgue, or 2b db.
struct LossSpec {
  enum class Kind { zero_one, linear, quadratic };

  Kind kind = Kind::zero_one;
  double b = 0.0;  // threshold of the zero-one loss

  static LossSpec zero_one(double b);
  static LossSpec linear() { return LossSpec{Kind::linear, 0.0}; }
  static LossSpec quadratic() { return LossSpec{Kind::quadratic, 0.0}; }

  [[nodiscard]] double operator()(double t) const;
  [[nodiscard]] const char* name() const;
};

// Largest theta0 not rejected: closed form min_j z_j + c for p = inf,
// monotone bisection of theta0 -> s_p(z, theta0) - c on
// [min z, min z + c] otherwise (0 at the left end, >= 0 at the right since
// s_p >= s_inf). Returns the bracket's lower end, so
// s_p(z, c_hat) <= c and s_p(z, c_hat + d) > c for every d > tol.
UpperCI invert_test(const TestSpec& test, std::span<const double> z,
                    double tol = kInversionTol);

// The bisection path regardless of p; lets the closed form be cross-checked.
UpperCI invert_test_bisection(const TestSpec& test, std::span<const double> z, double tol);

struct RiskReport {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t reps = 0;
};

// Monte Carlo estimate of E_mu loss((c_hat(Z) - theta_bar(mu))_+).
RiskReport ci_risk(const TestSpec& test, const ModelParams& mu, const LossSpec& loss,
                   const SimConfig& cfg);

// Empirical check of the identity between minimax test power and zero-one
// CI risk: lhs = 1 - Phi(c - b) (exact given c), rhs = 1 - risk at the least
// favorable mean (-b, +inf, ..., +inf). gap should vanish within noise.
struct DualityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double se = 0.0;  // combined: rhs Monte Carlo + critical-value propagation
  double b = 0.0;
  std::uint64_t reps = 0;
};

DualityReport duality_check(const TestSpec& test, double b, const SimConfig& cfg);

// Risk under a general catalog loss two ways: directly, and as the integral
// of zero-one risks against the loss's representing measure (one shared
// excess sample across the quadrature grid, independent stream for direct).
struct LossIntegralReport {
  double direct = 0.0;
  double direct_se = 0.0;
  double integrated = 0.0;
  double integrated_se = 0.0;
  double gap = 0.0;
  double b_max = 0.0;  // quadrature truncation point
  std::uint64_t reps = 0;
};

LossIntegralReport loss_integral_check(const TestSpec& test, const LossSpec& loss,
                                       const SimConfig& cfg);

}  // namespace mineq
