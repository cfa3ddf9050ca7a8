#include "mineq/ci.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mineq/normal.hpp"

namespace mineq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double min_finite(std::span<const double> z) {
  double m = kInf;
  for (double v : z) {
    if (std::isnan(v)) throw std::domain_error("invert_test: NaN component");
    if (v == -kInf) throw std::domain_error("invert_test: -inf component");
    if (v < m) m = v;
  }
  if (m == kInf) throw std::domain_error("invert_test: no finite component");
  return m;
}

ModelParams least_favorable_mu(std::size_t k, double theta_bar_value) {
  return ModelParams::sparse(k, 1, theta_bar_value);
}

}  // namespace

LossSpec LossSpec::zero_one(double b) {
  if (!(b > 0.0)) throw std::domain_error("LossSpec::zero_one: b must be positive");
  return LossSpec{Kind::zero_one, b};
}

double LossSpec::operator()(double t) const {
  const double excess = std::max(t, 0.0);
  switch (kind) {
    case Kind::zero_one: return excess >= b ? 1.0 : 0.0;
    case Kind::linear: return excess;
    case Kind::quadratic: return excess * excess;
  }
  return 0.0;
}

const char* LossSpec::name() const {
  switch (kind) {
    case Kind::zero_one: return "zero_one";
    case Kind::linear: return "linear";
    case Kind::quadratic: return "quadratic";
  }
  return "?";
}

UpperCI invert_test_bisection(const TestSpec& test, std::span<const double> z, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("invert_test: tol must be positive");
  if (z.size() != test.k) {
    throw std::invalid_argument("invert_test: observation length does not match the test's k");
  }
  const double c = test.critical.value;
  double lo = min_finite(z);
  double hi = lo + c;
  if (s_p(z, hi, test.p) <= c) return UpperCI{hi};  // single active coordinate
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2.0;
    if (s_p(z, mid, test.p) <= c) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return UpperCI{lo};
}

UpperCI invert_test(const TestSpec& test, std::span<const double> z, double tol) {
  if (test.p.is_infinity()) {
    if (z.size() != test.k) {
      throw std::invalid_argument("invert_test: observation length does not match the test's k");
    }
    return UpperCI{min_finite(z) + test.critical.value};
  }
  return invert_test_bisection(test, z, tol);
}

RiskReport ci_risk(const TestSpec& test, const ModelParams& mu, const LossSpec& loss,
                   const SimConfig& cfg) {
  if (mu.k() != test.k) {
    throw std::invalid_argument("ci_risk: model dimension does not match the test's k");
  }
  const double tb = theta_bar(mu);
  const StreamSeed base{cfg.master_seed, stream_domain::ci_risk};
  const MeanEstimate est = mc_mean(cfg, base, [&](NormalStream& stream) {
    thread_local std::vector<double> z;
    z.resize(mu.k());
    sample_z_into(mu.mu(), stream, z);
    const UpperCI ci = invert_test(test, z, kInversionTol);
    return loss(ci.c_hat - tb);
  });
  return RiskReport{est.mean, est.se, est.reps};
}

DualityReport duality_check(const TestSpec& test, double b, const SimConfig& cfg) {
  if (!(b > 0.0)) throw std::domain_error("duality_check: b must be positive");
  DualityReport report;
  report.b = b;
  report.lhs = minimax_power_exact(test, b);
  const double lhs_se = minimax_power_exact_se(test, b);

  const ModelParams mu_star = least_favorable_mu(test.k, -b);
  const RiskReport risk = ci_risk(test, mu_star, LossSpec::zero_one(b), cfg);
  report.rhs = 1.0 - risk.estimate;
  report.gap = std::fabs(report.lhs - report.rhs);
  report.se = std::sqrt(risk.std_error * risk.std_error + lhs_se * lhs_se);
  report.reps = risk.reps;
  return report;
}

LossIntegralReport loss_integral_check(const TestSpec& test, const LossSpec& loss,
                                       const SimConfig& cfg) {
  const ModelParams mu_star = least_favorable_mu(test.k, 0.0);

  LossIntegralReport report;
  report.reps = cfg.reps;

  const RiskReport direct = ci_risk(test, mu_star, loss, cfg);
  report.direct = direct.estimate;
  report.direct_se = direct.std_error;

  if (loss.kind == LossSpec::Kind::zero_one) {
    // Point-mass measure: the integral is the zero-one risk itself.
    report.integrated = report.direct;
    report.integrated_se = report.direct_se;
    report.gap = 0.0;
    report.b_max = loss.b;
    return report;
  }

  // Shared excess sample for the whole quadrature grid; beyond c + 8 the
  // excess has probability below 1e-14 and is truncated.
  const double b_max = test.critical.value + 8.0;
  const std::size_t cells = 200;
  const double step = b_max / static_cast<double>(cells);

  // Midpoint weights of the representing measure: dnu = db (linear) or
  // 2b db (quadratic), accumulated so that v(t) = sum_{b_i <= t} w_i
  // approximates loss(t).
  std::vector<double> cumulative(cells + 1, 0.0);
  for (std::size_t i = 0; i < cells; ++i) {
    const double bi = (static_cast<double>(i) + 0.5) * step;
    const double w = loss.kind == LossSpec::Kind::linear ? step : 2.0 * bi * step;
    cumulative[i + 1] = cumulative[i] + w;
  }

  const double tb = theta_bar(mu_star);
  const StreamSeed base{cfg.master_seed, stream_domain::loss_grid};
  const MeanEstimate integrated = mc_mean(cfg, base, [&](NormalStream& stream) {
    thread_local std::vector<double> z;
    z.resize(mu_star.k());
    sample_z_into(mu_star.mu(), stream, z);
    const UpperCI ci = invert_test(test, z, kInversionTol);
    const double excess = std::max(ci.c_hat - tb, 0.0);
    // Number of grid midpoints b_i = (i + 0.5) step with b_i <= excess.
    const auto idx = static_cast<std::size_t>(
        std::clamp(std::floor(excess / step + 0.5), 0.0, static_cast<double>(cells)));
    return cumulative[idx];
  });
  report.integrated = integrated.mean;
  report.integrated_se = integrated.se;
  report.gap = std::fabs(report.direct - report.integrated);
  report.b_max = b_max;
  return report;
}

}  // namespace mineq
