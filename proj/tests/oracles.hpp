// Test-only oracles, independent of the library code paths they check.
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace oracle {

// Standard normal cdf by composite Simpson integration of the density from 0
// to x (plus 1/2); error well below 1e-13 for |x| <= 9.
double normal_cdf_integral(double x);

// Quantile by bisection on a cdf to bracket width `tol`.
double quantile_bisect(const std::function<double(double)>& cdf, double q, double lo, double hi,
                       double tol);

// One-sample Kolmogorov-Smirnov statistic of `sample` against `cdf`.
// Sorts a copy.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

// KS rejection threshold at significance level `alpha` (one-term bound,
// conservative): sqrt(log(2/alpha) / (2n)).
double ks_threshold(std::size_t n, double alpha);

// Composite Simpson integral of f on [a, b] with n (even) intervals.
double integrate(const std::function<double(double)>& f, double a, double b, std::size_t n);

// Largest theta on the grid {lo, lo+step, ...} <= hi with g(theta) <= level;
// the brute-force counterpart of a monotone bisection.
double grid_sup_below(const std::function<double(double)>& g, double level, double lo, double hi,
                      double step);

}  // namespace oracle
