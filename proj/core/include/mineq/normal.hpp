#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "mineq/seed.hpp"

namespace mineq {

// Standard normal density.
double std_normal_pdf(double x);

// Standard normal cdf, absolute error below 1e-12 over the whole real line.
// +inf and -inf map to 1 and 0; NaN throws std::domain_error.
double std_normal_cdf(double x);

// Inverse of std_normal_cdf for q in (0,1); |cdf(quantile(q)) - q| <= 1e-12.
// Throws std::domain_error outside (0,1). Never returns an infinity.
double std_normal_quantile(double q);

// Deterministic N(0,1) stream: a seeded mt19937_64 uniform source mapped
// through the quantile function. Inversion keeps draws identical across
// platforms (std::normal_distribution is implementation-defined).
class NormalStream {
 public:
  explicit NormalStream(StreamSeed seed);

  double next();
  void fill(std::span<double> out);

 private:
  std::mt19937_64 engine_;
};

// k i.i.d. standard normal draws, fully determined by the seed.
std::vector<double> sample_gaussian_vector(StreamSeed seed, std::size_t k);

}  // namespace mineq
