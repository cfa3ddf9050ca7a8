#include "mineq/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mineq {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ModelParams::ModelParams(std::vector<double> mu) : mu_(std::move(mu)) {
  if (mu_.empty()) throw std::domain_error("ModelParams: k must be >= 1");
  bool any_finite = false;
  for (double m : mu_) {
    if (std::isnan(m)) throw std::domain_error("ModelParams: NaN component");
    if (m == -kInf) throw std::domain_error("ModelParams: -inf component not allowed");
    any_finite = any_finite || std::isfinite(m);
  }
  if (!any_finite) {
    throw std::domain_error("ModelParams: at least one component must be finite");
  }
}

ModelParams ModelParams::sparse(std::size_t k, std::size_t m, double value) {
  if (m == 0 || m > k) throw std::domain_error("ModelParams::sparse: need 1 <= m <= k");
  std::vector<double> mu(k, kInf);
  std::fill_n(mu.begin(), m, value);
  return ModelParams(std::move(mu));
}

double theta_bar(const ModelParams& params) {
  return *std::min_element(params.mu().begin(), params.mu().end());
}

bool in_null(const ModelParams& params, double theta0) {
  return theta_bar(params) >= theta0;
}

void sample_z_into(std::span<const double> mu, NormalStream& stream, std::span<double> out) {
  for (std::size_t j = 0; j < mu.size(); ++j) {
    out[j] = mu[j] == kInf ? kInf : mu[j] + stream.next();
  }
}

std::vector<double> sample_z(const ModelParams& params, StreamSeed seed) {
  NormalStream stream(seed);
  std::vector<double> z(params.k());
  sample_z_into(params.mu(), stream, z);
  return z;
}

std::vector<double> aggregate(const RawSample& raw) {
  if (raw.k < 1) throw std::invalid_argument("aggregate: k must be >= 1");
  const std::size_t n = raw.x.size();
  if (raw.w.size() != n) {
    throw std::invalid_argument("aggregate: label and value columns differ in length");
  }
  if (n == 0 || n % static_cast<std::size_t>(raw.k) != 0) {
    throw std::invalid_argument("aggregate: n must be a positive multiple of k");
  }
  const std::size_t per_label = n / static_cast<std::size_t>(raw.k);

  std::vector<double> sums(static_cast<std::size_t>(raw.k), 0.0);
  std::vector<std::size_t> counts(static_cast<std::size_t>(raw.k), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int label = raw.x[i];
    if (label < 1 || label > raw.k) {
      throw std::invalid_argument("aggregate: label " + std::to_string(label) +
                                  " outside {1,...," + std::to_string(raw.k) + "}");
    }
    sums[static_cast<std::size_t>(label - 1)] += raw.w[i];
    counts[static_cast<std::size_t>(label - 1)] += 1;
  }
  for (std::size_t j = 0; j < sums.size(); ++j) {
    if (counts[j] != per_label) {
      throw std::invalid_argument("aggregate: unbalanced design, label " +
                                  std::to_string(j + 1) + " has " +
                                  std::to_string(counts[j]) + " observations, expected " +
                                  std::to_string(per_label));
    }
    sums[j] /= static_cast<double>(per_label);
  }
  return sums;
}

}  // namespace mineq
