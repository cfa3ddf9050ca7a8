#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mineq/normal.hpp"
#include "mineq/seed.hpp"

namespace mineq {

// Mean vector of the Gaussian moment model Z ~ N(mu, I_k). Components may be
// +inf, encoding a slack moment whose observation is deterministically +inf
// and therefore ignored exactly by every one-sided statistic; -inf is
// rejected, and at least one component must be finite.
class ModelParams {
 public:
  explicit ModelParams(std::vector<double> mu);

  [[nodiscard]] std::size_t k() const { return mu_.size(); }
  [[nodiscard]] const std::vector<double>& mu() const { return mu_; }

  // Vector with m copies of `value` followed by k - m slack (+inf) moments.
  static ModelParams sparse(std::size_t k, std::size_t m, double value);

 private:
  std::vector<double> mu_;
};

// Upper endpoint of the identified set: min_j mu(j), attained by a finite
// component (slack moments never bind).
double theta_bar(const ModelParams& params);

// True iff theta0 lies in the identified set, i.e. theta_bar >= theta0.
bool in_null(const ModelParams& params, double theta0);

// One observation Z: mu(j) + e_j with e_j i.i.d. N(0,1) for finite mu(j),
// +inf propagated unchanged. Only finite components consume draws.
std::vector<double> sample_z(const ModelParams& params, StreamSeed seed);
void sample_z_into(std::span<const double> mu, NormalStream& stream, std::span<double> out);

// Balanced one-way design: labels in {1,...,k}, exactly n/k observations per
// label. aggregate() averages w within each label.
struct RawSample {
  std::vector<int> x;
  std::vector<double> w;
  int k = 0;
};

std::vector<double> aggregate(const RawSample& raw);

}  // namespace mineq
