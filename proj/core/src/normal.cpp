#include "mineq/normal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mineq {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

}  // namespace

double std_normal_pdf(double x) {
  if (std::isnan(x)) throw std::domain_error("std_normal_pdf: NaN input");
  if (std::isinf(x)) return 0.0;
  return kInvSqrt2Pi * std::exp(-0.5 * x * x);
}

double std_normal_cdf(double x) {
  if (std::isnan(x)) throw std::domain_error("std_normal_cdf: NaN input");
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  // erfc keeps full relative accuracy in the lower tail; the upper tail
  // saturates to 1 which is exact to within one ulp for x > 8.3.
  return 0.5 * std::erfc(-x * kInvSqrt2);
}

double std_normal_quantile(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::domain_error("std_normal_quantile: q must lie strictly in (0,1)");
  }

  // Wichura's algorithm AS 241 (PPND16), accurate to ~1e-16 relative.
  const double p = q - 0.5;
  if (std::fabs(p) <= 0.425) {
    const double r = 0.180625 - p * p;
    const double num =
        (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
              6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
            1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
          1.3314166789178437745e+2) * r + 3.3871328727963666080e+0);
    const double den =
        (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
              3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
            5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
          4.2313330701600911252e+1) * r + 1.0);
    return p * num / den;
  }

  double r = p < 0.0 ? q : 1.0 - q;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    const double num =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
            3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
          4.63033784615654529590e+0) * r + 1.42343711074968357734e+0);
    const double den =
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
          2.05319162663775882187e+0) * r + 1.0);
    value = num / den;
  } else {
    r -= 5.0;
    const double num =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
          5.46378491116411436990e+0) * r + 6.65790464350110377720e+0);
    const double den =
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0);
    value = num / den;
  }
  return p < 0.0 ? -value : value;
}

NormalStream::NormalStream(StreamSeed seed) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed.master & 0xffffffffu),
      static_cast<std::uint32_t>(seed.master >> 32),
      static_cast<std::uint32_t>(seed.stream_id & 0xffffffffu),
      static_cast<std::uint32_t>(seed.stream_id >> 32),
  };
  engine_.seed(seq);
}

double NormalStream::next() {
  // 53-bit uniform centered on (0,1): never 0 or 1, so the inversion below
  // always returns a finite value.
  const double u =
      (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  return std_normal_quantile(u);
}

void NormalStream::fill(std::span<double> out) {
  for (double& v : out) v = next();
}

std::vector<double> sample_gaussian_vector(StreamSeed seed, std::size_t k) {
  if (k == 0) throw std::domain_error("sample_gaussian_vector: k must be >= 1");
  NormalStream stream(seed);
  std::vector<double> out(k);
  stream.fill(out);
  return out;
}

}  // namespace mineq
