#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>

namespace mineq {

// Order of a one-sided L^p norm: any real p >= 1, or infinity (max norm).
class NormOrder {
 public:
  static NormOrder finite(double p);
  static NormOrder infinity() { return NormOrder(std::numeric_limits<double>::infinity()); }

  // Accepts a decimal number >= 1 or the token "inf" (case-insensitive).
  static NormOrder parse(std::string_view text);

  [[nodiscard]] bool is_infinity() const { return std::isinf(p_); }
  [[nodiscard]] double value() const { return p_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const NormOrder&, const NormOrder&) = default;

 private:
  explicit NormOrder(double p) : p_(p) {}
  double p_;
};

// One-sided L^p statistic: the p-norm of the componentwise positive parts
// (theta0 - z_j)_+, or their maximum for p = infinity. +inf components of z
// contribute zero; a -inf component throws (the statistic would be +inf).
// Finite p is evaluated by factoring out the largest positive part so that
// large orders (p = 50) do not overflow.
double s_p(std::span<const double> z, double theta0, NormOrder p);

// ||x||_{-,p}: one-sided norm of the negative parts; equals s_p(x, 0, p).
double one_sided_norm_neg(std::span<const double> x, NormOrder p);

// ||x||_{+,p}: one-sided norm of the positive parts.
double one_sided_norm_pos(std::span<const double> x, NormOrder p);

}  // namespace mineq
