#include "mineq/stats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mineq {

NormOrder NormOrder::finite(double p) {
  if (!(p >= 1.0) || std::isinf(p)) {
    throw std::domain_error("NormOrder: finite order must satisfy p >= 1");
  }
  return NormOrder(p);
}

NormOrder NormOrder::parse(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "inf" || lower == "infinity") return infinity();
  double p = 0.0;
  const auto [ptr, ec] = std::from_chars(lower.data(), lower.data() + lower.size(), p);
  if (ec != std::errc{} || ptr != lower.data() + lower.size()) {
    throw std::invalid_argument("NormOrder: cannot parse '" + std::string(text) + "'");
  }
  return finite(p);
}

std::string NormOrder::to_string() const {
  if (is_infinity()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", p_);
  return buf;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// L^p norm of part(x_j) over j, allocation-free (these sit inside Monte
// Carlo inner loops). Finite p factors out the largest part so that large
// orders cannot overflow; p = 1 and p = 2 skip the pow calls.
template <class PartFn>
double lp_of_parts(std::span<const double> x, NormOrder p, PartFn part) {
  double max_part = 0.0;
  for (double v : x) max_part = std::max(max_part, part(v));
  if (max_part == 0.0) return 0.0;
  if (p.is_infinity()) return max_part;
  const double order = p.value();
  double sum = 0.0;
  if (order == 1.0) {
    for (double v : x) sum += part(v) / max_part;
  } else if (order == 2.0) {
    for (double v : x) {
      const double t = part(v) / max_part;
      sum += t * t;
    }
  } else {
    for (double v : x) {
      const double t = part(v) / max_part;
      if (t > 0.0) sum += std::pow(t, order);
    }
  }
  return max_part * std::pow(sum, 1.0 / order);
}

}  // namespace

double s_p(std::span<const double> z, double theta0, NormOrder p) {
  if (z.empty()) throw std::domain_error("s_p: empty vector");
  return lp_of_parts(z, p, [theta0](double zj) {
    if (std::isnan(zj)) throw std::domain_error("s_p: NaN component");
    if (zj == -kInf) throw std::domain_error("s_p: -inf component makes the statistic infinite");
    return zj == kInf ? 0.0 : std::max(theta0 - zj, 0.0);
  });
}

double one_sided_norm_neg(std::span<const double> x, NormOrder p) {
  return s_p(x, 0.0, p);
}

double one_sided_norm_pos(std::span<const double> x, NormOrder p) {
  if (x.empty()) throw std::domain_error("one_sided_norm_pos: empty vector");
  return lp_of_parts(x, p, [](double xj) {
    if (std::isnan(xj)) throw std::domain_error("one_sided_norm_pos: NaN component");
    if (xj == kInf) {
      throw std::domain_error("one_sided_norm_pos: +inf component makes the norm infinite");
    }
    return xj == -kInf ? 0.0 : std::max(xj, 0.0);
  });
}

}  // namespace mineq
