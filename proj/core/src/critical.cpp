#include "mineq/critical.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mineq/normal.hpp"

namespace mineq {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 0.5)) {
    throw std::domain_error("critical value: alpha must lie in (0, 1/2]");
  }
}

void check_k(std::size_t k) {
  if (k == 0) throw std::domain_error("critical value: k must be >= 1");
}

std::string cache_key(std::size_t k, NormOrder p, double alpha, std::uint64_t reps,
                      std::uint64_t master) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "k=%zu;p=%s;alpha=%.17g;reps=%llu;master=%llu", k,
                p.to_string().c_str(), alpha, static_cast<unsigned long long>(reps),
                static_cast<unsigned long long>(master));
  return buf;
}

}  // namespace

QuantileEstimate upper_order_statistic(std::vector<double>& values, double alpha) {
  const std::uint64_t n = values.size();
  if (n == 0) throw std::invalid_argument("upper_order_statistic: empty sample");
  const double target = (1.0 - alpha) * static_cast<double>(n);
  std::uint64_t rank = static_cast<std::uint64_t>(std::ceil(target));
  // ceil can land one index high when (1-alpha)*n is an integer up to rounding.
  if (rank > 0 && static_cast<double>(rank) - target >= 1.0 - 1e-9) --rank;
  rank = std::max<std::uint64_t>(rank, 1);
  if (rank >= n) {
    throw std::invalid_argument(
        "upper_order_statistic: sample too small for requested alpha "
        "(the order statistic would be the sample maximum)");
  }

  std::sort(values.begin(), values.end());
  const double value = values[rank - 1];

  // One-sigma bracket of the rank under the binomial count of values below
  // the true quantile.
  const auto half_width = static_cast<std::uint64_t>(
      std::ceil(std::sqrt(static_cast<double>(n) * alpha * (1.0 - alpha))));
  const std::uint64_t lo = rank > half_width ? rank - half_width : 1;
  const std::uint64_t hi = std::min<std::uint64_t>(rank + half_width, n);
  const double se = (values[hi - 1] - values[lo - 1]) / 2.0;
  return QuantileEstimate{value, se, rank};
}

CriticalValue critical_value_max(std::size_t k, double alpha) {
  check_k(k);
  check_alpha(alpha);
  // Upper-tail form keeps full relative precision for large k, where
  // (1-alpha)^{1/k} is within ulps of 1.
  const double tail = -std::expm1(std::log1p(-alpha) / static_cast<double>(k));
  CriticalValue cv;
  cv.value = -std_normal_quantile(tail);
  cv.k = k;
  cv.p = NormOrder::infinity();
  cv.alpha = alpha;
  cv.method = CriticalValue::Method::closed_form;
  return cv;
}

std::vector<CriticalValue> critical_values_crn(std::size_t k, double alpha,
                                               std::span<const NormOrder> ps,
                                               const SimConfig& cfg) {
  check_k(k);
  check_alpha(alpha);
  if (ps.empty()) return {};
  if (cfg.reps < 10'000) {
    throw std::invalid_argument("critical_value_mc: reps must be >= 10^4");
  }

  const StreamSeed base{cfg.master_seed, stream_domain::critical};
  auto samples = mc_collect_multi(
      cfg, base, ps.size(), [&, k](NormalStream& stream, std::span<double> out) {
        thread_local std::vector<double> z;
        z.resize(k);
        stream.fill(z);
        for (std::size_t j = 0; j < ps.size(); ++j) out[j] = s_p(z, 0.0, ps[j]);
      });

  std::vector<CriticalValue> result;
  result.reserve(ps.size());
  for (std::size_t j = 0; j < ps.size(); ++j) {
    const QuantileEstimate q = upper_order_statistic(samples[j], alpha);
    CriticalValue cv;
    cv.value = q.value;
    cv.k = k;
    cv.p = ps[j];
    cv.alpha = alpha;
    cv.method = CriticalValue::Method::monte_carlo;
    cv.reps = cfg.reps;
    cv.seed = base;
    cv.mc_std_error = q.se;
    result.push_back(cv);
  }
  return result;
}

CriticalValue critical_value_mc(std::size_t k, double alpha, NormOrder p,
                                const SimConfig& cfg) {
  const NormOrder ps[] = {p};
  return critical_values_crn(k, alpha, ps, cfg).front();
}

CriticalValue critical_value(std::size_t k, double alpha, NormOrder p, const SimConfig& cfg,
                             CriticalValueCache* cache) {
  if (p.is_infinity()) return critical_value_max(k, alpha);
  if (cache != nullptr) {
    if (auto hit = cache->find(k, p, alpha, cfg.reps, cfg.master_seed)) return *hit;
  }
  CriticalValue cv = critical_value_mc(k, alpha, p, cfg);
  if (cache != nullptr) {
    cache->insert(cv);
    cache->save();
  }
  return cv;
}

CriticalValueCache::CriticalValueCache(std::filesystem::path file) : file_(std::move(file)) {
  std::ifstream in(file_);
  if (!in) return;
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (!doc.is_object()) return;  // unreadable cache: start fresh
  for (const auto& [key, e] : doc.items()) {
    if (!e.is_object()) continue;
    CriticalValue cv;
    cv.value = e.value("value", 0.0);
    cv.k = e.value("k", std::size_t{0});
    cv.p = NormOrder::parse(e.value("p", "inf"));
    cv.alpha = e.value("alpha", 0.0);
    cv.method = CriticalValue::Method::monte_carlo;
    cv.reps = e.value("reps", std::uint64_t{0});
    cv.seed = StreamSeed{e.value("master", std::uint64_t{0}), e.value("stream", std::uint64_t{0})};
    cv.mc_std_error = e.value("mc_std_error", 0.0);
    entries_[key] = cv;
  }
}

std::optional<CriticalValue> CriticalValueCache::find(std::size_t k, NormOrder p, double alpha,
                                                      std::uint64_t reps,
                                                      std::uint64_t master) const {
  const auto it = entries_.find(cache_key(k, p, alpha, reps, master));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void CriticalValueCache::insert(const CriticalValue& cv) {
  if (cv.method != CriticalValue::Method::monte_carlo || !cv.reps || !cv.seed) {
    throw std::invalid_argument("CriticalValueCache: only Monte Carlo values are cached");
  }
  entries_[cache_key(cv.k, cv.p, cv.alpha, *cv.reps, cv.seed->master)] = cv;
}

void CriticalValueCache::save() const {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& [key, cv] : entries_) {
    doc[key] = {
        {"value", cv.value},
        {"k", cv.k},
        {"p", cv.p.to_string()},
        {"alpha", cv.alpha},
        {"reps", cv.reps.value()},
        {"master", cv.seed->master},
        {"stream", cv.seed->stream_id},
        {"mc_std_error", cv.mc_std_error.value_or(0.0)},
    };
  }
  std::ofstream out(file_);
  if (!out) {
    throw std::runtime_error("CriticalValueCache: cannot write " + file_.string());
  }
  out << doc.dump(2) << '\n';
}

}  // namespace mineq
