#include "abcircle/metrics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <tuple>

#include "abcircle/discriminate.hpp"

namespace abcircle {

double error_score(const Circle& truth, const Circle& detected,
                   const MetricWeights& w) {
  return w.eta * (std::abs(truth.x0 - detected.x0) +
                  std::abs(truth.y0 - detected.y0)) +
         w.mu * std::abs(truth.r - detected.r);
}

double multiple_error(const GroundTruth& truths,
                      const std::vector<Circle>& detections,
                      const MetricWeights& w) {
  if (truths.circles.empty()) {
    throw std::invalid_argument("multiple_error: no ground-truth circles");
  }
  std::vector<bool> used(detections.size(), false);
  double total = 0.0;
  for (const auto& t : truths.circles) {
    std::size_t pick = detections.size();
    for (std::size_t d = 0; d < detections.size(); ++d) {
      if (used[d]) continue;
      if (pick == detections.size()) {
        pick = d;
        continue;
      }
      const auto key = [&](const Circle& c) {
        return std::make_tuple(distinctiveness(t, c), c.x0, c.y0, c.r);
      };
      if (key(detections[d]) < key(detections[pick])) pick = d;
    }
    if (pick == detections.size()) {
      total += kMissPenalty;
    } else {
      used[pick] = true;
      total += error_score(t, detections[pick], w);
    }
  }
  return total / static_cast<double>(truths.circles.size());
}

double success_rate(const std::vector<double>& me_values) {
  if (me_values.empty()) {
    throw std::invalid_argument("success_rate: empty sample");
  }
  const auto hits = std::count_if(me_values.begin(), me_values.end(),
                                  [](double me) { return me < 1.0; });
  return static_cast<double>(hits) /
         static_cast<double>(me_values.size());
}

namespace {

// Doubled midranks stay integral even across tie groups: the group
// covering sorted positions [i, j) gets midrank (i + 1 + j) / 2.
struct PooledRanks {
  std::vector<std::int64_t> doubled;  // doubled midrank per pooled index
  std::vector<int> group_sizes;
};

PooledRanks pooled_midranks(const std::vector<double>& a,
                            const std::vector<double>& b) {
  std::vector<double> values;
  values.reserve(a.size() + b.size());
  values.insert(values.end(), a.begin(), a.end());
  values.insert(values.end(), b.begin(), b.end());

  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return values[l] < values[r];
  });

  PooledRanks out;
  out.doubled.resize(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    const auto doubled = static_cast<std::int64_t>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) out.doubled[order[k]] = doubled;
    out.group_sizes.push_back(static_cast<int>(j - i));
    i = j;
  }
  return out;
}

}  // namespace

double wilcoxon_exact_p(const std::vector<double>& a,
                        const std::vector<double>& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("wilcoxon: empty sample");
  }
  const auto n = a.size();
  const auto total_n = a.size() + b.size();
  if (total_n > 20) {
    throw std::invalid_argument("wilcoxon_exact_p: pooled sample too large");
  }
  const PooledRanks ranks = pooled_midranks(a, b);
  std::int64_t observed = 0;
  for (std::size_t i = 0; i < n; ++i) observed += ranks.doubled[i];

  std::uint64_t count_le = 0;
  std::uint64_t count_ge = 0;
  std::uint64_t count_all = 0;
  const auto limit = std::uint32_t{1} << total_n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (std::popcount(mask) != static_cast<int>(n)) continue;
    std::int64_t sum = 0;
    for (std::uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      sum += ranks.doubled[static_cast<std::size_t>(
          std::countr_zero(bits))];
    }
    ++count_all;
    if (sum <= observed) ++count_le;
    if (sum >= observed) ++count_ge;
  }
  const double tail =
      static_cast<double>(std::min(count_le, count_ge)) /
      static_cast<double>(count_all);
  return std::min(1.0, 2.0 * tail);
}

double wilcoxon_normal_p(const std::vector<double>& a,
                         const std::vector<double>& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("wilcoxon: empty sample");
  }
  const double n = static_cast<double>(a.size());
  const double m = static_cast<double>(b.size());
  const double total_n = n + m;
  const PooledRanks ranks = pooled_midranks(a, b);

  double w = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    w += static_cast<double>(ranks.doubled[i]) / 2.0;
  }
  const double mean = n * (total_n + 1.0) / 2.0;

  double tie_sum = 0.0;
  for (const int t : ranks.group_sizes) {
    const double td = t;
    tie_sum += td * td * td - td;
  }
  const double variance =
      n * m / 12.0 *
      ((total_n + 1.0) - tie_sum / (total_n * (total_n - 1.0)));
  if (variance <= 0.0) return 1.0;

  const double z =
      std::max(0.0, std::abs(w - mean) - 0.5) / std::sqrt(variance);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

double wilcoxon_ranksum(const std::vector<double>& a,
                        const std::vector<double>& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("wilcoxon: empty sample");
  }
  if (a.size() + b.size() <= 12) return wilcoxon_exact_p(a, b);
  return wilcoxon_normal_p(a, b);
}

}  // namespace abcircle
