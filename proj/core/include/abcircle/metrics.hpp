#pragma once

#include <vector>

#include "abcircle/geometry.hpp"
#include "abcircle/synth.hpp"

namespace abcircle {

struct MetricWeights {
  double eta = 0.05;
  double mu = 0.1;
};

// Charged for every ground-truth circle left without a detection; sits
// above the ME < 1 success cutoff so a miss always registers as failure.
inline constexpr double kMissPenalty = 2.0;

// eta * (|dx| + |dy|) + mu * |dr|
double error_score(const Circle& truth, const Circle& detected,
                   const MetricWeights& w = {});

// Average per-truth error. Each truth is matched greedily to the nearest
// unmatched detection in (x0, y0, r) space; leftovers cost kMissPenalty.
double multiple_error(const GroundTruth& truths,
                      const std::vector<Circle>& detections,
                      const MetricWeights& w = {});

// Fraction of runs with ME < 1.
double success_rate(const std::vector<double>& me_values);

// Two-sided rank-sum p-value with midrank ties. Exact enumeration of all
// sample assignments when the pooled size is at most 12, otherwise a
// tie-corrected normal approximation with continuity correction.
double wilcoxon_ranksum(const std::vector<double>& a,
                        const std::vector<double>& b);
double wilcoxon_exact_p(const std::vector<double>& a,
                        const std::vector<double>& b);
double wilcoxon_normal_p(const std::vector<double>& a,
                         const std::vector<double>& b);

}  // namespace abcircle
