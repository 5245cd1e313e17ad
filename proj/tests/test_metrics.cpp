#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "abcircle/metrics.hpp"
#include "abcircle/rng.hpp"
#include "doctest.h"
#include "oracle.hpp"

using abcircle::Circle;
using abcircle::error_score;
using abcircle::GroundTruth;
using abcircle::kMissPenalty;
using abcircle::MetricWeights;
using abcircle::multiple_error;
using abcircle::success_rate;
using abcircle::wilcoxon_exact_p;
using abcircle::wilcoxon_normal_p;
using abcircle::wilcoxon_ranksum;

TEST_SUITE_BEGIN("metrics");

TEST_CASE("error score weighs center and radius differences") {
  CHECK(error_score(Circle{10, 20, 30}, Circle{10, 20, 30}) == 0.0);
  CHECK(error_score(Circle{0, 0, 10}, Circle{2, 2, 15}) ==
        0.05 * (2.0 + 2.0) + 0.1 * 5.0);
  CHECK(error_score(Circle{0, 0, 10}, Circle{2, 2, 15}) ==
        doctest::Approx(0.7));
  CHECK(error_score(Circle{0, 0, 10}, Circle{0, 0, 20}) == 1.0);
  CHECK(error_score(Circle{0, 0, 10}, Circle{-2, -2, 5}) ==
        error_score(Circle{0, 0, 10}, Circle{2, 2, 15}));
}

TEST_CASE("custom weights are honored") {
  const MetricWeights w{1.0, 2.0};
  CHECK(error_score(Circle{0, 0, 10}, Circle{1, 2, 13}, w) ==
        1.0 * 3.0 + 2.0 * 3.0);
}

TEST_CASE("perfect detections have zero multiple error") {
  const GroundTruth truth{{Circle{80, 60, 35}, Circle{240, 70, 40}}};
  CHECK(multiple_error(truth, {Circle{240, 70, 40}, Circle{80, 60, 35}}) ==
        0.0);
}

TEST_CASE("single truth reduces to the error score") {
  const GroundTruth truth{{Circle{80, 60, 35}}};
  const Circle det{82, 61, 37};
  CHECK(multiple_error(truth, {det}) == error_score(truth.circles[0], det));
}

TEST_CASE("a missed truth costs the miss penalty") {
  const GroundTruth truth{{Circle{80, 60, 35}, Circle{240, 70, 40}}};
  const double me = multiple_error(truth, {Circle{80, 60, 35}});
  CHECK(me == kMissPenalty / 2.0);
  CHECK(me >= 1.0);  // a miss always counts as failure
  CHECK(multiple_error(truth, {}) == kMissPenalty);
}

TEST_CASE("each truth takes the nearest unmatched detection") {
  const GroundTruth truth{{Circle{0, 0, 10}, Circle{100, 0, 10}}};
  const std::vector<Circle> dets{Circle{99, 0, 10}, Circle{1, 0, 10}};
  CHECK(multiple_error(truth, dets) ==
        doctest::Approx((0.05 + 0.05) / 2.0));
}

TEST_CASE("greedy matching consumes detections in truth order") {
  // Both truths are nearest to the same detection; the first one takes it.
  const GroundTruth truth{{Circle{10, 0, 10}, Circle{12, 0, 10}}};
  const std::vector<Circle> dets{Circle{11, 0, 10}, Circle{30, 0, 10}};
  const double expect =
      (error_score(truth.circles[0], dets[0]) +
       error_score(truth.circles[1], dets[1])) /
      2.0;
  CHECK(multiple_error(truth, dets) == doctest::Approx(expect));
}

TEST_CASE("multiple error ignores detection order") {
  const GroundTruth truth{
      {Circle{80, 60, 35}, Circle{240, 70, 40}, Circle{160, 180, 50}}};
  std::vector<Circle> dets{Circle{81, 61, 34}, Circle{238, 70, 41},
                           Circle{161, 179, 50}, Circle{10, 10, 8}};
  const double ref = multiple_error(truth, dets);
  std::sort(dets.begin(), dets.end(), [](const Circle& a, const Circle& b) {
    return a.x0 > b.x0;
  });
  CHECK(multiple_error(truth, dets) == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("equidistant detections break ties deterministically") {
  // Both detections sit at parameter distance 5 from the truth but carry
  // different error scores; the lexicographically smaller one wins
  // regardless of list order.
  const GroundTruth truth{{Circle{0, 0, 10}}};
  const Circle tie_lo{0, 3, 14};  // Es = 0.05*3 + 0.1*4 = 0.55
  const Circle tie_hi{5, 0, 10};  // Es = 0.25
  const double expect = error_score(truth.circles[0], tie_lo);
  CHECK(multiple_error(truth, {tie_hi, tie_lo}) == expect);
  CHECK(multiple_error(truth, {tie_lo, tie_hi}) == expect);
}

TEST_CASE("empty truth set is rejected") {
  CHECK_THROWS_AS(multiple_error(GroundTruth{}, {Circle{1, 1, 5}}),
                  std::invalid_argument);
}

TEST_CASE("success rate counts runs strictly under one") {
  CHECK(success_rate({0.2, 0.5, 1.3}) == doctest::Approx(2.0 / 3.0));
  CHECK(success_rate({0.0, 0.99}) == 1.0);
  CHECK(success_rate({1.0, 2.0}) == 0.0);
  CHECK_THROWS_AS(success_rate({}), std::invalid_argument);
}

TEST_CASE("identical samples are indistinguishable") {
  const std::vector<double> a{0.1, 0.2, 0.3, 0.4, 0.5};
  CHECK(wilcoxon_ranksum(a, a) == 1.0);
}

TEST_CASE("fully separated samples give the minimal exact p") {
  const std::vector<double> a{1, 2, 3, 4, 5};
  const std::vector<double> b{6, 7, 8, 9, 10};
  CHECK(std::abs(wilcoxon_ranksum(a, b) - 2.0 / 252.0) < 1e-12);
}

TEST_CASE("singleton samples carry no evidence") {
  CHECK(wilcoxon_ranksum({1.0}, {2.0}) == 1.0);
}

TEST_CASE("rank-sum p is symmetric in its arguments") {
  const std::vector<double> a{0.3, 0.1, 0.8, 0.2};
  const std::vector<double> b{0.5, 0.9, 0.4};
  CHECK(wilcoxon_ranksum(a, b) == wilcoxon_ranksum(b, a));
  const std::vector<double> big_a{1, 3, 5, 7, 9, 11, 13, 15};
  const std::vector<double> big_b{2, 4, 6, 8, 10, 12, 14, 16};
  CHECK(wilcoxon_ranksum(big_a, big_b) ==
        doctest::Approx(wilcoxon_ranksum(big_b, big_a)).epsilon(1e-12));
}

TEST_CASE("exact branch matches an independent enumeration") {
  abcircle::Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> a;
    std::vector<double> b;
    const int n = 2 + static_cast<int>(rng.index(4));
    const int m = 2 + static_cast<int>(rng.index(4));
    for (int i = 0; i < n; ++i) {
      a.push_back(static_cast<double>(rng.index(6)));  // ties likely
    }
    for (int i = 0; i < m; ++i) {
      b.push_back(static_cast<double>(rng.index(6)));
    }
    CHECK(std::abs(wilcoxon_exact_p(a, b) - oracle::ranksum_exact_p(a, b)) <
          1e-12);
  }
}

TEST_CASE("the approximation tracks the exact test at small sizes") {
  abcircle::Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> a;
    std::vector<double> b;
    for (int i = 0; i < 6; ++i) {
      a.push_back(rng.u01());
      b.push_back(rng.u01() + 0.2 * rng.u01());
    }
    const double exact = wilcoxon_exact_p(a, b);
    const double approx = wilcoxon_normal_p(a, b);
    CHECK(std::abs(exact - approx) <= 0.02);
  }
}

TEST_CASE("crossover between exact and approximate branches") {
  std::vector<double> a{1, 2, 3, 4, 5, 6};
  std::vector<double> b{1.5, 2.5, 3.5, 4.5, 5.5, 6.5};
  CHECK(wilcoxon_ranksum(a, b) == wilcoxon_exact_p(a, b));  // N = 12
  b.push_back(7.5);                                         // N = 13
  CHECK(wilcoxon_ranksum(a, b) == wilcoxon_normal_p(a, b));
}

TEST_CASE("constant pooled data yields p of one in both branches") {
  const std::vector<double> a(7, 3.25);
  const std::vector<double> b(8, 3.25);
  CHECK(wilcoxon_ranksum(a, b) == 1.0);
  CHECK(wilcoxon_exact_p({1.0, 1.0}, {1.0, 1.0}) == 1.0);
}

TEST_CASE("empty samples are rejected") {
  CHECK_THROWS_AS(wilcoxon_ranksum({}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(wilcoxon_ranksum({1.0}, {}), std::invalid_argument);
}

TEST_SUITE_END();
