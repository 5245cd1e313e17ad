#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "abcircle/edge_map.hpp"
#include "abcircle/geometry.hpp"

namespace abcircle {

// A circle together with its matching error J.
struct ScoredCircle {
  Circle circle;
  double j = 1.0;
};

// Fewer than three edge points: no candidate circle can be decoded.
struct InsufficientEdgesError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Matching error J in [0, 1]: the fraction of the candidate's digital
// perimeter absent from the edge map. Off-image perimeter pixels count as
// non-matching.
double match_error(const Circle& c, const EdgeMap& edges);

// Fitness of an objective value: 1/(1+J) for J >= 0, 1+|J| otherwise.
// The negative branch is unreachable for match_error values but kept so the
// engine stays a general minimizer.
double fitness(double j);

// Scores three-index candidates against one edge map.
//
// A position is three reals over [0, Ep-1]; each is rounded
// half-away-from-zero to an index into the edge-point vector and the three
// points are passed through the circumcircle. Candidates with duplicate
// indices, collinear points, or an infeasible circle decode to nullopt and
// score the worst possible J = 1.
class Objective {
 public:
  // Throws InsufficientEdgesError when the map holds fewer than 3 points.
  Objective(const EdgeMap& edges, double rmin, double rmax);

  struct Evaluation {
    std::optional<Circle> circle;
    double j = 1.0;
  };

  std::optional<Circle> decode(const std::array<double, 3>& pos) const;
  Evaluation evaluate(const std::array<double, 3>& pos) const;

  const EdgeMap& edges() const { return *edges_; }
  double rmin() const { return rmin_; }
  double rmax() const { return rmax_; }

 private:
  const EdgeMap* edges_;
  double rmin_;
  double rmax_;
};

}  // namespace abcircle
