#include "abcircle/abc.hpp"

#include <algorithm>
#include <stdexcept>

namespace abcircle {

std::vector<double> selection_probabilities(
    const std::vector<Candidate>& population) {
  std::vector<double> prob(population.size());
  double total = 0.0;
  for (std::size_t i = 0; i < population.size(); ++i) {
    prob[i] = fitness(population[i].j);
    total += prob[i];
  }
  for (auto& p : prob) p /= total;
  return prob;
}

AbcRun::AbcRun(const AbcConfig& cfg, const Objective& objective)
    : cfg_(cfg), objective_(&objective), memory_(cfg.memory_cap),
      rng_(cfg.seed) {
  if (cfg.colony_size < 2) {
    throw std::invalid_argument("abc: colony_size must be at least 2");
  }
  if (cfg.cycles < 1 || cfg.limit < 1) {
    throw std::invalid_argument("abc: cycles and limit must be positive");
  }
  for (const auto& b : cfg.bounds) {
    if (!(b.low <= b.high)) {
      throw std::invalid_argument("abc: bound low exceeds high");
    }
  }
  population_.resize(static_cast<std::size_t>(cfg.colony_size));
  for (auto& c : population_) {
    regenerate(c);
  }
}

void AbcRun::absorb(const Candidate& c) {
  if (c.circle && (!best_ || c.j < best_->j)) {
    best_ = ScoredCircle{*c.circle, c.j};
  }
}

void AbcRun::regenerate(Candidate& c) {
  for (int d = 0; d < 3; ++d) {
    const auto& b = cfg_.bounds[static_cast<std::size_t>(d)];
    c.pos[static_cast<std::size_t>(d)] =
        b.low + rng_.u01() * (b.high - b.low);
  }
  const auto eval = objective_->evaluate(c.pos);
  c.circle = eval.circle;
  c.j = eval.j;
  c.trials = 0;
  absorb(c);
}

void AbcRun::move_source(int i) {
  Candidate& cur = population_[static_cast<std::size_t>(i)];
  const auto dim = static_cast<std::size_t>(rng_.index(3));
  const auto partner = rng_.index_excluding(
      static_cast<std::uint64_t>(cfg_.colony_size),
      static_cast<std::uint64_t>(i));
  const double phi = rng_.uniform(-1.0, 1.0);

  std::array<double, 3> v = cur.pos;
  const double partner_val = population_[partner].pos[dim];
  const auto& b = cfg_.bounds[dim];
  v[dim] = std::clamp(v[dim] + phi * (v[dim] - partner_val), b.low, b.high);

  const auto eval = objective_->evaluate(v);
  // Greedy selection; ties count as non-improvement.
  if (fitness(eval.j) > fitness(cur.j)) {
    cur.pos = v;
    cur.circle = eval.circle;
    cur.j = eval.j;
    cur.trials = 0;
    absorb(cur);
  } else {
    ++cur.trials;
  }
}

void AbcRun::employed_phase() {
  for (int i = 0; i < cfg_.colony_size; ++i) {
    move_source(i);
  }
}

void AbcRun::onlooker_phase() {
  std::vector<double> cumulative(population_.size());
  double total = 0.0;
  for (std::size_t i = 0; i < population_.size(); ++i) {
    total += fitness(population_[i].j);
    cumulative[i] = total;
  }
  for (int draw = 0; draw < cfg_.colony_size; ++draw) {
    const double u = rng_.u01() * total;
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const auto i = std::min<std::size_t>(
        static_cast<std::size_t>(it - cumulative.begin()),
        population_.size() - 1);
    move_source(static_cast<int>(i));
  }
}

void AbcRun::scout_phase() {
  for (auto& c : population_) {
    if (c.trials < cfg_.limit) continue;
    if (c.circle && c.j < 1.0) {
      memory_.try_add(ScoredCircle{*c.circle, c.j});
    }
    regenerate(c);
  }
}

void AbcRun::run_cycle() {
  employed_phase();
  onlooker_phase();
  scout_phase();
  ++cycle_;
}

AbcResult run_detection(const AbcConfig& cfg, const Objective& objective) {
  AbcRun run(cfg, objective);
  for (int i = 0; i < cfg.cycles; ++i) {
    run.run_cycle();
  }
  return AbcResult{run.best(), run.memory()};
}

}  // namespace abcircle
