#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "abcircle/objective.hpp"
#include "abcircle/rng.hpp"

namespace abcircle {

struct DimensionBounds {
  double low = 0.0;
  double high = 0.0;
};

// Engine parameters. Defaults follow the detector's standard setup:
// colony 20, 300 cycles, trial limit 30, memory capacity 100.
struct AbcConfig {
  int colony_size = 20;  // food sources = employed bees = onlooker draws
  int cycles = 300;
  int limit = 30;  // consecutive non-improving trials before abandonment
  std::array<DimensionBounds, 3> bounds{};
  std::uint64_t seed = 0;
  std::size_t memory_cap = 100;
};

// Append-only archive of abandoned food sources. Abandoned solutions are
// local optima worth mining after the run; once the capacity is reached,
// further snapshots are dropped.
class ExhaustedMemory {
 public:
  ExhaustedMemory() = default;
  explicit ExhaustedMemory(std::size_t cap) : cap_(cap) {}

  // Appends unless full; returns whether the snapshot was stored.
  bool try_add(const ScoredCircle& snapshot) {
    if (entries_.size() >= cap_) return false;
    entries_.push_back(snapshot);
    return true;
  }

  const std::vector<ScoredCircle>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t cap() const { return cap_; }

 private:
  std::vector<ScoredCircle> entries_;
  std::size_t cap_ = 100;
};

// One food source: a position in index space, its decoded circle (nullopt
// when invalid), the objective value, and the non-improvement counter.
struct Candidate {
  std::array<double, 3> pos{};
  std::optional<Circle> circle;
  double j = 1.0;
  int trials = 0;
};

// Selection probabilities fit_i / sum(fit) used by the onlooker roulette.
std::vector<double> selection_probabilities(
    const std::vector<Candidate>& population);

// The bee colony loop over one objective. Construction initializes and
// evaluates the population; the three phases can be stepped individually
// (run_cycle applies them in order). The best feasible solution ever seen
// is tracked continuously, so best() never lags the population.
class AbcRun {
 public:
  // Throws std::invalid_argument on bad config (colony < 2, cycles < 1,
  // limit < 1, or low > high in any dimension).
  AbcRun(const AbcConfig& cfg, const Objective& objective);

  // One greedy neighborhood move per source.
  void employed_phase();
  // colony_size roulette draws, each applying the same move to the drawn
  // source. The cumulative fitness array is built once per phase.
  void onlooker_phase();
  // Sources whose counter reached the limit are snapshotted into the
  // memory (feasible, J < 1 only) and regenerated uniformly at random.
  void scout_phase();

  void run_cycle();

  const std::vector<Candidate>& population() const { return population_; }
  const ExhaustedMemory& memory() const { return memory_; }
  const std::optional<ScoredCircle>& best() const { return best_; }
  int cycle() const { return cycle_; }
  const AbcConfig& config() const { return cfg_; }

 private:
  void move_source(int i);
  void regenerate(Candidate& c);
  void absorb(const Candidate& c);

  AbcConfig cfg_;
  const Objective* objective_;
  std::vector<Candidate> population_;
  ExhaustedMemory memory_;
  std::optional<ScoredCircle> best_;
  Rng rng_;
  int cycle_ = 0;
};

// Result of a full optimization pass: the global best plus the exhausted
// memory holding the other optima found along the way.
struct AbcResult {
  std::optional<ScoredCircle> best;
  ExhaustedMemory memory;
};

// Runs init + cfg.cycles full cycles. Deterministic given cfg.seed.
AbcResult run_detection(const AbcConfig& cfg, const Objective& objective);

}  // namespace abcircle
