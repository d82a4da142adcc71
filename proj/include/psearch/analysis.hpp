#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "psearch/types.hpp"

namespace psearch {

struct CanonicalSchedule {
  Schedule schedule;         // rounded counts, final step applied
  double raw_global_iters;   // (pi/4) sqrt(N) - sqrt(3 b / 4)
  double raw_local_iters;    // (pi/6) sqrt(b)
};

// throws RawNegative when the raw global count is below zero (K = 1)
CanonicalSchedule canonical_schedule(const SearchSpace& space);

long query_count(const Schedule& schedule); // j1 + j2 + (1 if final step)

double savings_coefficient();               // sqrt(3)/2 - pi/6
double predicted_savings(double block_size); // savings_coefficient * sqrt(b)

// f(eta) = -eta + sqrt(b) sin(2 eta / sqrt(b)), the query-saving trade-off
double savings_tradeoff(double block_size, double eta);

// Block-sum observation on a b-item space started in a single basis state
// (t = 1). The exact signed sum is negative for eta >= 1; the closed form
// predicts its magnitude, so simulated reports |signed sum|.
// pre: b >= 2, 0 <= eta <= (pi/4) sqrt(b) for the prediction to be meaningful.
double observation_a_predicted(double block_size, double eta);
double observation_a_signed_sum(long block_size, long eta);
double observation_a_simulated(long block_size, long eta);

// Sum over all N amplitudes after round((pi/4) sqrt(N)) - eta iterations from
// uniform (the stop-eta-early convention, target amplitude kept positive).
double observation_b_predicted(double n_items, double eta);
double observation_b_signed_sum(long n_items, long eta);
double observation_b_negated_sum(long n_items, long eta); // target sign flipped
double observation_b_simulated(long n_items, long eta);

enum class PredictionLabel {
  ObservationA,
  ObservationB,
  ZeroingC,
  QueryCount,
  Savings,
  OptimalEta,
  LowerBound,
};

const char* label_name(PredictionLabel label);

struct Prediction {
  PredictionLabel label = PredictionLabel::ObservationA;
  std::optional<double> predicted;
  std::optional<double> simulated;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  // which error the tolerance applies to: "abs_error", "rel_error" or
  // "shortfall" (max(0, predicted - simulated), for one-sided bounds);
  // empty for skipped checks
  std::string tolerance_kind;
  bool passed = false;
  std::string note; // skip reason or extra context, empty otherwise
  std::vector<std::pair<std::string, double>> detail;
};

// Observation (c): at entry to the final step the outside amplitude must be
// twice the post-oracle average for the final diffusion to annihilate it.
// Checks |ratio - 1| <= 0.2 and final outside mass <= 0.05. When the trace
// has no final step the last state doubles as the final one.
Prediction zeroing_check(const RunTrace& trace);

struct OptimumResult {
  double eta_star;   // (pi/6) sqrt(b)
  double max_saving; // f(eta_star) = (sqrt(3)/2 - pi/6) sqrt(b)
  long grid_argmax;  // argmax of f over integers in [0, ceil((pi/4) sqrt(b)) + 1]
  double grid_max;   // f(grid_argmax)
};

OptimumResult optimal_local_iterations(double block_size);

double lower_bound(const SearchSpace& space); // (pi/4)(sqrt(N) - sqrt(b))

struct SweepEntry {
  long j1 = 0;
  long j2 = 0;
  long queries = 0;
  double probability = 0.0;
};

struct SweepResult {
  SearchSpace space;
  std::vector<SweepEntry> grid; // lexicographic in (j1, j2)
  Schedule best_schedule;       // max probability; ties: fewer queries, then smaller j1
  double best_probability = 0.0;
  std::optional<Schedule> canonical; // absent when canonical is undefined
  std::optional<long> canonical_gap; // Chebyshev distance best vs canonical
};

// Every grid schedule applies the final step. Throws std::invalid_argument on
// an empty range or negative bounds.
SweepResult sweep_schedules(const SearchSpace& space, long j1_lo, long j1_hi,
                            long j2_lo, long j2_hi);

// One Prediction per label, in enum order. Checks that do not apply to the
// geometry (K = 1: no canonical schedule; b = 1: no within-block structure)
// are reported as passed with an explanatory note.
std::vector<Prediction> verify_all(const SearchSpace& space);

} // namespace psearch
