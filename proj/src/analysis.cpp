#include "psearch/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "psearch/grover_core.hpp"

namespace psearch {

namespace {

constexpr double kPi = std::numbers::pi;

ReducedState observation_a_final(long block_size, long eta) {
  ReducedState s;
  s.space = make_space(block_size, 1);
  s.amp_target = 1.0;
  for (long i = 0; i < eta; ++i) s = global_grover_step(s);
  return s;
}

ReducedState observation_b_final(long n_items, long eta) {
  const SearchSpace sp = make_space(n_items, 1);
  const long full = std::llround(kPi / 4.0 * std::sqrt(static_cast<double>(n_items)));
  const long steps = std::max(0L, full - eta);
  ReducedState s = uniform_state(sp);
  for (long i = 0; i < steps; ++i) s = global_grover_step(s);
  return s;
}

double block_sum(const ReducedState& s) {
  return s.amp_target +
         static_cast<double>(s.space.block_size - 1) * s.amp_block;
}

Prediction skipped(PredictionLabel label, const std::string& why) {
  Prediction p;
  p.label = label;
  p.passed = true;
  p.note = why;
  return p;
}

} // namespace

CanonicalSchedule canonical_schedule(const SearchSpace& space) {
  const double n = static_cast<double>(space.n_items);
  const double b = static_cast<double>(space.block_size);
  CanonicalSchedule c;
  c.raw_global_iters = kPi / 4.0 * std::sqrt(n) - std::sqrt(3.0 * b / 4.0);
  c.raw_local_iters = kPi / 6.0 * std::sqrt(b);
  if (c.raw_global_iters < 0.0)
    throw RawNegative(
        "canonical global iteration count is negative "
        "((pi/4)*sqrt(n_items) < sqrt(3*block_size/4))");
  c.schedule.global_iters = std::llround(c.raw_global_iters);
  c.schedule.local_iters = std::llround(c.raw_local_iters);
  c.schedule.apply_final_step = true;
  return c;
}

long query_count(const Schedule& schedule) {
  return schedule.global_iters + schedule.local_iters +
         (schedule.apply_final_step ? 1 : 0);
}

double savings_coefficient() { return std::sqrt(3.0) / 2.0 - kPi / 6.0; }

double predicted_savings(double block_size) {
  if (block_size <= 0.0) return 0.0;
  return savings_coefficient() * std::sqrt(block_size);
}

double savings_tradeoff(double block_size, double eta) {
  if (block_size <= 0.0) return -eta;
  const double rb = std::sqrt(block_size);
  return -eta + rb * std::sin(2.0 * eta / rb);
}

double observation_a_predicted(double block_size, double eta) {
  if (block_size <= 0.0) return 0.0;
  const double rb = std::sqrt(block_size);
  return rb * std::sin(2.0 * eta / rb);
}

double observation_a_signed_sum(long block_size, long eta) {
  return block_sum(observation_a_final(block_size, eta));
}

double observation_a_simulated(long block_size, long eta) {
  return std::abs(observation_a_signed_sum(block_size, eta));
}

double observation_b_predicted(double n_items, double eta) {
  return observation_a_predicted(n_items, eta);
}

double observation_b_signed_sum(long n_items, long eta) {
  return block_sum(observation_b_final(n_items, eta));
}

double observation_b_negated_sum(long n_items, long eta) {
  const ReducedState s = observation_b_final(n_items, eta);
  return -s.amp_target +
         static_cast<double>(s.space.block_size - 1) * s.amp_block;
}

double observation_b_simulated(long n_items, long eta) {
  return observation_b_signed_sum(n_items, eta);
}

const char* label_name(PredictionLabel label) {
  switch (label) {
    case PredictionLabel::ObservationA: return "ObservationA";
    case PredictionLabel::ObservationB: return "ObservationB";
    case PredictionLabel::ZeroingC: return "ZeroingC";
    case PredictionLabel::QueryCount: return "QueryCount";
    case PredictionLabel::Savings: return "Savings";
    case PredictionLabel::OptimalEta: return "OptimalEta";
    case PredictionLabel::LowerBound: return "LowerBound";
  }
  return "?";
}

Prediction zeroing_check(const RunTrace& trace) {
  Prediction p;
  p.label = PredictionLabel::ZeroingC;
  if (trace.space.n_blocks < 2)
    return skipped(PredictionLabel::ZeroingC, "skipped: no outside blocks");

  const size_t entry_idx = static_cast<size_t>(trace.schedule.global_iters +
                                               trace.schedule.local_iters);
  const ReducedState post = oracle(trace.states.at(entry_idx));
  const SearchSpace& sp = trace.space;
  const double b = static_cast<double>(sp.block_size);
  const double n = static_cast<double>(sp.n_items);
  const double mean = (post.amp_target + (b - 1.0) * post.amp_block +
                       (n - b) * post.amp_outside) /
                      n;
  const double ratio = post.amp_outside / (2.0 * mean);
  const double leak = outside_mass(trace.states.back());
  constexpr double kRatioTol = 0.2;
  constexpr double kLeakTol = 0.05;

  p.predicted = 1.0;
  p.simulated = ratio;
  p.abs_error = std::abs(ratio - 1.0);
  p.rel_error = p.abs_error;
  p.tolerance = kRatioTol;
  p.tolerance_kind = "abs_error";
  p.passed = p.abs_error <= kRatioTol && leak <= kLeakTol;
  p.detail = {{"outside_mass", leak},
              {"leak_tolerance", kLeakTol},
              {"entry_amp_outside", post.amp_outside},
              {"entry_mean", mean}};
  return p;
}

OptimumResult optimal_local_iterations(double block_size) {
  OptimumResult r;
  const double rb = block_size > 0.0 ? std::sqrt(block_size) : 0.0;
  r.eta_star = kPi / 6.0 * rb;
  r.max_saving = savings_tradeoff(block_size, r.eta_star);
  const long hi = static_cast<long>(std::ceil(kPi / 4.0 * rb)) + 1;
  r.grid_argmax = 0;
  r.grid_max = savings_tradeoff(block_size, 0.0);
  for (long e = 1; e <= hi; ++e) {
    const double f = savings_tradeoff(block_size, static_cast<double>(e));
    if (f > r.grid_max) {
      r.grid_max = f;
      r.grid_argmax = e;
    }
  }
  return r;
}

double lower_bound(const SearchSpace& space) {
  return kPi / 4.0 *
         (std::sqrt(static_cast<double>(space.n_items)) -
          std::sqrt(static_cast<double>(space.block_size)));
}

SweepResult sweep_schedules(const SearchSpace& space, long j1_lo, long j1_hi,
                            long j2_lo, long j2_hi) {
  if (j1_lo > j1_hi || j2_lo > j2_hi)
    throw std::invalid_argument("empty sweep range");
  if (j1_lo < 0 || j2_lo < 0)
    throw std::invalid_argument("negative iteration count in sweep range");

  SweepResult r;
  r.space = space;
  r.grid.reserve(static_cast<size_t>((j1_hi - j1_lo + 1) * (j2_hi - j2_lo + 1)));
  bool have_best = false;
  SweepEntry best;
  for (long j1 = j1_lo; j1 <= j1_hi; ++j1) {
    for (long j2 = j2_lo; j2 <= j2_hi; ++j2) {
      const Schedule sched{j1, j2, true};
      const RunTrace t = partial_search(space, sched);
      const SweepEntry e{j1, j2, t.query_count, t.block_success_probability};
      r.grid.push_back(e);
      const bool better =
          !have_best || e.probability > best.probability ||
          (e.probability == best.probability &&
           (e.queries < best.queries ||
            (e.queries == best.queries && e.j1 < best.j1)));
      if (better) {
        best = e;
        have_best = true;
      }
    }
  }
  r.best_schedule = Schedule{best.j1, best.j2, true};
  r.best_probability = best.probability;
  try {
    const CanonicalSchedule c = canonical_schedule(space);
    r.canonical = c.schedule;
    r.canonical_gap = std::max(std::labs(best.j1 - c.schedule.global_iters),
                               std::labs(best.j2 - c.schedule.local_iters));
  } catch (const RawNegative&) {
    // no canonical reference for this geometry
  }
  return r;
}

std::vector<Prediction> verify_all(const SearchSpace& space) {
  const long n = space.n_items;
  const long b = space.block_size;
  const double nd = static_cast<double>(n);
  const double bd = static_cast<double>(b);

  std::optional<CanonicalSchedule> canon;
  std::optional<RunTrace> canon_trace;
  try {
    canon = canonical_schedule(space);
    canon_trace = partial_search(space, canon->schedule);
  } catch (const RawNegative&) {
  }
  const std::string raw_negative_note =
      "skipped: canonical schedule undefined (raw global iteration count "
      "negative)";

  std::vector<Prediction> out;

  // ObservationA: block sum at the optimal local phase, started from a
  // single basis state
  if (b < 2) {
    out.push_back(skipped(PredictionLabel::ObservationA,
                          "skipped: block_size < 2"));
  } else {
    Prediction p;
    p.label = PredictionLabel::ObservationA;
    const long eta = std::llround(kPi / 6.0 * std::sqrt(bd));
    const double pred = observation_a_predicted(bd, static_cast<double>(eta));
    const double signed_sum = observation_a_signed_sum(b, eta);
    const double sim = std::abs(signed_sum);
    p.predicted = pred;
    p.simulated = sim;
    p.abs_error = std::abs(sim - pred);
    p.rel_error = pred != 0.0 ? p.abs_error / std::abs(pred) : 0.0;
    if (b >= 64) {
      p.tolerance = 3.0 / std::sqrt(bd);
      p.tolerance_kind = "rel_error";
      p.passed = p.rel_error <= p.tolerance;
    } else {
      p.tolerance = 3.0;
      p.tolerance_kind = "abs_error";
      p.passed = p.abs_error <= p.tolerance;
    }
    p.detail = {{"eta", static_cast<double>(eta)}, {"signed_sum", signed_sum}};
    out.push_back(p);
  }

  // ObservationB: full-space sum when stopping eta iterations early; the
  // headline prediction is the 2*eta limit, and the formula it limits to is
  // cross-checked in detail. Both target-sign conventions are reported.
  {
    Prediction p;
    p.label = PredictionLabel::ObservationB;
    const long full = std::llround(kPi / 4.0 * std::sqrt(nd));
    const long eta = std::min(4L, full);
    const double pred = 2.0 * static_cast<double>(eta);
    const double sim = observation_b_signed_sum(n, eta);
    const double formula = observation_b_predicted(nd, static_cast<double>(eta));
    const double limit_rel =
        formula != 0.0 ? std::abs(pred - formula) / std::abs(formula) : 0.0;
    const double limit_tol = 3.0 / std::sqrt(nd);
    p.predicted = pred;
    p.simulated = sim;
    p.abs_error = std::abs(sim - pred);
    p.rel_error = pred != 0.0 ? p.abs_error / pred : 0.0;
    p.tolerance = 3.0;
    p.tolerance_kind = "abs_error";
    p.passed = p.abs_error <= p.tolerance && limit_rel <= limit_tol;
    p.detail = {{"eta", static_cast<double>(eta)},
                {"formula_value", formula},
                {"limit_rel_error", limit_rel},
                {"limit_rel_tolerance", limit_tol},
                {"sim_vs_formula_rel_error",
                 formula != 0.0 ? std::abs(sim - formula) / std::abs(formula)
                                : 0.0},
                {"sum_target_negated", observation_b_negated_sum(n, eta)}};
    out.push_back(p);
  }

  // ZeroingC
  if (!canon) {
    out.push_back(skipped(PredictionLabel::ZeroingC, raw_negative_note));
  } else if (b < 2) {
    out.push_back(skipped(PredictionLabel::ZeroingC, "skipped: block_size < 2"));
  } else {
    out.push_back(zeroing_check(*canon_trace));
  }

  // QueryCount: integer count vs the raw closed form plus the final step
  if (!canon) {
    out.push_back(skipped(PredictionLabel::QueryCount, raw_negative_note));
  } else {
    Prediction p;
    p.label = PredictionLabel::QueryCount;
    const double pred = canon->raw_global_iters + canon->raw_local_iters + 1.0;
    const long q = query_count(canon->schedule);
    p.predicted = pred;
    p.simulated = static_cast<double>(q);
    p.abs_error = std::abs(static_cast<double>(q) - pred);
    p.rel_error = p.abs_error / pred;
    p.tolerance = 1.0;
    p.tolerance_kind = "abs_error";
    p.passed = p.abs_error <= p.tolerance;
    p.detail = {{"global_iters", static_cast<double>(canon->schedule.global_iters)},
                {"local_iters", static_cast<double>(canon->schedule.local_iters)},
                {"raw_global_iters", canon->raw_global_iters},
                {"raw_local_iters", canon->raw_local_iters}};
    out.push_back(p);
  }

  // Savings: achieved saving vs the closed form; the rounding of two step
  // counts plus the final query bounds the deviation by 2
  if (!canon) {
    out.push_back(skipped(PredictionLabel::Savings, raw_negative_note));
  } else {
    Prediction p;
    p.label = PredictionLabel::Savings;
    const long q = query_count(canon->schedule);
    const double pred = predicted_savings(bd);
    const double sim = kPi / 4.0 * std::sqrt(nd) - static_cast<double>(q);
    p.predicted = pred;
    p.simulated = sim;
    p.abs_error = std::abs(sim - pred);
    p.rel_error = pred != 0.0 ? p.abs_error / std::abs(pred) : 0.0;
    p.tolerance = 2.0;
    p.tolerance_kind = "abs_error";
    p.passed = p.abs_error <= p.tolerance;
    p.detail = {{"query_count", static_cast<double>(q)}};
    out.push_back(p);
  }

  // OptimalEta
  {
    Prediction p;
    p.label = PredictionLabel::OptimalEta;
    const OptimumResult opt = optimal_local_iterations(bd);
    p.predicted = opt.eta_star;
    p.simulated = static_cast<double>(opt.grid_argmax);
    p.abs_error = std::abs(static_cast<double>(opt.grid_argmax) - opt.eta_star);
    p.rel_error =
        opt.eta_star != 0.0 ? p.abs_error / opt.eta_star : p.abs_error;
    p.tolerance = 1.0;
    p.tolerance_kind = "abs_error";
    p.passed = p.abs_error <= p.tolerance;
    p.detail = {{"max_saving", opt.max_saving}, {"grid_max", opt.grid_max}};
    out.push_back(p);
  }

  // LowerBound: one-sided, canonical queries must not beat it
  if (!canon) {
    out.push_back(skipped(PredictionLabel::LowerBound, raw_negative_note));
  } else {
    Prediction p;
    p.label = PredictionLabel::LowerBound;
    const long q = query_count(canon->schedule);
    const double bound = lower_bound(space);
    p.predicted = bound;
    p.simulated = static_cast<double>(q);
    p.abs_error = std::max(0.0, bound - static_cast<double>(q));
    p.rel_error = bound > 0.0 ? p.abs_error / bound : 0.0;
    p.tolerance = 0.0;
    p.tolerance_kind = "shortfall";
    p.passed = p.abs_error <= p.tolerance;
    out.push_back(p);
  }

  return out;
}

} // namespace psearch
