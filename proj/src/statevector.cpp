#include "psearch/statevector.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "psearch/grover_core.hpp"

namespace psearch {

namespace {

// Neumaier-compensated sum; keeps the mean drift far below the 1e-10
// cross-engine budget over hundreds of steps.
double compensated_sum(const double* a, long n) {
  double sum = 0.0, comp = 0.0;
  for (long i = 0; i < n; ++i) {
    const double t = sum + a[i];
    if (std::abs(sum) >= std::abs(a[i]))
      comp += (sum - t) + a[i];
    else
      comp += (a[i] - t) + sum;
    sum = t;
  }
  return sum + comp;
}

long target_index(const SearchSpace& sp) {
  return sp.target_block * sp.block_size + sp.target_item;
}

} // namespace

StateVector sv_uniform(const SearchSpace& space, long cap) {
  if (space.n_items > cap)
    throw CapExceeded("statevector size " + std::to_string(space.n_items) +
                      " exceeds cap " + std::to_string(cap));
  StateVector sv;
  sv.space = space;
  sv.amps.assign(static_cast<size_t>(space.n_items),
                 1.0 / std::sqrt(static_cast<double>(space.n_items)));
  return sv;
}

StateVector sv_oracle(const StateVector& sv) {
  StateVector r = sv;
  const long t = target_index(sv.space);
  r.amps[static_cast<size_t>(t)] = -r.amps[static_cast<size_t>(t)];
  return r;
}

StateVector sv_global_diffusion(const StateVector& sv) {
  const long n = sv.space.n_items;
  const double mean = compensated_sum(sv.amps.data(), n) / static_cast<double>(n);
  StateVector r = sv;
  for (long i = 0; i < n; ++i)
    r.amps[static_cast<size_t>(i)] = 2.0 * mean - sv.amps[static_cast<size_t>(i)];
  return r;
}

StateVector sv_local_diffusion(const StateVector& sv) {
  const long b = sv.space.block_size;
  StateVector r = sv;
  for (long k = 0; k < sv.space.n_blocks; ++k) {
    const double* blk = sv.amps.data() + k * b;
    const double mean = compensated_sum(blk, b) / static_cast<double>(b);
    for (long i = 0; i < b; ++i)
      r.amps[static_cast<size_t>(k * b + i)] = 2.0 * mean - blk[i];
  }
  return r;
}

StateVector sv_global_grover_step(const StateVector& sv) {
  return sv_global_diffusion(sv_oracle(sv));
}

StateVector sv_local_grover_step(const StateVector& sv) {
  return sv_local_diffusion(sv_oracle(sv));
}

ReducedState reduce(const StateVector& sv) {
  constexpr double kTol = 1e-10;
  const SearchSpace& sp = sv.space;
  const long b = sp.block_size;
  const long t = target_index(sp);
  const long blk_lo = sp.target_block * b;

  ReducedState r;
  r.space = sp;
  r.amp_target = sv.amps[static_cast<size_t>(t)];

  double u = 0.0;
  bool have_u = false;
  for (long i = blk_lo; i < blk_lo + b; ++i) {
    if (i == t) continue;
    const double a = sv.amps[static_cast<size_t>(i)];
    if (!have_u) {
      u = a;
      have_u = true;
    } else if (std::abs(a - u) > kTol) {
      throw NotClassUniform("target-block amplitudes are not class-uniform");
    }
  }
  r.amp_block = have_u ? u : 0.0;

  double v = 0.0;
  bool have_v = false;
  for (long i = 0; i < sp.n_items; ++i) {
    if (i >= blk_lo && i < blk_lo + b) continue;
    const double a = sv.amps[static_cast<size_t>(i)];
    if (!have_v) {
      v = a;
      have_v = true;
    } else if (std::abs(a - v) > kTol) {
      throw NotClassUniform("outside-block amplitudes are not class-uniform");
    }
  }
  r.amp_outside = have_v ? v : 0.0;
  return r;
}

RunTrace sv_partial_search(const SearchSpace& space, const Schedule& schedule,
                           long cap) {
  RunTrace trace;
  trace.space = space;
  trace.schedule = schedule;
  trace.states.reserve(static_cast<size_t>(schedule.global_iters +
                                           schedule.local_iters + 2));
  StateVector sv = sv_uniform(space, cap);
  trace.states.push_back(reduce(sv));
  for (long i = 0; i < schedule.global_iters; ++i) {
    sv = sv_global_grover_step(sv);
    trace.states.push_back(reduce(sv));
  }
  for (long i = 0; i < schedule.local_iters; ++i) {
    sv = sv_local_grover_step(sv);
    trace.states.push_back(reduce(sv));
  }
  if (schedule.apply_final_step) {
    sv = sv_global_grover_step(sv);
    trace.states.push_back(reduce(sv));
  }
  const ReducedState& fin = trace.states.back();
  trace.query_count = schedule.global_iters + schedule.local_iters +
                      (schedule.apply_final_step ? 1 : 0);
  trace.block_success_probability = block_success_probability(fin);
  trace.outside_mass = outside_mass(fin);
  return trace;
}

double sv_norm_squared(const StateVector& sv) {
  double s = 0.0, comp = 0.0;
  for (double a : sv.amps) {
    const double sq = a * a;
    const double t = s + sq;
    if (s >= sq)
      comp += (s - t) + sq;
    else
      comp += (sq - t) + s;
    s = t;
  }
  return s + comp;
}

} // namespace psearch
