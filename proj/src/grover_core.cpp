#include "psearch/grover_core.hpp"

#include <cmath>
#include <string>

namespace psearch {

SearchSpace make_space(long n_items, long n_blocks, long target_block,
                       long target_item) {
  if (n_items < 1 || n_blocks < 1)
    throw std::invalid_argument("n_items and n_blocks must be positive");
  if (n_items % n_blocks != 0)
    throw std::invalid_argument("n_blocks must divide n_items");
  SearchSpace s;
  s.n_items = n_items;
  s.n_blocks = n_blocks;
  s.block_size = n_items / n_blocks;
  if (target_block < 0 || target_block >= n_blocks)
    throw std::invalid_argument("target_block out of range");
  if (target_item < 0 || target_item >= s.block_size)
    throw std::invalid_argument("target_item out of range");
  s.target_block = target_block;
  s.target_item = target_item;
  return s;
}

ReducedState uniform_state(const SearchSpace& space) {
  ReducedState s;
  s.space = space;
  const double a = 1.0 / std::sqrt(static_cast<double>(space.n_items));
  s.amp_target = a;
  s.amp_block = space.block_size > 1 ? a : 0.0;
  s.amp_outside = space.n_blocks > 1 ? a : 0.0;
  return s;
}

ReducedState oracle(const ReducedState& state) {
  ReducedState r = state;
  r.amp_target = -r.amp_target;
  return r;
}

ReducedState global_diffusion(const ReducedState& state) {
  const SearchSpace& sp = state.space;
  const double b = static_cast<double>(sp.block_size);
  const double n = static_cast<double>(sp.n_items);
  const double mean = (state.amp_target + (b - 1.0) * state.amp_block +
                       (n - b) * state.amp_outside) /
                      n;
  ReducedState r = state;
  r.amp_target = 2.0 * mean - state.amp_target;
  if (sp.block_size > 1) r.amp_block = 2.0 * mean - state.amp_block;
  if (sp.n_blocks > 1) r.amp_outside = 2.0 * mean - state.amp_outside;
  return r;
}

ReducedState local_diffusion(const ReducedState& state) {
  const SearchSpace& sp = state.space;
  const double b = static_cast<double>(sp.block_size);
  const double block_mean = (state.amp_target + (b - 1.0) * state.amp_block) / b;
  ReducedState r = state;
  r.amp_target = 2.0 * block_mean - state.amp_target;
  if (sp.block_size > 1) r.amp_block = 2.0 * block_mean - state.amp_block;
  // every non-target block is internally uniform at amp_outside, so its
  // mean equals amp_outside and the class is untouched
  return r;
}

ReducedState global_grover_step(const ReducedState& state) {
  return global_diffusion(oracle(state));
}

ReducedState local_grover_step(const ReducedState& state) {
  return local_diffusion(oracle(state));
}

RunTrace partial_search(const SearchSpace& space, const Schedule& schedule) {
  RunTrace trace;
  trace.space = space;
  trace.schedule = schedule;
  trace.states.reserve(static_cast<size_t>(schedule.global_iters +
                                           schedule.local_iters + 2));
  ReducedState s = uniform_state(space);
  trace.states.push_back(s);
  for (long i = 0; i < schedule.global_iters; ++i) {
    s = global_grover_step(s);
    trace.states.push_back(s);
  }
  for (long i = 0; i < schedule.local_iters; ++i) {
    s = local_grover_step(s);
    trace.states.push_back(s);
  }
  if (schedule.apply_final_step) {
    s = global_grover_step(s);
    trace.states.push_back(s);
  }
  trace.query_count = schedule.global_iters + schedule.local_iters +
                      (schedule.apply_final_step ? 1 : 0);
  trace.block_success_probability = block_success_probability(s);
  trace.outside_mass = outside_mass(s);
  return trace;
}

double block_success_probability(const ReducedState& state) {
  const double b = static_cast<double>(state.space.block_size);
  return state.amp_target * state.amp_target +
         (b - 1.0) * state.amp_block * state.amp_block;
}

double outside_mass(const ReducedState& state) {
  const double nb = static_cast<double>(state.space.n_items - state.space.block_size);
  return nb * state.amp_outside * state.amp_outside;
}

double norm_squared(const ReducedState& state) {
  return block_success_probability(state) + outside_mass(state);
}

} // namespace psearch
