#pragma once

#include "psearch/types.hpp"

namespace psearch {

ReducedState uniform_state(const SearchSpace& space);

// selective inversion: flips the sign of the target amplitude
ReducedState oracle(const ReducedState& state);

// inversion about the average over all N items
ReducedState global_diffusion(const ReducedState& state);

// inversion about the average within each block independently; the
// amp_outside class is an exact fixed point
ReducedState local_diffusion(const ReducedState& state);

ReducedState global_grover_step(const ReducedState& state);
ReducedState local_grover_step(const ReducedState& state);

// j1 global steps, j2 local steps, then one final global step when flagged;
// query_count = j1 + j2 + (1 if final step)
RunTrace partial_search(const SearchSpace& space, const Schedule& schedule);

double block_success_probability(const ReducedState& state); // t^2 + (b-1)u^2
double outside_mass(const ReducedState& state);               // (N-b)v^2
double norm_squared(const ReducedState& state);

} // namespace psearch
