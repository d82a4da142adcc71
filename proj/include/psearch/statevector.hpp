#pragma once

#include <vector>

#include "psearch/types.hpp"

namespace psearch {

inline constexpr long kDefaultSvCap = 1L << 14;

// Dense brute-force representation: one real amplitude per item, blocks laid
// out contiguously, block(i) = i / b.
struct StateVector {
  std::vector<double> amps;
  SearchSpace space;
};

// throws CapExceeded when n_items > cap
StateVector sv_uniform(const SearchSpace& space, long cap = kDefaultSvCap);

StateVector sv_oracle(const StateVector& sv);
StateVector sv_global_diffusion(const StateVector& sv);
StateVector sv_local_diffusion(const StateVector& sv);
StateVector sv_global_grover_step(const StateVector& sv);
StateVector sv_local_grover_step(const StateVector& sv);

// Projects onto the 3-class subspace; throws NotClassUniform if any class
// member deviates from its class representative by more than 1e-10.
ReducedState reduce(const StateVector& sv);

// Same contract as partial_search; trace entries are reduce() snapshots.
RunTrace sv_partial_search(const SearchSpace& space, const Schedule& schedule,
                           long cap = kDefaultSvCap);

double sv_norm_squared(const StateVector& sv);

} // namespace psearch
