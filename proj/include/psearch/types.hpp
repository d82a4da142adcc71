#pragma once

#include <stdexcept>
#include <vector>

namespace psearch {

struct SearchSpace {
  long n_items = 0;      // N
  long n_blocks = 0;     // K
  long block_size = 0;   // b = N / K
  long target_block = 0; // in [0, K)
  long target_item = 0;  // in [0, b), within the target block
};

// Validates geometry; throws std::invalid_argument with the message
// "n_blocks must divide n_items" on indivisible sizes.
SearchSpace make_space(long n_items, long n_blocks, long target_block = 0,
                       long target_item = 0);

// Exact state of the algorithm in the 3-class symmetric subspace.
// Classes with no members (amp_block when b=1, amp_outside when K=1) are
// kept at exactly 0.
struct ReducedState {
  double amp_target = 0.0;  // t, the target item
  double amp_block = 0.0;   // u, each of the b-1 other items in the target block
  double amp_outside = 0.0; // v, each of the N-b items in other blocks
  SearchSpace space;
};

struct Schedule {
  long global_iters = 0; // j1
  long local_iters = 0;  // j2
  bool apply_final_step = true;
};

struct RunTrace {
  SearchSpace space;
  Schedule schedule;
  std::vector<ReducedState> states; // states[0] is the initial state
  long query_count = 0;
  double block_success_probability = 0.0;
  double outside_mass = 0.0;
};

// reduce() precondition violated: amplitudes within a class differ.
struct NotClassUniform : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// canonical step formula gives a negative global iteration count.
struct RawNegative : std::domain_error {
  using std::domain_error::domain_error;
};

// statevector engine asked for more items than its configured cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace psearch
