#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "psearch/grover_core.hpp"
#include "psearch/statevector.hpp"

using namespace psearch;

namespace {

double reduced_diff(const ReducedState& a, const ReducedState& b) {
  return std::max({std::abs(a.amp_target - b.amp_target),
                   std::abs(a.amp_block - b.amp_block),
                   std::abs(a.amp_outside - b.amp_outside)});
}

} // namespace

TEST_CASE("sv_uniform") {
  const StateVector s = sv_uniform(make_space(4, 1));
  REQUIRE(s.amps.size() == 4);
  for (double a : s.amps) CHECK(a == 0.5);

  const StateVector t = sv_uniform(make_space(16, 4));
  for (double a : t.amps) CHECK(a == 0.25);

  const StateVector big = sv_uniform(make_space(1L << 14, 4));
  CHECK(std::abs(sv_norm_squared(big) - 1.0) <= 1e-12);
}

TEST_CASE("sv_uniform enforces the size cap") {
  CHECK_THROWS_AS(sv_uniform(make_space(1L << 15, 4)), CapExceeded);
  const StateVector s = sv_uniform(make_space(1L << 15, 4), 1L << 15);
  CHECK(s.amps.size() == (1L << 15));
}

TEST_CASE("sv_oracle") {
  StateVector s = sv_uniform(make_space(4, 1));
  s = sv_oracle(s);
  CHECK(s.amps[0] == -0.5);
  CHECK(s.amps[1] == 0.5);
  CHECK(s.amps[2] == 0.5);
  CHECK(s.amps[3] == 0.5);
  s = sv_oracle(s);
  for (double a : s.amps) CHECK(a == 0.5); // exact involution

  // target index respects block and item offsets
  StateVector t = sv_oracle(sv_uniform(make_space(64, 4, 2, 3)));
  for (long i = 0; i < 64; ++i)
    CHECK(t.amps[i] == (i == 2 * 16 + 3 ? -0.125 : 0.125));
}

TEST_CASE("sv_global_diffusion") {
  StateVector s = sv_uniform(make_space(4, 1));
  s.amps = {-0.5, 0.5, 0.5, 0.5};
  s = sv_global_diffusion(s);
  CHECK(s.amps[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (int i = 1; i < 4; ++i)
    CHECK(s.amps[i] == doctest::Approx(0.0).scale(1).epsilon(1e-14));

  StateVector u = sv_uniform(make_space(256, 8));
  const StateVector fu = sv_global_diffusion(u);
  for (long i = 0; i < 256; ++i)
    CHECK(std::abs(fu.amps[i] - u.amps[i]) <= 1e-15);
}

TEST_CASE("sv_local_diffusion acts inside each block independently") {
  StateVector s = sv_oracle(sv_uniform(make_space(16, 4)));
  s = sv_local_diffusion(s);
  CHECK(s.amps[0] == doctest::Approx(0.5).epsilon(1e-14));
  for (int i = 1; i < 4; ++i)
    CHECK(s.amps[i] == doctest::Approx(0.0).scale(1).epsilon(1e-14));
  for (int i = 4; i < 16; ++i) CHECK(s.amps[i] == 0.25);

  StateVector q = sv_uniform(make_space(128, 8));
  std::mt19937 rng(7);
  for (double& a : q.amps)
    a = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
  const StateVector back = sv_local_diffusion(sv_local_diffusion(q));
  for (long i = 0; i < 128; ++i)
    CHECK(std::abs(back.amps[i] - q.amps[i]) <= 1e-12);
}

TEST_CASE("reduce maps class-uniform vectors to the three-amplitude state") {
  const ReducedState r = reduce(sv_uniform(make_space(1024, 4)));
  const ReducedState u = uniform_state(make_space(1024, 4));
  CHECK(reduced_diff(r, u) <= 1e-15);

  // empty classes come back as exact zeros
  CHECK(reduce(sv_uniform(make_space(64, 1))).amp_outside == 0.0);
  CHECK(reduce(sv_uniform(make_space(64, 64))).amp_block == 0.0);
}

TEST_CASE("reduce rejects vectors that are not class-uniform") {
  StateVector s = sv_uniform(make_space(16, 4));
  s.amps[2] += 1e-6;
  CHECK_THROWS_WITH_AS(reduce(s),
                       "target-block amplitudes are not class-uniform",
                       NotClassUniform);

  StateVector t = sv_uniform(make_space(16, 4));
  t.amps[9] -= 1e-6;
  CHECK_THROWS_WITH_AS(reduce(t),
                       "outside-block amplitudes are not class-uniform",
                       NotClassUniform);
}

TEST_CASE("both engines agree step by step on random operation strings") {
  std::mt19937 rng(20260817);
  const std::pair<long, long> geoms[] = {{8, 2},   {16, 4},  {64, 8},
                                         {256, 4}, {256, 16}, {243, 3}};
  for (const auto& [n, k] : geoms) {
    for (int rep = 0; rep < 34; ++rep) {
      const long tb = std::uniform_int_distribution<long>(0, k - 1)(rng);
      const long ti =
          std::uniform_int_distribution<long>(0, n / k - 1)(rng);
      const SearchSpace sp = make_space(n, k, tb, ti);
      ReducedState r = uniform_state(sp);
      StateVector v = sv_uniform(sp);
      for (int step = 0; step < 60; ++step) {
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
          case 0:
            r = oracle(r);
            v = sv_oracle(v);
            break;
          case 1:
            r = global_diffusion(r);
            v = sv_global_diffusion(v);
            break;
          default:
            r = local_diffusion(r);
            v = sv_local_diffusion(v);
            break;
        }
        REQUIRE(reduced_diff(reduce(v), r) <= 1e-10);
      }
    }
  }
}

TEST_CASE("sv_partial_search matches the reduced engine on a canonical run") {
  const SearchSpace sp = make_space(1024, 4);
  const Schedule sched{11, 8, true};
  const RunTrace sv = sv_partial_search(sp, sched);
  const RunTrace rd = partial_search(sp, sched);
  REQUIRE(sv.states.size() == rd.states.size());
  CHECK(sv.query_count == rd.query_count);
  for (size_t i = 0; i < sv.states.size(); ++i)
    CHECK(reduced_diff(sv.states[i], rd.states[i]) <= 1e-10);
  CHECK(std::abs(sv.block_success_probability -
                 rd.block_success_probability) <= 1e-10);
  CHECK(std::abs(sv.outside_mass - rd.outside_mass) <= 1e-10);
}

TEST_CASE("sv_partial_search respects the cap and the final-step flag") {
  CHECK_THROWS_AS(sv_partial_search(make_space(1L << 16, 4), Schedule{1, 1, true}),
                  CapExceeded);

  const RunTrace none =
      sv_partial_search(make_space(64, 8), Schedule{0, 0, false});
  CHECK(none.query_count == 0);
  CHECK(none.states.size() == 1);

  const RunTrace fin =
      sv_partial_search(make_space(64, 8), Schedule{3, 2, true});
  CHECK(fin.query_count == 6);
  CHECK(fin.states.size() == 7);
}

TEST_CASE("a non-corner target gives the same reduced dynamics") {
  const Schedule sched{6, 4, true};
  const RunTrace a = sv_partial_search(make_space(256, 4, 0, 0), sched);
  const RunTrace b = sv_partial_search(make_space(256, 4, 3, 17), sched);
  REQUIRE(a.states.size() == b.states.size());
  for (size_t i = 0; i < a.states.size(); ++i)
    CHECK(reduced_diff(a.states[i], b.states[i]) <= 1e-12);
}

TEST_CASE("statevector operations preserve the norm") {
  std::mt19937 rng(5);
  StateVector s = sv_uniform(make_space(512, 8));
  for (int step = 0; step < 200; ++step) {
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: s = sv_oracle(s); break;
      case 1: s = sv_global_diffusion(s); break;
      default: s = sv_local_diffusion(s); break;
    }
    CHECK(std::abs(sv_norm_squared(s) - 1.0) <= 1e-10);
  }
}
