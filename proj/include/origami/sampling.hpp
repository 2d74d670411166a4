#pragma once

#include <cstdint>
#include <random>

#include "origami/core.hpp"

// Deterministic random-geometry sampling shared by the forcing census, the
// self-test suites and the test harness.  Everything is a pure function of
// the generator state, so results are reproducible across platforms and
// independent of thread scheduling.

namespace origami {

// Stateless mix for deriving independent per-instance seeds from
// (seed, instance index).
std::uint64_t instance_seed(std::uint64_t seed, std::int64_t index);

// Unbiased draw from [0, bound); bound >= 1.
std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t bound);

// Pattern with `degree` distinct uniformly random integer-mdeg directions.
CreasePattern random_pattern(int degree, std::mt19937_64& rng);

// Rejection-samples random_pattern until the geometry admits some rigidly
// foldable assignment.
CreasePattern random_foldable_pattern(int degree, std::mt19937_64& rng);

// Uniform draw among the rigidly foldable assignments of the pattern.
// The pattern must admit at least one.
MVAssignment random_foldable_assignment(const CreasePattern& p,
                                        std::mt19937_64& rng);

}  // namespace origami
