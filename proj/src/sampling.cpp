#include "origami/sampling.hpp"

#include <algorithm>
#include <bit>

#include "origami/forcing.hpp"

namespace origami {

std::uint64_t instance_seed(std::uint64_t seed, std::int64_t index) {
  // splitmix64 step over a seed/index blend
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t uniform_u64(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t mask = std::bit_ceil(bound) - 1;
  for (;;) {
    const std::uint64_t x = rng() & mask;
    if (x < bound) return x;
  }
}

CreasePattern random_pattern(int degree, std::mt19937_64& rng) {
  std::vector<int> angles;
  angles.reserve(static_cast<size_t>(degree));
  while (static_cast<int>(angles.size()) < degree) {
    const int a = static_cast<int>(uniform_u64(rng, kFullTurnMdeg));
    if (std::find(angles.begin(), angles.end(), a) == angles.end())
      angles.push_back(a);
  }
  std::sort(angles.begin(), angles.end());
  std::vector<Direction> dirs;
  dirs.reserve(angles.size());
  for (int a : angles) dirs.push_back(Direction{a});
  return CreasePattern(std::move(dirs));
}

CreasePattern random_foldable_pattern(int degree, std::mt19937_64& rng) {
  for (;;) {
    CreasePattern p = random_pattern(degree, rng);
    if (!enumerate_foldable_masks_serial(p).empty()) return p;
  }
}

MVAssignment random_foldable_assignment(const CreasePattern& p,
                                        std::mt19937_64& rng) {
  const std::vector<std::uint64_t> masks = enumerate_foldable_masks_serial(p);
  if (masks.empty())
    throw NotFoldable("pattern admits no rigidly foldable assignment");
  const std::uint64_t pick = uniform_u64(rng, masks.size());
  return assignment_from_mask(p.degree(), masks[pick]);
}

}  // namespace origami
