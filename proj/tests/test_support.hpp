#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "origami/core.hpp"
#include "origami/foldability.hpp"
#include "origami/forcing.hpp"
#include "origami/sampling.hpp"

// Shared helpers for the test binaries, including independent oracles that
// bypass the library's fast paths entirely.

namespace testsupport {

// Pattern from whole degrees.
inline origami::CreasePattern pat(std::initializer_list<int> degrees) {
  std::vector<int> mdeg;
  for (int d : degrees) mdeg.push_back(d * 1000);
  return origami::CreasePattern::from_mdeg(mdeg);
}

inline origami::MVAssignment mv(std::string_view s) {
  return origami::MVAssignment::from_string(s);
}

// All foldable assignment masks via the exhaustive brute-force oracle only.
inline std::vector<std::uint64_t> brute_foldable_masks(
    const origami::CreasePattern& p) {
  const int n = p.degree();
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (origami::brute_force_foldable(p,
                                      origami::assignment_from_mask(n, mask)))
      out.push_back(mask);
  return out;
}

// Minimal forcing size by plain size-ascending subset search over the
// brute-force foldable list; independent of the library's search.
inline int brute_minimal_forcing_size(const origami::CreasePattern& p,
                                      const origami::MVAssignment& mu) {
  const int n = p.degree();
  const std::vector<std::uint64_t> foldable = brute_foldable_masks(p);
  const std::uint64_t mu_mask = origami::assignment_mask(mu);

  for (int k = 0; k <= n; ++k) {
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << n); ++sel) {
      if (std::popcount(sel) != k) continue;
      bool unique = true;
      for (std::uint64_t m : foldable)
        if (m != mu_mask && (m & sel) == (mu_mask & sel)) {
          unique = false;
          break;
        }
      if (unique) return k;
    }
  }
  return n;
}

}  // namespace testsupport
