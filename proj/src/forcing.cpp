#include "origami/forcing.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "origami/foldability.hpp"
#include "origami/sampling.hpp"

namespace origami {

namespace {

std::uint64_t mask_bit(int degree, int crease) {
  return 1ull << (degree - 1 - crease);
}

void check_degree(const CreasePattern& p, int degree_limit) {
  if (degree_limit < 3 || degree_limit > 62)
    throw DegreeLimitExceeded("degree limit must be in [3, 62], got " +
                              std::to_string(degree_limit));
  if (p.degree() > degree_limit)
    throw DegreeLimitExceeded("pattern degree " + std::to_string(p.degree()) +
                              " exceeds limit " + std::to_string(degree_limit));
}

// Bit set in the mask means V.  Stack-allocated inner check used by the
// enumeration kernels.
bool foldable_for_mask(std::span<const Direction> dirs, std::uint64_t mask) {
  const int n = static_cast<int>(dirs.size());
  int cls[2][64];
  int cnt[2] = {0, 0};
  for (int i = 0; i < n; ++i) {
    const int v = static_cast<int>((mask >> (n - 1 - i)) & 1u);
    cls[v][cnt[v]++] = dirs[static_cast<size_t>(i)].mdeg;
  }
  if (cnt[0] == 0 || cnt[1] == 0) return false;
  for (int v = 0; v < 2; ++v) {
    const int c = cnt[v];
    if (c < 3) continue;
    bool ok = true;
    for (int i = 0; i < c && ok; ++i) {
      int gap = cls[v][(i + 1) % c] - cls[v][i];
      if (gap <= 0) gap += kFullTurnMdeg;
      ok = gap < kHalfTurnMdeg;
    }
    if (ok) return true;
  }
  return false;
}

template <bool kParallel>
std::vector<std::uint64_t> foldable_masks_impl(const CreasePattern& p,
                                               int degree_limit) {
  check_degree(p, degree_limit);
  const int n = p.degree();
  const std::int64_t total = std::int64_t{1} << n;
  std::span<const Direction> dirs(p.creases());

  std::vector<std::uint8_t> flag(static_cast<size_t>(total));
  if constexpr (kParallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t mask = 0; mask < total; ++mask)
      flag[static_cast<size_t>(mask)] =
          foldable_for_mask(dirs, static_cast<std::uint64_t>(mask));
  } else {
    for (std::int64_t mask = 0; mask < total; ++mask)
      flag[static_cast<size_t>(mask)] =
          foldable_for_mask(dirs, static_cast<std::uint64_t>(mask));
  }

  std::vector<std::uint64_t> out;
  for (std::int64_t mask = 0; mask < total; ++mask)
    if (flag[static_cast<size_t>(mask)])
      out.push_back(static_cast<std::uint64_t>(mask));
  return out;
}

std::vector<MVAssignment> masks_to_assignments(
    int degree, const std::vector<std::uint64_t>& masks) {
  std::vector<MVAssignment> out;
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.push_back(assignment_from_mask(degree, m));
  return out;
}

// True when `mu_mask` is the only mask in `foldable` agreeing with it on the
// creases selected by `agree_bits`.
bool forcing_on_masks(std::span<const std::uint64_t> foldable,
                      std::uint64_t mu_mask, std::uint64_t agree_bits) {
  const std::uint64_t key = mu_mask & agree_bits;
  for (std::uint64_t m : foldable)
    if ((m & agree_bits) == key && m != mu_mask) return false;
  return true;
}

// Size-ascending exhaustive subset search.  Creases whose single flip is
// still foldable must belong to every forcing set, which prunes the search
// without changing the lexicographic tie-break.
void minimal_forcing_from_masks(const CreasePattern& p,
                                std::span<const std::uint64_t> foldable,
                                std::uint64_t mu_mask,
                                std::vector<int>* set_out) {
  const int n = p.degree();
  std::uint64_t required = 0;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t flipped = mu_mask ^ mask_bit(n, i);
    if (std::binary_search(foldable.begin(), foldable.end(), flipped))
      required |= mask_bit(n, i);
  }
  const int required_size = std::popcount(required);

  std::vector<int> comb;
  for (int k = std::max(required_size, 1); k <= n; ++k) {
    comb.resize(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = i;
    for (;;) {
      std::uint64_t bits = 0;
      for (int i : comb) bits |= mask_bit(n, i);
      if ((bits & required) == required &&
          forcing_on_masks(foldable, mu_mask, bits)) {
        *set_out = comb;
        return;
      }
      // next combination in lexicographic order
      int pos = k - 1;
      while (pos >= 0 && comb[static_cast<size_t>(pos)] == n - k + pos) --pos;
      if (pos < 0) break;
      ++comb[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < k; ++i)
        comb[static_cast<size_t>(i)] = comb[static_cast<size_t>(i - 1)] + 1;
    }
  }
  // The full crease set always forces, so the search cannot fall through.
  throw PatternError("subset search exhausted without a forcing set");
}

CensusResult census_impl(const CensusParams& params, bool parallel) {
  if (params.degree < 4)
    throw DegreeLimitExceeded("census needs degree >= 4, got " +
                              std::to_string(params.degree));
  if (params.degree > params.degree_limit)
    throw DegreeLimitExceeded("census degree " + std::to_string(params.degree) +
                              " exceeds limit " +
                              std::to_string(params.degree_limit));
  if (params.samples < 0)
    throw PatternError("census sample count must be nonnegative");

  struct InstanceCounts {
    std::map<int, std::int64_t> sizes;
  };
  std::vector<InstanceCounts> per_instance(
      static_cast<size_t>(params.samples));

  auto run_instance = [&](std::int64_t idx) {
    std::mt19937_64 rng(instance_seed(params.seed, idx));
    CreasePattern pattern = random_pattern(params.degree, rng);
    std::vector<std::uint64_t> masks =
        foldable_masks_impl<false>(pattern, params.degree_limit);
    while (masks.empty()) {
      pattern = random_pattern(params.degree, rng);
      masks = foldable_masks_impl<false>(pattern, params.degree_limit);
    }
    auto& counts = per_instance[static_cast<size_t>(idx)].sizes;
    std::vector<int> set;
    for (std::uint64_t mu_mask : masks) {
      minimal_forcing_from_masks(pattern, masks, mu_mask, &set);
      ++counts[static_cast<int>(set.size())];
    }
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < params.samples; ++i) run_instance(i);
  } else {
    for (std::int64_t i = 0; i < params.samples; ++i) run_instance(i);
  }

  CensusResult result;
  result.params = params;
  for (const InstanceCounts& inst : per_instance)
    for (auto [size, count] : inst.sizes) {
      result.size_counts[size] += count;
      result.pair_count += count;
    }
  return result;
}

}  // namespace

std::uint64_t assignment_mask(const MVAssignment& mu) {
  std::uint64_t mask = 0;
  const int n = mu.size();
  for (int i = 0; i < n; ++i)
    if (mu[i] == Parity::V) mask |= mask_bit(n, i);
  return mask;
}

MVAssignment assignment_from_mask(int degree, std::uint64_t mask) {
  MVAssignment mu;
  mu.labels.resize(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i)
    mu.labels[static_cast<size_t>(i)] =
        (mask & mask_bit(degree, i)) ? Parity::V : Parity::M;
  return mu;
}

std::vector<std::uint64_t> enumerate_foldable_masks(const CreasePattern& p,
                                                    int degree_limit) {
  return foldable_masks_impl<true>(p, degree_limit);
}

std::vector<std::uint64_t> enumerate_foldable_masks_serial(
    const CreasePattern& p, int degree_limit) {
  return foldable_masks_impl<false>(p, degree_limit);
}

std::vector<MVAssignment> enumerate_foldable_assignments(const CreasePattern& p,
                                                         int degree_limit) {
  return masks_to_assignments(p.degree(),
                              foldable_masks_impl<true>(p, degree_limit));
}

std::vector<MVAssignment> enumerate_foldable_assignments_serial(
    const CreasePattern& p, int degree_limit) {
  return masks_to_assignments(p.degree(),
                              foldable_masks_impl<false>(p, degree_limit));
}

bool is_forcing(const CreasePattern& p, const MVAssignment& mu,
                std::span<const int> subset, int degree_limit) {
  if (p.degree() != mu.size())
    throw PatternError("assignment length does not match pattern degree");
  if (!is_rigidly_foldable_assigned(p, mu))
    throw NotFoldable("assignment is not rigidly foldable");
  const int n = p.degree();
  std::uint64_t bits = 0;
  for (int i : subset) {
    if (i < 0 || i >= n)
      throw PatternError("crease index " + std::to_string(i) +
                         " out of range for degree " + std::to_string(n));
    bits |= mask_bit(n, i);
  }
  const std::vector<std::uint64_t> foldable =
      enumerate_foldable_masks(p, degree_limit);
  return forcing_on_masks(foldable, assignment_mask(mu), bits);
}

Theorem2Bounds theorem2_bounds(int degree) {
  if (degree < 4)
    throw PatternError("no rigidly foldable vertex has degree below 4");
  if (degree == 4) return {1, 2};
  if (degree == 5) return {2, 4};
  return {degree - 3, degree};
}

ForcingReport minimal_forcing_set(const CreasePattern& p,
                                  const MVAssignment& mu, int degree_limit) {
  if (p.degree() != mu.size())
    throw PatternError("assignment length does not match pattern degree");
  if (!is_rigidly_foldable_assigned(p, mu))
    throw NotFoldable("assignment is not rigidly foldable");
  const std::vector<std::uint64_t> foldable =
      enumerate_foldable_masks(p, degree_limit);

  ForcingReport report;
  report.degree = p.degree();
  report.assignment = mu;
  report.foldable_count = static_cast<std::int64_t>(foldable.size());
  minimal_forcing_from_masks(p, foldable, assignment_mask(mu),
                             &report.minimal_set);
  report.size = static_cast<int>(report.minimal_set.size());
  report.bounds = theorem2_bounds(p.degree());
  return report;
}

bool theorem2_check(const ForcingReport& report) {
  return report.bounds.lower <= report.size &&
         report.size <= report.bounds.upper;
}

CensusResult forcing_census(const CensusParams& params) {
  return census_impl(params, true);
}

CensusResult forcing_census_serial(const CensusParams& params) {
  return census_impl(params, false);
}

}  // namespace origami
