#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "origami/core.hpp"

// Minimal forcing sets of rigidly foldable assigned vertices.
//
// A subset F of the creases forces an assignment mu when mu is the only
// rigidly foldable assignment of the pattern agreeing with mu on F.  The
// search spaces are exponential in the degree: assignments are enumerated as
// bitmasks and subsets size-ascending, so everything here is capped by
// `degree_limit`.
//
// The assignment sweep is the data-parallel kernel of this library; it comes
// in an OpenMP flavor and a serial reference flavor with identical output
// (bitmask order, hence lexicographic with M < V).

namespace origami {

struct DegreeLimitExceeded : PatternError {
  using PatternError::PatternError;
};

inline constexpr int kDefaultDegreeLimit = 20;

// Crease i corresponds to bit (degree-1-i), so ascending masks enumerate
// assignments in lexicographic order with M < V.
std::uint64_t assignment_mask(const MVAssignment& mu);
MVAssignment assignment_from_mask(int degree, std::uint64_t mask);

// All rigidly foldable assignment masks of the pattern, ascending.
std::vector<std::uint64_t> enumerate_foldable_masks(
    const CreasePattern& p, int degree_limit = kDefaultDegreeLimit);
std::vector<std::uint64_t> enumerate_foldable_masks_serial(
    const CreasePattern& p, int degree_limit = kDefaultDegreeLimit);

std::vector<MVAssignment> enumerate_foldable_assignments(
    const CreasePattern& p, int degree_limit = kDefaultDegreeLimit);
std::vector<MVAssignment> enumerate_foldable_assignments_serial(
    const CreasePattern& p, int degree_limit = kDefaultDegreeLimit);

bool is_forcing(const CreasePattern& p, const MVAssignment& mu,
                std::span<const int> subset,
                int degree_limit = kDefaultDegreeLimit);

struct Theorem2Bounds {
  int lower = 0;
  int upper = 0;
  friend bool operator==(Theorem2Bounds, Theorem2Bounds) = default;
};

// Size interval for a minimal forcing set of a rigidly foldable degree-n
// vertex: [n-3, n] for n >= 6, [2, 4] for n = 5, [1, 2] for n = 4.
Theorem2Bounds theorem2_bounds(int degree);

struct ForcingReport {
  int degree = 0;
  MVAssignment assignment;
  std::int64_t foldable_count = 0;
  std::vector<int> minimal_set;  // smallest forcing subset, lexicographic tie-break
  int size = 0;
  Theorem2Bounds bounds;
};

ForcingReport minimal_forcing_set(const CreasePattern& p,
                                  const MVAssignment& mu,
                                  int degree_limit = kDefaultDegreeLimit);

bool theorem2_check(const ForcingReport& report);

struct CensusParams {
  int degree = 5;
  std::int64_t samples = 100;  // accepted (foldable) pattern instances
  std::uint64_t seed = 1;
  int degree_limit = kDefaultDegreeLimit;
};

struct CensusResult {
  CensusParams params;
  std::map<int, std::int64_t> size_counts;  // minimal size -> occurrences
  std::int64_t pair_count = 0;              // foldable (pattern, mu) pairs
};

// Minimal-forcing-size distribution over random foldable geometries; every
// foldable assignment of every sampled pattern contributes one count.
// Deterministic for a given seed regardless of thread count.
CensusResult forcing_census(const CensusParams& params);
CensusResult forcing_census_serial(const CensusParams& params);

}  // namespace origami
