#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "origami/forcing.hpp"
#include "origami/sampling.hpp"
#include "test_support.hpp"

using namespace origami;
using testsupport::mv;
using testsupport::pat;

TEST_CASE("enumerate_foldable_assignments") {
  CHECK(enumerate_foldable_assignments(pat({0, 90, 180, 270})).empty());

  const auto found = enumerate_foldable_assignments(pat({0, 100, 180, 260}));
  REQUIRE(found.size() == 2);
  CHECK(found[0].to_string() == "MMVM");
  CHECK(found[1].to_string() == "VVMV");
}

TEST_CASE("enumeration is lexicographic, parity-closed and matches serial") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(uniform_u64(rng, 9));
    const CreasePattern p = random_pattern(n, rng);
    const auto par = enumerate_foldable_masks(p);
    const auto ser = enumerate_foldable_masks_serial(p);
    REQUIRE(par == ser);
    CHECK(std::is_sorted(par.begin(), par.end()));
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t m : par)
      CHECK(std::binary_search(par.begin(), par.end(), m ^ all));
  }
}

TEST_CASE("enumeration agrees with the brute-force oracle") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(uniform_u64(rng, 5));
    const CreasePattern p = random_pattern(n, rng);
    CHECK(enumerate_foldable_masks(p) == testsupport::brute_foldable_masks(p));
  }
}

TEST_CASE("degree limit") {
  std::mt19937_64 rng(5);
  const CreasePattern p = random_pattern(12, rng);
  CHECK_THROWS_AS((void)enumerate_foldable_assignments(p, 10),
                  DegreeLimitExceeded);
  CHECK_THROWS_AS((void)minimal_forcing_set(p, assignment_from_mask(12, 1), 10),
                  DegreeLimitExceeded);
}

TEST_CASE("is_forcing") {
  const CreasePattern p = pat({0, 60, 120, 180, 240, 300});
  const MVAssignment mu = mv("MVMVMV");

  const std::vector<int> all{0, 1, 2, 3, 4, 5};
  CHECK(is_forcing(p, mu, all));
  CHECK_FALSE(is_forcing(p, mu, std::vector<int>{}));

  // Any 5-subset leaves one crease flexible.
  for (int out = 0; out < 6; ++out) {
    std::vector<int> subset;
    for (int i = 0; i < 6; ++i)
      if (i != out) subset.push_back(i);
    CHECK_FALSE(is_forcing(p, mu, subset));
  }

  CHECK_THROWS_AS((void)is_forcing(p, mv("MMMMMM"), all), NotFoldable);
  CHECK_THROWS_AS((void)is_forcing(p, mu, std::vector<int>{6}), PatternError);
}

TEST_CASE("minimal forcing: alternating hexagon needs every crease") {
  const ForcingReport r =
      minimal_forcing_set(pat({0, 60, 120, 180, 240, 300}), mv("MVMVMV"));
  CHECK(r.size == 6);
  CHECK(r.minimal_set == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(r.bounds == Theorem2Bounds{3, 6});
  CHECK(theorem2_check(r));
}

TEST_CASE("minimal forcing: symmetric degree-4 tripod needs one crease") {
  const ForcingReport r = minimal_forcing_set(pat({0, 100, 180, 260}), mv("MMVM"));
  CHECK(r.foldable_count == 2);
  CHECK(r.size == 1);
  CHECK(r.minimal_set == std::vector<int>{0});
  CHECK(theorem2_check(r));
}

TEST_CASE("minimal forcing: asymmetric degree-4 tripod needs two creases") {
  // Sectors 100, 70, 90, 100; creases 100 and 170 can both be the minority.
  const CreasePattern p = pat({0, 100, 170, 260});
  const ForcingReport r = minimal_forcing_set(p, mv("MVMM"));
  CHECK(r.foldable_count == 4);
  CHECK(r.size == 2);
  CHECK(theorem2_check(r));
  CHECK(r.size == testsupport::brute_minimal_forcing_size(p, mv("MVMM")));
}

TEST_CASE("minimal forcing: degree-5 mountain cross plus valley") {
  const CreasePattern p = pat({0, 45, 90, 180, 270});
  const ForcingReport r = minimal_forcing_set(p, mv("MVMMM"));
  CHECK(r.size == 2);
  CHECK(r.minimal_set == std::vector<int>{1, 3});
  CHECK(theorem2_check(r));
  CHECK(r.size == testsupport::brute_minimal_forcing_size(p, mv("MVMMM")));
}

TEST_CASE("minimal forcing: n-3 on the degree-6 mountain-cross instance") {
  const CreasePattern p = pat({0, 45, 90, 135, 180, 270});
  const ForcingReport r = minimal_forcing_set(p, mv("MVMVMM"));
  CHECK(r.size == 3);
  CHECK(r.minimal_set == std::vector<int>{1, 3, 5});
  CHECK(theorem2_check(r));
  CHECK(r.size == testsupport::brute_minimal_forcing_size(p, mv("MVMVMM")));
}

TEST_CASE("minimal forcing: equal-angle degree-5 tripod needs four creases") {
  const CreasePattern p = pat({0, 72, 144, 216, 288});
  const ForcingReport r = minimal_forcing_set(p, mv("MMVMV"));
  CHECK(r.size == 4);
  CHECK(theorem2_check(r));
  CHECK(r.size == testsupport::brute_minimal_forcing_size(p, mv("MMVMV")));
}

TEST_CASE("minimal forcing rejects unfoldable assignments") {
  CHECK_THROWS_AS(
      (void)minimal_forcing_set(pat({0, 90, 180, 270}), mv("VVVV")),
      NotFoldable);
}

TEST_CASE("theorem2_bounds") {
  CHECK(theorem2_bounds(4) == Theorem2Bounds{1, 2});
  CHECK(theorem2_bounds(5) == Theorem2Bounds{2, 4});
  CHECK(theorem2_bounds(6) == Theorem2Bounds{3, 6});
  CHECK(theorem2_bounds(9) == Theorem2Bounds{6, 9});
  CHECK_THROWS_AS((void)theorem2_bounds(3), PatternError);

  ForcingReport r;
  r.degree = 6;
  r.bounds = theorem2_bounds(6);
  r.size = 6;
  CHECK(theorem2_check(r));
  r.size = 3;
  CHECK(theorem2_check(r));
  r.size = 2;
  CHECK_FALSE(theorem2_check(r));
}

TEST_CASE("forcing sets are monotone under supersets") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + static_cast<int>(uniform_u64(rng, 4));
    const CreasePattern p = random_foldable_pattern(n, rng);
    const MVAssignment mu = random_foldable_assignment(p, rng);
    const ForcingReport r = minimal_forcing_set(p, mu);
    CHECK(r.size >= 1);
    CHECK(is_forcing(p, mu, r.minimal_set));

    // Any superset of the minimal set still forces.
    std::vector<int> superset = r.minimal_set;
    for (int i = 0; i < n; ++i)
      if (std::find(superset.begin(), superset.end(), i) == superset.end()) {
        superset.push_back(i);
        break;
      }
    CHECK(is_forcing(p, mu, superset));

    // No smaller subset forces; in particular the empty set never does.
    if (r.size >= 2) {
      const std::vector<int> smaller(r.minimal_set.begin(),
                                     r.minimal_set.end() - 1);
      CHECK_FALSE(is_forcing(p, mu, smaller));
    }
    CHECK_FALSE(is_forcing(p, mu, std::vector<int>{}));
  }
}

TEST_CASE("census determinism and bounds") {
  CensusParams params;
  params.degree = 5;
  params.samples = 40;
  params.seed = 7;

  const CensusResult a = forcing_census(params);
  const CensusResult b = forcing_census(params);
  const CensusResult c = forcing_census_serial(params);
  CHECK(a.size_counts == b.size_counts);
  CHECK(a.size_counts == c.size_counts);
  CHECK(a.pair_count == c.pair_count);
  CHECK(a.pair_count > 0);
  for (auto [size, count] : a.size_counts) {
    CHECK(size >= 2);
    CHECK(size <= 4);
    CHECK(count > 0);
  }

  params.degree = 4;
  params.samples = 60;
  const CensusResult d4 = forcing_census(params);
  for (auto [size, count] : d4.size_counts) {
    CHECK(size >= 1);
    CHECK(size <= 2);
  }

  params.degree = 7;
  params.samples = 12;
  const CensusResult d7 = forcing_census(params);
  for (auto [size, count] : d7.size_counts) {
    CHECK(size >= 4);
    CHECK(size <= 7);
  }

  params.degree = 3;
  CHECK_THROWS_AS((void)forcing_census(params), DegreeLimitExceeded);
}
