#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "origami/core.hpp"
#include "origami/sampling.hpp"
#include "test_support.hpp"

using namespace origami;

TEST_CASE("normalize sorts and carries labels") {
  const std::vector<RawCrease> raw{{90000, Parity::V}, {0, Parity::M},
                                   {180000, Parity::V}};
  const NormalizedPattern out = normalize_pattern(raw);
  CHECK(out.pattern.creases() ==
        std::vector<Direction>{{0}, {90000}, {180000}});
  REQUIRE(out.assignment);
  CHECK(out.assignment->to_string() == "MVV");
}

TEST_CASE("normalize rejects duplicates after reduction") {
  const std::vector<RawCrease> raw{{0, Parity::M}, {360000, Parity::V}};
  CHECK_THROWS_AS((void)normalize_pattern(raw), DuplicateCrease);
}

TEST_CASE("normalize rejects degree two") {
  const std::vector<RawCrease> raw{{0, Parity::M}, {100000, Parity::M}};
  CHECK_THROWS_AS((void)normalize_pattern(raw), TooFewCreases);
}

TEST_CASE("normalize rejects partially labeled input") {
  const std::vector<RawCrease> raw{
      {0, Parity::M}, {90000, std::nullopt}, {180000, Parity::V}};
  CHECK_THROWS_AS((void)normalize_pattern(raw), PartialAssignment);
}

TEST_CASE("normalize reduces negative and large angles") {
  const std::vector<RawCrease> raw{
      {-90000, std::nullopt}, {720000 + 10000, std::nullopt}, {180000, std::nullopt}};
  const NormalizedPattern out = normalize_pattern(raw);
  CHECK(out.pattern.creases() ==
        std::vector<Direction>{{10000}, {180000}, {270000}});
  CHECK_FALSE(out.assignment);
}

TEST_CASE("ccw_angle basics") {
  CHECK(ccw_angle({0}, {100000}) == 100000);
  CHECK(ccw_angle({260000}, {0}) == 100000);
  CHECK(ccw_angle({90000}, {90000}) == 0);
}

TEST_CASE("sector angles") {
  CHECK(testsupport::pat({0, 100, 180, 260}).sector_angles() ==
        std::vector<int>{100000, 80000, 80000, 100000});
  CHECK(testsupport::pat({0, 120, 240}).sector_angles() ==
        std::vector<int>{120000, 120000, 120000});
  CHECK(testsupport::pat({0, 90, 180, 270}).sector_angles() ==
        std::vector<int>{90000, 90000, 90000, 90000});
}

TEST_CASE("properties over random patterns") {
  std::mt19937_64 rng(20240317);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(uniform_u64(rng, 10));
    const CreasePattern p = random_pattern(n, rng);

    const std::vector<int> sectors = p.sector_angles();
    CHECK(std::accumulate(sectors.begin(), sectors.end(), 0) == kFullTurnMdeg);
    for (int s : sectors) CHECK(s > 0);

    const Direction a{static_cast<int>(uniform_u64(rng, kFullTurnMdeg))};
    const Direction b{static_cast<int>(uniform_u64(rng, kFullTurnMdeg))};
    const int sum = ccw_angle(a, b) + ccw_angle(b, a);
    CHECK((sum == 0 || sum == kFullTurnMdeg));

    // Idempotence of normalization on its own output.
    std::vector<RawCrease> raw;
    for (const Direction& d : p.creases())
      raw.push_back(RawCrease{d.mdeg, Parity::M});
    const NormalizedPattern once = normalize_pattern(raw);
    std::vector<RawCrease> again;
    for (int i = 0; i < once.pattern.degree(); ++i)
      again.push_back(RawCrease{once.pattern.crease(i).mdeg,
                                (*once.assignment)[i]});
    const NormalizedPattern twice = normalize_pattern(again);
    CHECK(once.pattern == twice.pattern);
    CHECK(*once.assignment == *twice.assignment);
  }
}

TEST_CASE("assignment string round trip and flip") {
  const MVAssignment mu = MVAssignment::from_string("MVVM");
  CHECK(mu.to_string() == "MVVM");
  CHECK(mu.flipped().to_string() == "VMMV");
  CHECK(mu.flipped().flipped() == mu);
}
