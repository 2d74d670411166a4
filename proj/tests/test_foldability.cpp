#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "origami/foldability.hpp"
#include "origami/forcing.hpp"
#include "origami/sampling.hpp"
#include "test_support.hpp"

using namespace origami;
using testsupport::mv;
using testsupport::pat;

TEST_CASE("find_tripod") {
  CHECK(find_tripod(pat({0, 120, 240}), mv("MMM"), Parity::M) ==
        std::array<int, 3>{0, 1, 2});
  CHECK_FALSE(find_tripod(pat({0, 90, 180}), mv("MMM"), Parity::M));
  // Exhaustive over the four triples: every one has a closing gap >= 180.
  CHECK_FALSE(find_tripod(pat({0, 170, 180, 350}), mv("MMMM"), Parity::M));
  CHECK_FALSE(find_tripod(pat({0, 120, 240}), mv("MMM"), Parity::V));
}

TEST_CASE("find_cross") {
  CHECK(find_cross(pat({0, 90, 180, 270}), mv("MMMM"), Parity::M) ==
        std::array<int, 4>{0, 1, 2, 3});
  CHECK(find_cross(pat({0, 170, 180, 350}), mv("MMMM"), Parity::M) ==
        std::array<int, 4>{0, 1, 2, 3});
  CHECK_FALSE(find_cross(pat({0, 90, 180}), mv("MMM"), Parity::M));
}

TEST_CASE("in_closed_semicircle") {
  const auto dirs = [](std::initializer_list<int> degs) {
    std::vector<Direction> out;
    for (int d : degs) out.push_back(Direction{d * 1000});
    return out;
  };

  const auto a = in_closed_semicircle(dirs({0, 90, 180}));
  REQUIRE(a);
  for (Direction d : dirs({0, 90, 180}))
    CHECK(ccw_angle(*a, d) <= kHalfTurnMdeg);

  CHECK_FALSE(in_closed_semicircle(dirs({0, 120, 240})));
  // Gaps 170, 10, 170, 10: max 170 < 180.
  CHECK_FALSE(in_closed_semicircle(dirs({0, 170, 180, 350})));

  CHECK(in_closed_semicircle(dirs({42})));
  CHECK_THROWS_AS((void)in_closed_semicircle(std::vector<Direction>{}),
                  PatternError);
}

TEST_CASE("has_birds_foot") {
  CHECK_FALSE(has_birds_foot(pat({0, 90, 180, 270}), mv("VVVV")));

  // Three valleys forming a tripod plus one mountain.
  const auto w = has_birds_foot(pat({0, 60, 120, 240}), mv("VMVV"));
  REQUIRE(w);
  CHECK(w->kind == WitnessKind::Tripod);
  CHECK(w->parity == Parity::V);
  CHECK(w->legs == std::vector<int>{0, 2, 3});
  CHECK(w->opposite == 1);

  const auto m = has_birds_foot(pat({0, 100, 180, 260}), mv("MMVM"));
  REQUIRE(m);
  CHECK(m->kind == WitnessKind::Tripod);
  CHECK(m->parity == Parity::M);
  CHECK(m->legs == std::vector<int>{0, 1, 3});
  CHECK(m->opposite == 2);
}

TEST_CASE("is_rigidly_foldable_assigned") {
  CHECK_FALSE(is_rigidly_foldable_assigned(pat({0, 90, 180, 270}), mv("VVVV")));
  // Mountain tripod c1 c2 c3 plus a valley.
  CHECK(is_rigidly_foldable_assigned(pat({0, 100, 200, 300}), mv("MMMV")));
  CHECK(is_rigidly_foldable_assigned(pat({0, 100, 180, 260}), mv("MMVM")));
}

TEST_CASE("is_rigidly_foldable_unassigned") {
  CHECK_FALSE(is_rigidly_foldable_unassigned(pat({0, 90, 180, 270})).foldable);

  const UnassignedVerdict v = is_rigidly_foldable_unassigned(pat({0, 100, 180, 260}));
  CHECK(v.foldable);
  REQUIRE(v.witness);
  CHECK(is_rigidly_foldable_assigned(pat({0, 100, 180, 260}), *v.witness));

  // Sector from 175 back to 0 is 185 >= 180.
  CHECK_FALSE(is_rigidly_foldable_unassigned(pat({0, 20, 170, 175})).foldable);
  CHECK_FALSE(is_rigidly_foldable_unassigned(pat({0, 100, 200})).foldable);
}

TEST_CASE("unassigned witness in the opposite-cross branch") {
  // Largest wedge (0, 100); the diametrically opposite wedge (180, 280) is
  // equal and empty, so the witness labels that cross M and the rest V.
  const CreasePattern p = pat({0, 100, 140, 180, 280});
  const UnassignedVerdict v = is_rigidly_foldable_unassigned(p);
  REQUIRE(v.witness);
  CHECK(v.witness->to_string() == "MMVMM");
  CHECK(is_rigidly_foldable_assigned(p, *v.witness));
}

TEST_CASE("unassigned witness in the tripod branch") {
  // Largest wedge (260, 0); crease 120 sits strictly inside the opposite
  // arc (80, 180) and completes the mountain tripod {260, 0, 120}.
  const CreasePattern p = pat({0, 80, 120, 180, 260});
  const UnassignedVerdict v = is_rigidly_foldable_unassigned(p);
  REQUIRE(v.witness);
  CHECK(v.witness->to_string() == "MVMVM");
  CHECK(is_rigidly_foldable_assigned(p, *v.witness));
}

TEST_CASE("brute force oracle") {
  CHECK_FALSE(brute_force_foldable(pat({0, 90, 180, 270}), mv("VVVV")));
  CHECK(brute_force_foldable(pat({0, 100, 200, 300}), mv("MMMV")));
  CHECK(brute_force_foldable(pat({0, 100, 180, 260}), mv("MMVM")));
  // Mountain cross plus a valley; found by the antipodal scan.
  CHECK(brute_force_foldable(pat({0, 90, 170, 180, 350}), mv("MVMMM")));
  CHECK_FALSE(brute_force_foldable(pat({0, 170, 180, 350}), mv("MMMM")));
}

TEST_CASE("pop capability") {
  const PopCapability fig2 = pop_capability(pat({0, 100, 200, 300}), mv("MMMV"));
  CHECK(fig2.can_pop_up);
  CHECK_FALSE(fig2.can_pop_down);

  const PopCapability snap =
      pop_capability(pat({0, 60, 120, 180, 240, 300}), mv("MVMVMV"));
  CHECK(snap.can_pop_up);
  CHECK(snap.can_pop_down);

  const PopCapability all_m = pop_capability(pat({0, 100, 200, 300}), mv("MMMM"));
  CHECK(all_m.can_pop_up);
  CHECK_FALSE(all_m.can_pop_down);
}

TEST_CASE("oracle equivalence over random geometries") {
  std::mt19937_64 rng(74207281);
  for (int n = 4; n <= 10; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const CreasePattern p = random_pattern(n, rng);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const MVAssignment mu = assignment_from_mask(n, mask);
        const bool fast = is_rigidly_foldable_assigned(p, mu);
        const bool brute = brute_force_foldable(p, mu);
        REQUIRE_MESSAGE(fast == brute, "n=", n, " mask=", mask);
      }
    }
  }
}

TEST_CASE("gap-scan equivalence per parity class") {
  std::mt19937_64 rng(4250001);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(uniform_u64(rng, 8));
    const CreasePattern p = random_pattern(n, rng);
    const MVAssignment mu =
        assignment_from_mask(n, rng() & ((std::uint64_t{1} << n) - 1));
    for (Parity parity : {Parity::M, Parity::V}) {
      std::vector<Direction> dirs;
      for (int i = 0; i < n; ++i)
        if (mu[i] == parity) dirs.push_back(p.crease(i));
      if (dirs.empty()) continue;
      const bool no_witness = !find_tripod(p, mu, parity) &&
                              !find_cross(p, mu, parity);
      CHECK(no_witness == in_closed_semicircle(dirs).has_value());
    }
  }
}

TEST_CASE("theorem 1 vs theorem 1.5 consistency") {
  std::mt19937_64 rng(97);
  for (int n = 3; n <= 10; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const CreasePattern p = random_pattern(n, rng);
      bool any = false;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && !any; ++mask)
        any = is_rigidly_foldable_assigned(p, assignment_from_mask(n, mask));
      const UnassignedVerdict v = is_rigidly_foldable_unassigned(p);
      REQUIRE(v.foldable == any);
      if (v.foldable) {
        REQUIRE(v.witness);
        CHECK(is_rigidly_foldable_assigned(p, *v.witness));
      }
    }
  }
}

TEST_CASE("parity symmetry") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(uniform_u64(rng, 7));
    const CreasePattern p = random_pattern(n, rng);
    const MVAssignment mu =
        assignment_from_mask(n, rng() & ((std::uint64_t{1} << n) - 1));
    CHECK(is_rigidly_foldable_assigned(p, mu) ==
          is_rigidly_foldable_assigned(p, mu.flipped()));
  }
}

TEST_CASE("a sector of at least pi blocks every assignment") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 40; ++trial) {
    // Squeeze all creases into [0, 175 degrees].
    const int n = 4 + static_cast<int>(uniform_u64(rng, 4));
    std::vector<int> mdeg{0};
    while (static_cast<int>(mdeg.size()) < n) {
      const int a = static_cast<int>(uniform_u64(rng, 175000));
      if (std::find(mdeg.begin(), mdeg.end(), a) == mdeg.end())
        mdeg.push_back(a);
    }
    const CreasePattern p = CreasePattern::from_mdeg(mdeg);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      CHECK_FALSE(is_rigidly_foldable_assigned(p, assignment_from_mask(n, mask)));
  }
}

TEST_CASE("degree-3 patterns never fold") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const CreasePattern p = random_pattern(3, rng);
    for (std::uint64_t mask = 0; mask < 8; ++mask)
      CHECK_FALSE(is_rigidly_foldable_assigned(p, assignment_from_mask(3, mask)));
  }
}
