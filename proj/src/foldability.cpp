#include "origami/foldability.hpp"

#include <algorithm>
#include <cassert>

namespace origami {

namespace {

void check_sizes(const CreasePattern& p, const MVAssignment& mu) {
  if (p.degree() != mu.size())
    throw PatternError("assignment length " + std::to_string(mu.size()) +
                       " does not match pattern degree " +
                       std::to_string(p.degree()));
}

std::vector<int> parity_indices(const MVAssignment& mu, Parity parity) {
  std::vector<int> out;
  for (int i = 0; i < mu.size(); ++i)
    if (mu[i] == parity) out.push_back(i);
  return out;
}

bool gaps_below_half_turn(Direction a, Direction b, Direction c) {
  return ccw_angle(a, b) < kHalfTurnMdeg && ccw_angle(b, c) < kHalfTurnMdeg &&
         ccw_angle(c, a) < kHalfTurnMdeg;
}

// A parity class admits a tripod or cross iff it has at least three members
// and its maximum cyclic gap is strictly below a half turn.
bool class_has_tripod_or_cross(std::span<const Direction> dirs) {
  if (dirs.size() < 3) return false;
  for (size_t i = 0; i < dirs.size(); ++i) {
    size_t j = (i + 1) % dirs.size();
    if (ccw_angle(dirs[i], dirs[j]) >= kHalfTurnMdeg) return false;
  }
  return true;
}

std::vector<Direction> class_directions(const CreasePattern& p,
                                        const MVAssignment& mu, Parity parity) {
  std::vector<Direction> dirs;
  for (int i = 0; i < p.degree(); ++i)
    if (mu[i] == parity) dirs.push_back(p.crease(i));
  return dirs;
}

}  // namespace

std::optional<std::array<int, 3>> find_tripod(const CreasePattern& p,
                                              const MVAssignment& mu,
                                              Parity parity) {
  check_sizes(p, mu);
  const std::vector<int> idx = parity_indices(mu, parity);
  const int m = static_cast<int>(idx.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      for (int c = b + 1; c < m; ++c)
        if (gaps_below_half_turn(p.crease(idx[a]), p.crease(idx[b]),
                                 p.crease(idx[c])))
          return std::array<int, 3>{idx[a], idx[b], idx[c]};
  return std::nullopt;
}

std::optional<std::array<int, 4>> find_cross(const CreasePattern& p,
                                             const MVAssignment& mu,
                                             Parity parity) {
  check_sizes(p, mu);
  const std::vector<int> idx = parity_indices(mu, parity);
  const int m = static_cast<int>(idx.size());

  std::vector<std::pair<int, int>> pairs;  // antipodal, first < second
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (antipode(p.crease(idx[a])) == p.crease(idx[b]))
        pairs.emplace_back(idx[a], idx[b]);

  std::optional<std::array<int, 4>> best;
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a + 1; b < pairs.size(); ++b) {
      std::array<int, 4> quad{pairs[a].first, pairs[a].second, pairs[b].first,
                              pairs[b].second};
      std::sort(quad.begin(), quad.end());
      if (!best || quad < *best) best = quad;
    }
  return best;
}

std::optional<Direction> in_closed_semicircle(std::span<const Direction> dirs) {
  if (dirs.empty())
    throw PatternError("in_closed_semicircle requires a nonempty direction set");
  std::vector<Direction> sorted(dirs.begin(), dirs.end());
  std::sort(sorted.begin(), sorted.end());

  int best_gap = -1;
  size_t best_start = 0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    size_t j = (i + 1) % sorted.size();
    int gap = ccw_angle(sorted[i], sorted[j]);
    if (sorted.size() == 1) gap = kFullTurnMdeg;
    if (gap > best_gap) {
      best_gap = gap;
      best_start = j;
    }
  }
  if (best_gap >= kHalfTurnMdeg) return sorted[best_start];
  return std::nullopt;
}

std::optional<BirdsFootWitness> find_birds_foot(const CreasePattern& p,
                                                const MVAssignment& mu,
                                                Parity legs_parity) {
  check_sizes(p, mu);
  const std::vector<int> opp = parity_indices(mu, opposite(legs_parity));
  if (opp.empty()) return std::nullopt;

  const std::vector<Direction> dirs = class_directions(p, mu, legs_parity);
  if (!class_has_tripod_or_cross(dirs)) return std::nullopt;

  BirdsFootWitness w;
  w.parity = legs_parity;
  w.opposite = opp.front();
  if (auto tri = find_tripod(p, mu, legs_parity)) {
    w.kind = WitnessKind::Tripod;
    w.legs.assign(tri->begin(), tri->end());
    return w;
  }
  auto cross = find_cross(p, mu, legs_parity);
  assert(cross && "gap scan promised a tripod or cross");
  w.kind = WitnessKind::Cross;
  w.legs.assign(cross->begin(), cross->end());
  return w;
}

std::optional<BirdsFootWitness> has_birds_foot(const CreasePattern& p,
                                               const MVAssignment& mu) {
  if (auto w = find_birds_foot(p, mu, Parity::M)) return w;
  return find_birds_foot(p, mu, Parity::V);
}

bool is_rigidly_foldable_assigned(const CreasePattern& p,
                                  const MVAssignment& mu) {
  check_sizes(p, mu);
  int m_count = 0;
  for (int i = 0; i < mu.size(); ++i) m_count += mu[i] == Parity::M;
  const int v_count = mu.size() - m_count;
  if (m_count == 0 || v_count == 0) return false;
  return class_has_tripod_or_cross(class_directions(p, mu, Parity::M)) ||
         class_has_tripod_or_cross(class_directions(p, mu, Parity::V));
}

UnassignedVerdict is_rigidly_foldable_unassigned(const CreasePattern& p) {
  const int n = p.degree();
  if (n < 4) return {};
  const std::vector<int> sectors = p.sector_angles();
  for (int s : sectors)
    if (s >= kHalfTurnMdeg) return {};
  if (n == 4 && antipode(p.crease(0)) == p.crease(2) &&
      antipode(p.crease(1)) == p.crease(3))
    return {};  // the whole pattern is an unspecified cross

  // Constructive witness: start from the wedge with the largest sector.
  int wedge = 0;
  for (int i = 1; i < n; ++i)
    if (sectors[i] > sectors[wedge]) wedge = i;
  const int left = wedge;
  const int right = (wedge + 1) % n;
  const Direction a = antipode(p.crease(left));
  const Direction b = antipode(p.crease(right));

  MVAssignment mu;
  mu.labels.assign(static_cast<size_t>(n), Parity::V);

  const std::optional<int> ia = p.index_of(a);
  const std::optional<int> ib = p.index_of(b);
  if (ia && ib && (*ia + 1) % n == *ib) {
    // Equal wedge diametrically opposite: the four bounding creases are an
    // unspecified cross.  Label it M; everything else stays V.
    mu.labels[static_cast<size_t>(left)] = Parity::M;
    mu.labels[static_cast<size_t>(right)] = Parity::M;
    mu.labels[static_cast<size_t>(*ia)] = Parity::M;
    mu.labels[static_cast<size_t>(*ib)] = Parity::M;
  } else {
    // Some crease lies strictly inside the opposite wedge; W's bounding
    // creases and that crease form a tripod.
    const int span = ccw_angle(a, b);
    int pick = -1;
    int pick_off = kFullTurnMdeg;
    for (int i = 0; i < n; ++i) {
      int off = ccw_angle(a, p.crease(i));
      if (off > 0 && off < span && off < pick_off) {
        pick = i;
        pick_off = off;
      }
    }
    assert(pick >= 0 && "largest wedge guarantees a crease opposite it");
    mu.labels[static_cast<size_t>(left)] = Parity::M;
    mu.labels[static_cast<size_t>(right)] = Parity::M;
    mu.labels[static_cast<size_t>(pick)] = Parity::M;
  }
  return UnassignedVerdict{true, std::move(mu)};
}

bool brute_force_foldable(const CreasePattern& p, const MVAssignment& mu) {
  check_sizes(p, mu);
  for (Parity legs : {Parity::M, Parity::V}) {
    const std::vector<int> idx = parity_indices(mu, legs);
    if (idx.size() == mu.labels.size()) continue;  // no opposite-parity crease
    if (idx.empty()) continue;

    const int m = static_cast<int>(idx.size());
    bool certificate = false;
    for (int a = 0; a < m && !certificate; ++a)
      for (int b = a + 1; b < m && !certificate; ++b)
        for (int c = b + 1; c < m && !certificate; ++c)
          certificate = gaps_below_half_turn(p.crease(idx[a]), p.crease(idx[b]),
                                             p.crease(idx[c]));
    if (!certificate) {
      int antipodal_pairs = 0;
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          antipodal_pairs += antipode(p.crease(idx[a])) == p.crease(idx[b]);
      certificate = antipodal_pairs >= 2;
    }
    if (certificate) return true;
  }
  return false;
}

PopCapability pop_capability(const CreasePattern& p, const MVAssignment& mu) {
  check_sizes(p, mu);
  return PopCapability{
      class_has_tripod_or_cross(class_directions(p, mu, Parity::M)),
      class_has_tripod_or_cross(class_directions(p, mu, Parity::V))};
}

}  // namespace origami
