#include "origami/core.hpp"

#include <algorithm>
#include <utility>

namespace origami {

std::optional<Parity> parity_from_char(char c) {
  switch (c) {
    case 'M':
    case 'm':
      return Parity::M;
    case 'V':
    case 'v':
      return Parity::V;
    default:
      return std::nullopt;
  }
}

Direction reduce_mdeg(long long angle_mdeg) {
  long long r = angle_mdeg % kFullTurnMdeg;
  if (r < 0) r += kFullTurnMdeg;
  return Direction{static_cast<int>(r)};
}

int ccw_angle(Direction from, Direction to) {
  int d = to.mdeg - from.mdeg;
  if (d < 0) d += kFullTurnMdeg;
  return d;
}

Direction antipode(Direction d) {
  return reduce_mdeg(static_cast<long long>(d.mdeg) + kHalfTurnMdeg);
}

CreasePattern::CreasePattern(std::vector<Direction> sorted_creases)
    : creases_(std::move(sorted_creases)) {
  if (creases_.size() < 3)
    throw TooFewCreases("a single-vertex pattern needs at least 3 creases, got " +
                        std::to_string(creases_.size()));
  for (size_t i = 0; i < creases_.size(); ++i) {
    int a = creases_[i].mdeg;
    if (a < 0 || a >= kFullTurnMdeg)
      throw PatternError("crease angle out of range: " + std::to_string(a));
    if (i > 0 && creases_[i - 1].mdeg >= a)
      throw DuplicateCrease("crease angles must be strictly increasing at " +
                            std::to_string(a) + " mdeg");
  }
}

CreasePattern CreasePattern::from_mdeg(std::span<const int> angles_mdeg) {
  std::vector<RawCrease> raw;
  raw.reserve(angles_mdeg.size());
  for (int a : angles_mdeg) raw.push_back(RawCrease{a, std::nullopt});
  return normalize_pattern(raw).pattern;
}

std::vector<int> CreasePattern::sector_angles() const {
  std::vector<int> sectors(creases_.size());
  for (size_t i = 0; i < creases_.size(); ++i) {
    size_t j = (i + 1) % creases_.size();
    sectors[i] = ccw_angle(creases_[i], creases_[j]);
  }
  return sectors;
}

std::optional<int> CreasePattern::index_of(Direction d) const {
  auto it = std::lower_bound(creases_.begin(), creases_.end(), d);
  if (it == creases_.end() || *it != d) return std::nullopt;
  return static_cast<int>(it - creases_.begin());
}

MVAssignment MVAssignment::flipped() const {
  MVAssignment out = *this;
  for (auto& p : out.labels) p = opposite(p);
  return out;
}

std::string MVAssignment::to_string() const {
  std::string s;
  s.reserve(labels.size());
  for (Parity p : labels) s.push_back(to_char(p));
  return s;
}

MVAssignment MVAssignment::from_string(std::string_view s) {
  MVAssignment out;
  out.labels.reserve(s.size());
  for (char c : s) {
    auto p = parity_from_char(c);
    if (!p) throw PatternError(std::string("invalid MV label character: ") + c);
    out.labels.push_back(*p);
  }
  return out;
}

NormalizedPattern normalize_pattern(std::span<const RawCrease> raw) {
  if (raw.empty()) throw TooFewCreases("empty crease list");

  std::vector<std::pair<Direction, std::optional<Parity>>> entries;
  entries.reserve(raw.size());
  for (const RawCrease& rc : raw)
    entries.emplace_back(reduce_mdeg(rc.angle_mdeg), rc.mv);
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (size_t i = 1; i < entries.size(); ++i)
    if (entries[i].first == entries[i - 1].first)
      throw DuplicateCrease("two creases coincide at " +
                            std::to_string(entries[i].first.mdeg) + " mdeg");

  if (entries.size() < 3)
    throw TooFewCreases("a single-vertex pattern needs at least 3 creases, got " +
                        std::to_string(entries.size()));

  size_t labeled = 0;
  for (const auto& e : entries) labeled += e.second.has_value();
  if (labeled != 0 && labeled != entries.size())
    throw PartialAssignment("either all or none of the creases may carry MV labels");

  std::vector<Direction> dirs;
  dirs.reserve(entries.size());
  for (const auto& e : entries) dirs.push_back(e.first);

  std::optional<MVAssignment> mu;
  if (labeled == entries.size()) {
    MVAssignment a;
    a.labels.reserve(entries.size());
    for (const auto& e : entries) a.labels.push_back(*e.second);
    mu = std::move(a);
  }
  return NormalizedPattern{CreasePattern(std::move(dirs)), std::move(mu)};
}

}  // namespace origami
