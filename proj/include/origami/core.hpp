#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Exact angular arithmetic and the crease-pattern data model.
//
// All angles around the vertex are integer milli-degrees in [0, 360000).
// Collinearity and antipodality tests must be exact, so nothing in this
// module touches floating point; conversion to radians happens at the
// kinematics boundary only.

namespace origami {

inline constexpr int kFullTurnMdeg = 360'000;
inline constexpr int kHalfTurnMdeg = 180'000;

enum class Parity : std::uint8_t { M, V };

constexpr Parity opposite(Parity p) {
  return p == Parity::M ? Parity::V : Parity::M;
}

constexpr char to_char(Parity p) { return p == Parity::M ? 'M' : 'V'; }

std::optional<Parity> parity_from_char(char c);

// A crease direction, reduced mod a full turn.
struct Direction {
  int mdeg = 0;

  friend constexpr auto operator<=>(Direction, Direction) = default;
};

// Reduces an arbitrary integer angle into [0, kFullTurnMdeg).
Direction reduce_mdeg(long long angle_mdeg);

// Oriented counterclockwise angle from `from` to `to`, in [0, kFullTurnMdeg).
int ccw_angle(Direction from, Direction to);

Direction antipode(Direction d);

struct PatternError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DuplicateCrease : PatternError {
  using PatternError::PatternError;
};
struct TooFewCreases : PatternError {
  using PatternError::PatternError;
};
struct PartialAssignment : PatternError {
  using PatternError::PatternError;
};
struct NotFoldable : PatternError {
  using PatternError::PatternError;
};

// Strictly increasing crease directions around a single interior vertex.
// A vertex needs more than two creases to be of any interest here.
class CreasePattern {
 public:
  explicit CreasePattern(std::vector<Direction> sorted_creases);

  static CreasePattern from_mdeg(std::span<const int> angles_mdeg);

  int degree() const { return static_cast<int>(creases_.size()); }
  Direction crease(int i) const { return creases_[static_cast<size_t>(i)]; }
  const std::vector<Direction>& creases() const { return creases_; }

  // Cyclic gaps between consecutive creases; positive, sum exactly one turn.
  std::vector<int> sector_angles() const;

  std::optional<int> index_of(Direction d) const;

  friend bool operator==(const CreasePattern&, const CreasePattern&) = default;

 private:
  std::vector<Direction> creases_;
};

using SectorAngles = std::vector<int>;

struct MVAssignment {
  std::vector<Parity> labels;

  int size() const { return static_cast<int>(labels.size()); }
  Parity operator[](int i) const { return labels[static_cast<size_t>(i)]; }

  MVAssignment flipped() const;
  std::string to_string() const;
  static MVAssignment from_string(std::string_view s);

  friend bool operator==(const MVAssignment&, const MVAssignment&) = default;
};

struct RawCrease {
  long long angle_mdeg = 0;
  std::optional<Parity> mv;
};

struct NormalizedPattern {
  CreasePattern pattern;
  std::optional<MVAssignment> assignment;
};

// Reduces, sorts and validates raw crease records, carrying MV labels along.
// The assignment is returned only when every crease was labeled.
NormalizedPattern normalize_pattern(std::span<const RawCrease> raw);

}  // namespace origami
