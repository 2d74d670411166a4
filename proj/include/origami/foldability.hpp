#pragma once

#include <array>
#include <optional>
#include <span>

#include "origami/core.hpp"

// Rigid-foldability decisions for assigned and unassigned single-vertex
// patterns.  The certificate of foldability is a bird's foot: a same-parity
// tripod or cross plus at least one crease of the opposite parity.
//
// The fast boolean path scans cyclic gaps (a parity class admits a tripod or
// cross exactly when it does not fit in a closed semicircle); the exhaustive
// triple/antipodal-pair scan is kept as an independent oracle.

namespace origami {

enum class WitnessKind : std::uint8_t { Tripod, Cross };

struct BirdsFootWitness {
  WitnessKind kind = WitnessKind::Tripod;
  Parity parity = Parity::M;   // parity carried by the legs
  std::vector<int> legs;       // 3 (tripod) or 4 (cross) crease indices, ccw
  int opposite = -1;           // index of one opposite-parity crease
};

struct PopCapability {
  bool can_pop_up = false;    // an M tripod or cross exists
  bool can_pop_down = false;  // a V tripod or cross exists
};

struct UnassignedVerdict {
  bool foldable = false;
  std::optional<MVAssignment> witness;
};

// Lexicographically smallest index triple of `parity` creases whose three
// cyclic ccw gaps are each strictly below a half turn.
std::optional<std::array<int, 3>> find_tripod(const CreasePattern& p,
                                              const MVAssignment& mu,
                                              Parity parity);

// Smallest index quadruple of `parity` creases forming two exact antipodal
// pairs.
std::optional<std::array<int, 4>> find_cross(const CreasePattern& p,
                                             const MVAssignment& mu,
                                             Parity parity);

// Start angle of a closed semicircle containing every direction, if one
// exists; equivalently the maximum cyclic gap is at least a half turn.
std::optional<Direction> in_closed_semicircle(std::span<const Direction> dirs);

// Bird's foot with legs of the given parity, if one exists.
std::optional<BirdsFootWitness> find_birds_foot(const CreasePattern& p,
                                                const MVAssignment& mu,
                                                Parity legs_parity);

// Any bird's foot; M-legged witnesses are preferred for determinism.
std::optional<BirdsFootWitness> has_birds_foot(const CreasePattern& p,
                                               const MVAssignment& mu);

bool is_rigidly_foldable_assigned(const CreasePattern& p,
                                  const MVAssignment& mu);

// Decision for a pattern without MV labels, with a constructive witness
// assignment when foldable.
UnassignedVerdict is_rigidly_foldable_unassigned(const CreasePattern& p);

// Same contract as is_rigidly_foldable_assigned, implemented by exhaustive
// O(n^3) triple scan and O(n^2) antipodal-pair scan with no fast path.
bool brute_force_foldable(const CreasePattern& p, const MVAssignment& mu);

PopCapability pop_capability(const CreasePattern& p, const MVAssignment& mu);

}  // namespace origami
