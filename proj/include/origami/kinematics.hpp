#pragma once

#include <Eigen/Core>

#include <span>
#include <vector>

#include "origami/core.hpp"
#include "origami/foldability.hpp"

// Explicit rigid folded states and flat-to-folded trajectories, verified by
// spherical-linkage loop closure.
//
// Cut the vertex with a small sphere: the folded paper traces a closed
// spherical polygon whose arc lengths are the sector angles and whose vertex
// angles are supplements of the fold angles.  With sectors beta_i and fold
// angles rho_i, closure reads
//
//     rx(rho_1) rz(beta_1) rx(rho_2) rz(beta_2) ... rx(rho_n) rz(beta_n) = I
//
// where rz rotates about the paper normal and rx about the crease currently
// aligned with the x axis.  Valleys fold positive, mountains negative, and
// |rho| stays strictly below pi (flat-folded creases are out of scope).
//
// Fold states are produced constructively: fold the 4- or 5-crease bird's
// foot core by placing its spherical triangle (or symmetric quadrilateral)
// explicitly, then grow the remaining creases one at a time as small tents
// or troughs, refining with a damped least-squares pass after each step.

namespace origami {

struct KinematicsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateGeometry : KinematicsError {
  using KinematicsError::KinematicsError;
};
struct CreaseCollision : KinematicsError {
  using KinematicsError::KinematicsError;
};
struct RefinementFailed : KinematicsError {
  using KinematicsError::KinematicsError;
};
struct SolverDiverged : KinematicsError {
  using KinematicsError::KinematicsError;
};
struct SignViolation : KinematicsError {
  using KinematicsError::KinematicsError;
};
struct SubdivisionLimit : KinematicsError {
  using KinematicsError::KinematicsError;
};

struct KinematicsConfig {
  double residual_tol = 1e-9;   // closure residual accepted as "solved"
  double sign_floor = 1e-3;     // |rho| below this does not count as folded
  double max_fold_margin = 1e-6;  // keep |rho| <= pi - margin
  int max_iterations = 200;

  double depth_delta = 0.1;     // base-arc shortening factor per unit depth
  double shrink_fraction = 0.01;  // arc shrink when inserting a crease
  double tent_min_fold = 0.01;  // inserted creases fold at least this much
  double perturbation_bound = 0.3;  // prior-angle drift allowed per insertion

  double continuity_bound = 0.2;  // max |drho| between trajectory steps
  int max_substeps = 1 << 10;
};

struct FoldState {
  CreasePattern pattern;
  std::vector<double> fold_angles;              // rho_i, radians
  std::vector<Eigen::Vector3d> crease_vectors;  // derived from fold_angles
  double residual = 0.0;
};

struct Trajectory {
  std::vector<double> t;  // homotopy parameter in [0, 1], one per state
  std::vector<FoldState> states;
};

enum class PopVerdict { OneSide, Mixed };

// Product of the fold/sector rotation chain; identity iff the linkage closes.
Eigen::Matrix3d closure_matrix(const CreasePattern& p,
                               std::span<const double> rho);

// Frobenius distance of the closure product from the identity.
double closure_residual(const CreasePattern& p, std::span<const double> rho);

// Folded 3D crease directions: crease i is moved by the rotations of all
// preceding creases (crease 0 stays in the plane).
std::vector<Eigen::Vector3d> crease_vectors(const CreasePattern& p,
                                            std::span<const double> rho);

// Analytic gradient of the squared closure residual with respect to rho;
// shared with the damped least-squares refinement.
std::vector<double> squared_residual_gradient(const CreasePattern& p,
                                              std::span<const double> rho);

// Assembles a FoldState (vectors and residual recomputed from the angles).
FoldState make_fold_state(CreasePattern p, std::vector<double> rho);

// Folds the 4- or 5-crease core of a bird's foot.  `witness` indexes into
// `core`.  target_depth in (0,1) controls how far from flat the base arc is
// drawn; throws DegenerateGeometry when the spherical triangles do not close
// at that depth (retry with a smaller depth).
FoldState fold_core_birds_foot(const CreasePattern& core,
                               const BirdsFootWitness& witness,
                               double target_depth,
                               const KinematicsConfig& cfg = {});

// Lemma-style crease insertion: shrink the enclosing folded arc slightly and
// replace it by a tent (M) or trough (V) through the new direction, then
// refine.  Prior creases keep their signs.
FoldState insert_crease(const FoldState& state, Direction new_direction,
                        Parity parity, const KinematicsConfig& cfg = {});

// Damped least-squares iteration on the closure residual, with every rho_i
// clamped to the open half-interval dictated by mu.
FoldState refine_fold_state(const CreasePattern& p, const MVAssignment& mu,
                            std::span<const double> initial,
                            const KinematicsConfig& cfg = {});

// Full pipeline: bird's-foot core, insert remaining creases in ccw order,
// final refinement.  All signs match mu, residual <= tol, and every crease
// is genuinely folded (|rho| >= sign_floor).
FoldState build_fold_state(const CreasePattern& p, const MVAssignment& mu,
                           double target_depth = 0.5,
                           const KinematicsConfig& cfg = {});

// Same, driven by a caller-chosen witness (indexes into `p`).
FoldState build_fold_state(const CreasePattern& p, const MVAssignment& mu,
                           const BirdsFootWitness& witness,
                           double target_depth = 0.5,
                           const KinematicsConfig& cfg = {});

// Homotopy in target depth from flat to the target state.  Consecutive
// states differ by at most continuity_bound per fold angle; intervals are
// subdivided adaptively, so the result has at least `steps` states.
Trajectory folding_trajectory(const CreasePattern& p, const MVAssignment& mu,
                              int steps, double target_depth = 0.5,
                              const KinematicsConfig& cfg = {});

// OneSide iff some open half-space contains every crease vector
// (equivalently the origin lies outside their convex hull).
PopVerdict verify_pop(const FoldState& state);

}  // namespace origami
