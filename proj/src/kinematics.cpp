#include "origami/kinematics.hpp"

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace origami {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTinyAngle = 1e-12;  // open-interval clamp for signed angles
constexpr double kPopTol = 1e-9;

using Eigen::Matrix3d;
using Eigen::Vector3d;

double mdeg_to_rad(int mdeg) {
  return static_cast<double>(mdeg) * (kPi / kHalfTurnMdeg);
}

std::vector<double> sectors_rad(const CreasePattern& p) {
  std::vector<double> out;
  const std::vector<int> sectors = p.sector_angles();
  out.reserve(sectors.size());
  for (int s : sectors) out.push_back(mdeg_to_rad(s));
  return out;
}

Matrix3d rot_x(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Matrix3d m;
  m << 1, 0, 0, 0, c, -s, 0, s, c;
  return m;
}

Matrix3d rot_z(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Matrix3d m;
  m << c, -s, 0, s, c, 0, 0, 0, 1;
  return m;
}

const Matrix3d kGenX = [] {
  Matrix3d m;
  m << 0, 0, 0, 0, 0, -1, 0, 1, 0;
  return m;
}();

void check_sizes(const CreasePattern& p, size_t rho_size) {
  if (static_cast<size_t>(p.degree()) != rho_size)
    throw PatternError("fold-angle count " + std::to_string(rho_size) +
                       " does not match pattern degree " +
                       std::to_string(p.degree()));
}

// Closure product and its derivative columns d(product)/d(rho_i).
struct ClosureChain {
  Matrix3d product;
  Eigen::Matrix<double, 9, Eigen::Dynamic> jacobian;
};

ClosureChain closure_chain(const CreasePattern& p, std::span<const double> rho,
                           bool with_jacobian) {
  const int n = p.degree();
  const std::vector<double> beta = sectors_rad(p);

  std::vector<Matrix3d> factor(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    factor[static_cast<size_t>(i)] =
        rot_x(rho[static_cast<size_t>(i)]) * rot_z(beta[static_cast<size_t>(i)]);

  ClosureChain chain;
  if (!with_jacobian) {
    Matrix3d prod = Matrix3d::Identity();
    for (int i = 0; i < n; ++i) prod = prod * factor[static_cast<size_t>(i)];
    chain.product = prod;
    return chain;
  }

  std::vector<Matrix3d> prefix(static_cast<size_t>(n) + 1);
  std::vector<Matrix3d> suffix(static_cast<size_t>(n) + 1);
  prefix[0] = Matrix3d::Identity();
  for (int i = 0; i < n; ++i)
    prefix[static_cast<size_t>(i) + 1] =
        prefix[static_cast<size_t>(i)] * factor[static_cast<size_t>(i)];
  suffix[static_cast<size_t>(n)] = Matrix3d::Identity();
  for (int i = n - 1; i >= 0; --i)
    suffix[static_cast<size_t>(i)] =
        factor[static_cast<size_t>(i)] * suffix[static_cast<size_t>(i) + 1];

  chain.product = prefix[static_cast<size_t>(n)];
  chain.jacobian.resize(9, n);
  for (int i = 0; i < n; ++i) {
    const Matrix3d d = prefix[static_cast<size_t>(i)] *
                       (kGenX * factor[static_cast<size_t>(i)]) *
                       suffix[static_cast<size_t>(i) + 1];
    chain.jacobian.col(i) = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(d.data());
  }
  return chain;
}

double residual_of(const Matrix3d& product) {
  return (product - Matrix3d::Identity()).norm();
}

// Signed dihedral at `cur` between the panels (prev, cur) and (cur, next);
// positive is a valley under the closure convention above.
double dihedral(const Vector3d& prev, const Vector3d& cur,
                const Vector3d& next) {
  const Vector3d n1 = prev.cross(cur).normalized();
  const Vector3d n2 = cur.cross(next).normalized();
  return std::atan2(n1.cross(n2).dot(cur), n1.dot(n2));
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

// Point on the unit sphere at arc distance rA from A and rB from B, on the
// z > 0 side; empty when the spherical triangle inequality fails.
std::optional<Vector3d> sphere_intersection_north(const Vector3d& A,
                                                  const Vector3d& B, double rA,
                                                  double rB) {
  const double c = A.dot(B);
  const double det = 1.0 - c * c;
  if (det < 1e-18) return std::nullopt;
  const double alpha = (std::cos(rA) - c * std::cos(rB)) / det;
  const double beta = (std::cos(rB) - c * std::cos(rA)) / det;
  const Vector3d q = alpha * A + beta * B;
  const double disc = 1.0 - q.squaredNorm();
  if (disc <= 1e-18) return std::nullopt;
  const Vector3d N = A.cross(B);
  Vector3d out = q + std::sqrt(disc / N.squaredNorm()) * N;
  if (out.z() < 0.0) out = q - std::sqrt(disc / N.squaredNorm()) * N;
  return out;
}

std::vector<double> clamp_to_assignment(std::span<const double> rho,
                                        const MVAssignment& mu,
                                        const KinematicsConfig& cfg) {
  std::vector<double> out(rho.begin(), rho.end());
  const double hi = kPi - cfg.max_fold_margin;
  for (size_t i = 0; i < out.size(); ++i) {
    if (mu[static_cast<int>(i)] == Parity::V)
      out[i] = std::clamp(out[i], kTinyAngle, hi);
    else
      out[i] = std::clamp(out[i], -hi, -kTinyAngle);
  }
  return out;
}

MVAssignment assignment_from_signs(std::span<const double> rho) {
  MVAssignment mu;
  mu.labels.reserve(rho.size());
  for (double r : rho)
    mu.labels.push_back(r > 0 ? Parity::V : Parity::M);
  return mu;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0;
  for (size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

Eigen::Matrix3d closure_matrix(const CreasePattern& p,
                               std::span<const double> rho) {
  check_sizes(p, rho.size());
  return closure_chain(p, rho, false).product;
}

double closure_residual(const CreasePattern& p, std::span<const double> rho) {
  return residual_of(closure_matrix(p, rho));
}

std::vector<Eigen::Vector3d> crease_vectors(const CreasePattern& p,
                                            std::span<const double> rho) {
  check_sizes(p, rho.size());
  const int n = p.degree();
  std::vector<Vector3d> flat(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double theta = mdeg_to_rad(p.crease(i).mdeg);
    flat[static_cast<size_t>(i)] = Vector3d(std::cos(theta), std::sin(theta), 0);
  }
  std::vector<Vector3d> out(static_cast<size_t>(n));
  Matrix3d carry = Matrix3d::Identity();
  out[0] = flat[0];
  for (int i = 1; i < n; ++i) {
    carry = carry * Eigen::AngleAxisd(rho[static_cast<size_t>(i) - 1],
                                      flat[static_cast<size_t>(i) - 1])
                        .toRotationMatrix();
    out[static_cast<size_t>(i)] = carry * flat[static_cast<size_t>(i)];
  }
  return out;
}

std::vector<double> squared_residual_gradient(const CreasePattern& p,
                                              std::span<const double> rho) {
  check_sizes(p, rho.size());
  const ClosureChain chain = closure_chain(p, rho, true);
  const Matrix3d diff = chain.product - Matrix3d::Identity();
  const Eigen::Map<const Eigen::Matrix<double, 9, 1>> r(diff.data());
  std::vector<double> grad(static_cast<size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i)
    grad[static_cast<size_t>(i)] = 2.0 * chain.jacobian.col(i).dot(r);
  return grad;
}

FoldState make_fold_state(CreasePattern p, std::vector<double> rho) {
  check_sizes(p, rho.size());
  FoldState state{std::move(p), std::move(rho), {}, 0.0};
  state.crease_vectors = crease_vectors(state.pattern, state.fold_angles);
  state.residual = closure_residual(state.pattern, state.fold_angles);
  return state;
}

FoldState refine_fold_state(const CreasePattern& p, const MVAssignment& mu,
                            std::span<const double> initial,
                            const KinematicsConfig& cfg) {
  check_sizes(p, initial.size());
  if (p.degree() != mu.size())
    throw PatternError("assignment length does not match pattern degree");
  if (!is_rigidly_foldable_assigned(p, mu))
    throw NotFoldable("assignment fails the bird's-foot criterion");

  const int n = p.degree();
  std::vector<double> rho = clamp_to_assignment(initial, mu, cfg);

  auto squared_residual = [&](const std::vector<double>& x) {
    const Matrix3d m = closure_chain(p, x, false).product;
    return (m - Matrix3d::Identity()).squaredNorm();
  };

  double f = squared_residual(rho);
  const double tol2 = cfg.residual_tol * cfg.residual_tol;
  double lambda = 1e-6;

  for (int iter = 0; iter < cfg.max_iterations && f > tol2; ++iter) {
    const ClosureChain chain = closure_chain(p, rho, true);
    const Matrix3d diff = chain.product - Matrix3d::Identity();
    const Eigen::Map<const Eigen::Matrix<double, 9, 1>> r(diff.data());
    const Eigen::MatrixXd jt = chain.jacobian.transpose();
    const Eigen::MatrixXd jtj = jt * chain.jacobian;
    const Eigen::VectorXd g = jt * r;

    bool improved = false;
    for (int damp = 0; damp < 40 && !improved; ++damp) {
      Eigen::MatrixXd a = jtj;
      a.diagonal().array() += lambda;
      const Eigen::VectorXd delta = a.ldlt().solve(-g);
      std::vector<double> cand(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        cand[static_cast<size_t>(i)] = rho[static_cast<size_t>(i)] + delta(i);
      cand = clamp_to_assignment(cand, mu, cfg);
      const double fc = squared_residual(cand);
      if (fc < f) {
        rho = std::move(cand);
        f = fc;
        lambda = std::max(lambda / 3.0, 1e-14);
        improved = true;
      } else {
        lambda *= 4.0;
        if (lambda > 1e14) break;
      }
    }
    if (!improved) break;
  }

  if (f <= tol2) return make_fold_state(p, std::move(rho));

  const double hi = kPi - cfg.max_fold_margin;
  bool at_clamp = false;
  for (double r : rho)
    at_clamp |= std::abs(r) <= 2 * kTinyAngle || std::abs(r) >= hi - 1e-12;
  if (at_clamp)
    throw SignViolation("no sign-respecting closure found from this seed");
  throw SolverDiverged("closure refinement did not reach tolerance (residual " +
                       std::to_string(std::sqrt(f)) + ")");
}

FoldState fold_core_birds_foot(const CreasePattern& core,
                               const BirdsFootWitness& witness,
                               double target_depth,
                               const KinematicsConfig& cfg) {
  if (!(target_depth > 0.0 && target_depth < 1.0))
    throw PatternError("target_depth must lie in (0, 1)");
  const int legs = static_cast<int>(witness.legs.size());
  if ((witness.kind == WitnessKind::Tripod && legs != 3) ||
      (witness.kind == WitnessKind::Cross && legs != 4))
    throw PatternError("witness leg count does not match its kind");
  if (core.degree() != legs + 1)
    throw PatternError("core pattern must consist of the witness creases only");

  auto dir = [&](int idx) { return core.crease(idx); };

  // Rotate leg labels so the opposite-parity crease sits between the last
  // and first leg of the chain.
  int gap = -1;
  for (int j = 0; j < legs; ++j) {
    const Direction s = dir(witness.legs[static_cast<size_t>(j)]);
    const Direction e = dir(witness.legs[static_cast<size_t>((j + 1) % legs)]);
    const int off = ccw_angle(s, dir(witness.opposite));
    if (off > 0 && off < ccw_angle(s, e)) {
      gap = j;
      break;
    }
  }
  if (gap < 0)
    throw PatternError("opposite crease does not lie between two legs");

  std::vector<int> chain;  // ccw: c1, (apex creases...), c3, opposite
  for (int j = 1; j <= legs; ++j)
    chain.push_back(witness.legs[static_cast<size_t>((gap + j) % legs)]);
  chain.push_back(witness.opposite);
  const int k = core.degree();

  std::vector<double> arc(static_cast<size_t>(k));  // chain[i] -> chain[i+1]
  for (int i = 0; i < k; ++i)
    arc[static_cast<size_t>(i)] = mdeg_to_rad(
        ccw_angle(dir(chain[static_cast<size_t>(i)]),
                  dir(chain[static_cast<size_t>((i + 1) % k)])));

  const double base_sum = arc[static_cast<size_t>(k) - 2] + arc[static_cast<size_t>(k) - 1];
  double apex_sum = 0;
  for (int i = 0; i + 2 < k; ++i) apex_sum += arc[static_cast<size_t>(i)];
  const double d =
      (1.0 - target_depth * cfg.depth_delta) * std::min({apex_sum, base_sum, kPi});

  // Base creases c1 and c3 sit symmetrically about the x axis; everything
  // else is placed on the northern side.
  std::vector<Vector3d> pos(static_cast<size_t>(k));
  auto at = [&](int chain_pos) -> Vector3d& {
    return pos[static_cast<size_t>(chain[static_cast<size_t>(chain_pos)])];
  };
  const Vector3d c1(std::cos(d / 2), std::sin(d / 2), 0);
  const Vector3d c3(std::cos(d / 2), -std::sin(d / 2), 0);
  at(0) = c1;
  at(k - 2) = c3;

  const auto opp_pos = sphere_intersection_north(
      c1, c3, arc[static_cast<size_t>(k) - 1], arc[static_cast<size_t>(k) - 2]);
  if (!opp_pos)
    throw DegenerateGeometry("opposite-crease triangle fails to close at this depth");
  at(k - 1) = *opp_pos;

  if (witness.kind == WitnessKind::Tripod) {
    const auto apex =
        sphere_intersection_north(c1, c3, arc[0], arc[1]);
    if (!apex)
      throw DegenerateGeometry("tripod triangle fails to close at this depth");
    at(1) = *apex;
  } else {
    const double gamma = arc[0];
    const double b = std::cos(gamma / 2);
    const double ax =
        (std::cos(gamma) - std::sin(d / 2) * std::cos(gamma / 2)) /
        std::cos(d / 2);
    const double csq = 1.0 - ax * ax - b * b;
    if (csq <= 1e-18)
      throw DegenerateGeometry("cross quadrilateral fails to close at this depth");
    at(1) = Vector3d(ax, b, std::sqrt(csq));
    at(2) = Vector3d(ax, -b, std::sqrt(csq));
  }

  std::vector<double> rho(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    rho[static_cast<size_t>(i)] =
        dihedral(pos[static_cast<size_t>((i + k - 1) % k)],
                 pos[static_cast<size_t>(i)],
                 pos[static_cast<size_t>((i + 1) % k)]);

  // The placement fixes geometry but not handedness; mirror so the legs
  // carry the witness parity.
  const double want = witness.parity == Parity::V ? 1.0 : -1.0;
  const int probe = witness.legs.front();
  if (rho[static_cast<size_t>(probe)] * want < 0)
    for (double& r : rho) r = -r;

  const double hi = kPi - cfg.max_fold_margin;
  for (int leg : witness.legs) {
    const double r = rho[static_cast<size_t>(leg)];
    if (!(r * want > 0) || std::abs(r) >= hi)
      throw DegenerateGeometry("leg fold angle leaves its sign range at this depth");
  }
  const double ro = rho[static_cast<size_t>(witness.opposite)];
  if (!(ro * want < 0) || std::abs(ro) >= hi)
    throw DegenerateGeometry("opposite fold angle leaves its sign range at this depth");

  FoldState state = make_fold_state(core, std::move(rho));
  if (state.residual > cfg.residual_tol)
    throw DegenerateGeometry("constructed core state does not close");
  return state;
}

FoldState insert_crease(const FoldState& state, Direction new_direction,
                        Parity parity, const KinematicsConfig& cfg) {
  const CreasePattern& pat = state.pattern;
  const int k = pat.degree();
  check_sizes(pat, state.fold_angles.size());
  if (pat.index_of(new_direction))
    throw CreaseCollision("crease already exists at " +
                          std::to_string(new_direction.mdeg) + " mdeg");
  if (state.residual > cfg.residual_tol)
    throw RefinementFailed("insertion requires a closed state");
  for (double r : state.fold_angles)
    if (r == 0.0) throw RefinementFailed("insertion requires a folded state");

  // Enclosing arc.
  int insert_at = 0;
  while (insert_at < k && pat.crease(insert_at) < new_direction) ++insert_at;
  const int prev = (insert_at + k - 1) % k;
  const int next = insert_at % k;
  const double a = mdeg_to_rad(ccw_angle(pat.crease(prev), new_direction));
  const double b = mdeg_to_rad(ccw_angle(new_direction, pat.crease(next)));
  const double s = a + b;

  std::vector<Direction> dirs = pat.creases();
  dirs.insert(dirs.begin() + insert_at, new_direction);
  CreasePattern grown(std::move(dirs));

  MVAssignment mu = assignment_from_signs(state.fold_angles);
  mu.labels.insert(mu.labels.begin() + insert_at, parity);

  const double sign = parity == Parity::V ? 1.0 : -1.0;
  std::optional<FoldState> fallback;
  double fallback_drift = 0;

  for (int attempt = 0; attempt < 6; ++attempt) {
    const double eps = s * cfg.shrink_fraction * static_cast<double>(1 << attempt);
    const double shrunk = s - eps;
    if (shrunk <= std::abs(a - b) + 1e-9) break;

    // Tent through the new direction over the shrunk base.
    const double apex = std::acos(clamp_unit(
        (std::cos(shrunk) - std::cos(a) * std::cos(b)) /
        (std::sin(a) * std::sin(b))));
    const double rho_new = sign * (kPi - apex);
    if (std::abs(rho_new) < cfg.tent_min_fold) continue;

    const double base_prev = std::acos(clamp_unit(
        (std::cos(b) - std::cos(a) * std::cos(shrunk)) /
        (std::sin(a) * std::sin(shrunk))));
    const double base_next = std::acos(clamp_unit(
        (std::cos(a) - std::cos(b) * std::cos(shrunk)) /
        (std::sin(b) * std::sin(shrunk))));

    for (const double tweak : {0.0, 1.0, -1.0}) {
      std::vector<double> seed = state.fold_angles;
      seed[static_cast<size_t>(prev)] += tweak * sign * base_prev;
      seed[static_cast<size_t>(next)] += tweak * sign * base_next;
      seed.insert(seed.begin() + insert_at, rho_new);

      std::optional<FoldState> refined;
      try {
        refined = refine_fold_state(grown, mu, seed, cfg);
      } catch (const KinematicsError&) {
        continue;
      }

      double drift = 0;
      for (int i = 0; i < k; ++i) {
        const int j = i < insert_at ? i : i + 1;
        drift = std::max(drift,
                         std::abs(refined->fold_angles[static_cast<size_t>(j)] -
                                  state.fold_angles[static_cast<size_t>(i)]));
      }
      if (drift <= cfg.perturbation_bound) return *refined;
      if (!fallback || drift < fallback_drift) {
        fallback = std::move(refined);
        fallback_drift = drift;
      }
    }
  }
  if (fallback) return *fallback;
  throw RefinementFailed("crease insertion did not converge at " +
                         std::to_string(new_direction.mdeg) + " mdeg");
}

namespace {

FoldState build_with_depth(const CreasePattern& p, const MVAssignment& mu,
                           const BirdsFootWitness& witness, double depth,
                           const KinematicsConfig& cfg) {
  // Core sub-pattern made of the witness creases; its sectors are the sums
  // of the full pattern's sectors between consecutive witness creases.
  std::vector<int> core_members = witness.legs;
  core_members.push_back(witness.opposite);
  std::sort(core_members.begin(), core_members.end());

  std::vector<Direction> core_dirs;
  core_dirs.reserve(core_members.size());
  for (int i : core_members) core_dirs.push_back(p.crease(i));
  CreasePattern core(core_dirs);

  BirdsFootWitness core_witness;
  core_witness.kind = witness.kind;
  core_witness.parity = witness.parity;
  for (int leg : witness.legs)
    core_witness.legs.push_back(*core.index_of(p.crease(leg)));
  core_witness.opposite = *core.index_of(p.crease(witness.opposite));

  FoldState state = fold_core_birds_foot(core, core_witness, depth, cfg);
  for (int i = 0; i < p.degree(); ++i) {
    if (std::find(core_members.begin(), core_members.end(), i) !=
        core_members.end())
      continue;
    state = insert_crease(state, p.crease(i), mu[i], cfg);
  }
  FoldState final_state = refine_fold_state(p, mu, state.fold_angles, cfg);

  const double hi = kPi - cfg.max_fold_margin;
  for (double r : final_state.fold_angles)
    if (std::abs(r) < cfg.sign_floor || std::abs(r) >= hi)
      throw RefinementFailed("fold angle outside [sign_floor, pi) after refinement");
  return final_state;
}

}  // namespace

FoldState build_fold_state(const CreasePattern& p, const MVAssignment& mu,
                           const BirdsFootWitness& witness, double target_depth,
                           const KinematicsConfig& cfg) {
  if (p.degree() != mu.size())
    throw PatternError("assignment length does not match pattern degree");
  if (!(target_depth > 0.0 && target_depth < 1.0))
    throw PatternError("target_depth must lie in (0, 1)");

  // Shallower depths fix triangle-inequality failures, deeper ones fix
  // too-small fold angles; sweep both directions deterministically.
  static constexpr double kMults[] = {1.0,    0.75,   0.5,     1.5,
                                      0.25,   1.9,    0.125,   0.0625,
                                      0.03125, 0.015625, 0.0078125, 0.00390625,
                                      0.001953125, 0.0009765625};
  std::optional<std::string> first_error;
  for (double mult : kMults) {
    const double depth = target_depth * mult;
    if (depth <= 0.0 || depth >= 1.0) continue;
    try {
      return build_with_depth(p, mu, witness, depth, cfg);
    } catch (const KinematicsError& e) {
      if (!first_error) first_error = e.what();
    }
  }
  throw SolverDiverged("fold-state construction failed at every depth (first: " +
                       first_error.value_or("none") + ")");
}

FoldState build_fold_state(const CreasePattern& p, const MVAssignment& mu,
                           double target_depth, const KinematicsConfig& cfg) {
  const auto witness = has_birds_foot(p, mu);
  if (!witness)
    throw NotFoldable("assignment fails the bird's-foot criterion");
  return build_fold_state(p, mu, *witness, target_depth, cfg);
}

Trajectory folding_trajectory(const CreasePattern& p, const MVAssignment& mu,
                              int steps, double target_depth,
                              const KinematicsConfig& cfg) {
  if (steps < 2) throw PatternError("a trajectory needs at least 2 steps");
  if (!(target_depth > 0.0 && target_depth < 1.0))
    throw PatternError("target_depth must lie in (0, 1)");
  if (!is_rigidly_foldable_assigned(p, mu))
    throw NotFoldable("assignment fails the bird's-foot criterion");

  Trajectory traj;
  traj.states.push_back(
      make_fold_state(p, std::vector<double>(static_cast<size_t>(p.degree()), 0.0)));
  traj.t.push_back(0.0);

  int budget_log = 0;
  while ((1 << budget_log) < cfg.max_substeps) ++budget_log;

  // Each accepted state becomes the continuity reference for the next.
  auto extend = [&](auto&& self, double lo, double hi, int budget) -> void {
    FoldState state = build_fold_state(p, mu, target_depth * hi, cfg);
    if (max_abs_diff(traj.states.back().fold_angles, state.fold_angles) <=
        cfg.continuity_bound) {
      traj.states.push_back(std::move(state));
      traj.t.push_back(hi);
      return;
    }
    if (budget <= 0)
      throw SubdivisionLimit("continuity bound unreachable within substep limit");
    const double mid = 0.5 * (lo + hi);
    self(self, lo, mid, budget - 1);
    self(self, mid, hi, budget - 1);
  };

  for (int j = 1; j < steps; ++j) {
    const double lo = static_cast<double>(j - 1) / (steps - 1);
    const double hi = static_cast<double>(j) / (steps - 1);
    extend(extend, lo, hi, budget_log);
  }
  return traj;
}

namespace {

double dist2_segment(const Vector3d& a, const Vector3d& b) {
  const Vector3d d = b - a;
  const double dd = d.squaredNorm();
  if (dd < 1e-30) return a.squaredNorm();
  const double t = std::clamp(-a.dot(d) / dd, 0.0, 1.0);
  return (a + t * d).squaredNorm();
}

// Squared distance from the origin to a triangle (Ericson's closest-point
// construction specialized to p = 0).
double dist2_triangle(const Vector3d& a, const Vector3d& b, const Vector3d& c) {
  const Vector3d ab = b - a, ac = c - a;
  if (ab.cross(ac).squaredNorm() < 1e-24)
    return std::min({dist2_segment(a, b), dist2_segment(b, c),
                     dist2_segment(a, c)});
  const Vector3d ap = -a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0 && d2 <= 0) return a.squaredNorm();
  const Vector3d bp = -b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0 && d4 <= d3) return b.squaredNorm();
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) {
    const double v = d1 / (d1 - d3);
    return (a + v * ab).squaredNorm();
  }
  const Vector3d cp = -c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0 && d5 <= d6) return c.squaredNorm();
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) {
    const double w = d2 / (d2 - d6);
    return (a + w * ac).squaredNorm();
  }
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0 && d4 - d3 >= 0 && d5 - d6 >= 0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return (b + w * (c - b)).squaredNorm();
  }
  const double denom = 1.0 / (va + vb + vc);
  const double v = vb * denom, w = vc * denom;
  return (a + ab * v + ac * w).squaredNorm();
}

bool origin_in_tetrahedron(const Vector3d& a, const Vector3d& b,
                           const Vector3d& c, const Vector3d& d) {
  Matrix3d m;
  m.col(0) = b - a;
  m.col(1) = c - a;
  m.col(2) = d - a;
  if (std::abs(m.determinant()) < 1e-18) return false;
  const Vector3d bary = m.partialPivLu().solve(Vector3d(-a));
  return bary.x() >= -1e-12 && bary.y() >= -1e-12 && bary.z() >= -1e-12 &&
         bary.sum() <= 1.0 + 1e-12;
}

}  // namespace

PopVerdict verify_pop(const FoldState& state) {
  const auto& v = state.crease_vectors;
  const int n = static_cast<int>(v.size());
  // Distance from the origin to the convex hull of the crease vectors; by
  // Caratheodory the minimizer lives on a subset of at most four points.
  double best = std::numeric_limits<double>::max();
  for (int i = 0; i < n; ++i) best = std::min(best, v[static_cast<size_t>(i)].squaredNorm());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      best = std::min(best, dist2_segment(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        best = std::min(best, dist2_triangle(v[static_cast<size_t>(i)],
                                             v[static_cast<size_t>(j)],
                                             v[static_cast<size_t>(k)]));
  if (best > kPopTol * kPopTol)
    for (int i = 0; i < n && best > 0; ++i)
      for (int j = i + 1; j < n && best > 0; ++j)
        for (int k = j + 1; k < n && best > 0; ++k)
          for (int l = k + 1; l < n && best > 0; ++l)
            if (origin_in_tetrahedron(v[static_cast<size_t>(i)], v[static_cast<size_t>(j)],
                                      v[static_cast<size_t>(k)], v[static_cast<size_t>(l)]))
              best = 0;
  return best > kPopTol * kPopTol ? PopVerdict::OneSide : PopVerdict::Mixed;
}

}  // namespace origami
