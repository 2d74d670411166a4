// Batch front end: parse single-vertex crease patterns, decide rigid
// foldability, compute minimal forcing sets, export fold trajectories, and
// run the self-test oracle suites.
//
// Exit codes: 0 success, 1 invalid input, 2 not foldable, 3 solver failure,
// 4 selftest failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "origami/foldability.hpp"
#include "origami/forcing.hpp"
#include "origami/kinematics.hpp"
#include "origami/pattern_io.hpp"
#include "origami/sampling.hpp"

namespace {

using nlohmann::ordered_json;
using namespace origami;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitNotFoldable = 2;
constexpr int kExitSolverFailure = 3;
constexpr int kExitSelftestFailure = 4;

std::string mdeg_to_deg_string(int mdeg) {
  std::string whole = std::to_string(mdeg / 1000);
  int frac = mdeg % 1000;
  if (frac == 0) return whole;
  char buf[8];
  std::snprintf(buf, sizeof buf, "%03d", frac);
  std::string f(buf);
  while (f.back() == '0') f.pop_back();
  return whole + "." + f;
}

std::string join_mdeg(const std::vector<int>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += mdeg_to_deg_string(values[i]);
  }
  return out;
}

ordered_json witness_json(const BirdsFootWitness& w) {
  ordered_json j;
  j["kind"] = w.kind == WitnessKind::Tripod ? "tripod" : "cross";
  j["parity"] = std::string(1, to_char(w.parity));
  j["legs"] = w.legs;
  j["opposite"] = w.opposite;
  return j;
}

std::string witness_text(const CreasePattern& p, const BirdsFootWitness& w) {
  std::string out = std::string(1, to_char(w.parity));
  out += w.kind == WitnessKind::Tripod ? " tripod, legs " : " cross, legs ";
  for (size_t i = 0; i < w.legs.size(); ++i) {
    if (i) out += ' ';
    out += mdeg_to_deg_string(p.crease(w.legs[i]).mdeg);
  }
  out += ", opposite " + mdeg_to_deg_string(p.crease(w.opposite).mdeg);
  return out;
}

std::string unassigned_blocker(const CreasePattern& p) {
  if (p.degree() < 4) return "fewer than four creases";
  for (int s : p.sector_angles())
    if (s >= kHalfTurnMdeg) return "a sector angle of at least 180 degrees";
  return "unspecified cross";
}

int cmd_analyze(const std::string& file, bool json) {
  const NormalizedPattern input = parse_pattern_file(file);
  const CreasePattern& p = input.pattern;

  ordered_json doc;
  doc["degree"] = p.degree();
  std::vector<int> creases_mdeg;
  for (int i = 0; i < p.degree(); ++i) creases_mdeg.push_back(p.crease(i).mdeg);
  doc["creases_mdeg"] = creases_mdeg;
  doc["assignment"] =
      input.assignment ? ordered_json(input.assignment->to_string()) : ordered_json(nullptr);
  doc["sector_angles_mdeg"] = p.sector_angles();

  bool foldable = false;
  if (input.assignment) {
    const MVAssignment& mu = *input.assignment;
    const auto witness = has_birds_foot(p, mu);
    foldable = witness.has_value();
    doc["rigidly_foldable"] = foldable;
    doc["birds_foot"] = witness ? witness_json(*witness) : ordered_json(nullptr);
    const PopCapability pop = pop_capability(p, mu);
    doc["pop_capability"] = {{"can_pop_up", pop.can_pop_up},
                             {"can_pop_down", pop.can_pop_down}};
    if (json) {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "degree: " << p.degree() << "\n"
                << "creases: ";
      for (int i = 0; i < p.degree(); ++i)
        std::cout << (i ? ", " : "") << mdeg_to_deg_string(p.crease(i).mdeg)
                  << ' ' << to_char(mu[i]);
      std::cout << "\n"
                << "sector angles: " << join_mdeg(p.sector_angles()) << "\n"
                << "rigidly foldable: " << (foldable ? "yes" : "no") << "\n";
      if (witness)
        std::cout << "birds foot: " << witness_text(p, *witness) << "\n";
      std::cout << "pop capability: up=" << (pop.can_pop_up ? "yes" : "no")
                << " down=" << (pop.can_pop_down ? "yes" : "no") << "\n";
    }
  } else {
    const UnassignedVerdict verdict = is_rigidly_foldable_unassigned(p);
    foldable = verdict.foldable;
    doc["rigidly_foldable"] = foldable;
    if (verdict.witness)
      doc["witness_assignment"] = verdict.witness->to_string();
    else
      doc["blocker"] = unassigned_blocker(p);
    if (json) {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "degree: " << p.degree() << "\n"
                << "creases: " << join_mdeg(creases_mdeg) << "\n"
                << "sector angles: " << join_mdeg(p.sector_angles()) << "\n"
                << "rigidly foldable: " << (foldable ? "yes" : "no") << "\n";
      if (verdict.witness)
        std::cout << "witness assignment: " << verdict.witness->to_string()
                  << "\n";
      else
        std::cout << "blocker: " << unassigned_blocker(p) << "\n";
    }
  }
  return foldable ? kExitOk : kExitNotFoldable;
}

int cmd_forcing(const std::string& file, int max_n, bool json) {
  const NormalizedPattern input = parse_pattern_file(file);
  if (!input.assignment)
    throw ParseError("forcing needs an assigned pattern (no '?' labels)");
  const ForcingReport report =
      minimal_forcing_set(input.pattern, *input.assignment, max_n);

  if (json) {
    ordered_json doc;
    doc["degree"] = report.degree;
    doc["assignment"] = report.assignment.to_string();
    doc["foldable_count"] = report.foldable_count;
    doc["minimal_forcing_set"] = report.minimal_set;
    doc["size"] = report.size;
    doc["bounds"] = {{"lower", report.bounds.lower},
                     {"upper", report.bounds.upper}};
    doc["within_bounds"] = theorem2_check(report);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "degree: " << report.degree << "\n"
              << "assignment: " << report.assignment.to_string() << "\n"
              << "foldable assignments: " << report.foldable_count << "\n"
              << "minimal forcing set (indices):";
    for (int i : report.minimal_set) std::cout << ' ' << i;
    std::cout << "\nminimal forcing set (degrees):";
    for (int i : report.minimal_set)
      std::cout << ' ' << mdeg_to_deg_string(input.pattern.crease(i).mdeg);
    std::cout << "\nsize: " << report.size << "\n"
              << "theorem-2 bounds: [" << report.bounds.lower << ", "
              << report.bounds.upper << "]\n"
              << "within bounds: " << (theorem2_check(report) ? "yes" : "no")
              << "\n";
  }
  return kExitOk;
}

int cmd_fold(const std::string& file, int steps, double depth,
             const std::string& out_path) {
  const NormalizedPattern input = parse_pattern_file(file);
  if (!input.assignment)
    throw ParseError("fold needs an assigned pattern (no '?' labels)");
  const Trajectory traj =
      folding_trajectory(input.pattern, *input.assignment, steps, depth);
  const std::string csv = trajectory_to_csv(traj);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + out_path);
    out << csv;
  }
  return kExitOk;
}

int cmd_census(int degree, std::int64_t samples, std::uint64_t seed,
               bool json) {
  CensusParams params;
  params.degree = degree;
  params.samples = samples;
  params.seed = seed;
  const CensusResult result = forcing_census(params);

  bool within = true;
  const Theorem2Bounds bounds = theorem2_bounds(degree);
  for (auto [size, count] : result.size_counts)
    within &= bounds.lower <= size && size <= bounds.upper;

  if (json) {
    ordered_json doc;
    doc["degree"] = degree;
    doc["samples"] = samples;
    doc["seed"] = seed;
    doc["pairs"] = result.pair_count;
    ordered_json dist = ordered_json::object();
    for (auto [size, count] : result.size_counts)
      dist[std::to_string(size)] = count;
    doc["distribution"] = dist;
    doc["bounds"] = {{"lower", bounds.lower}, {"upper", bounds.upper}};
    doc["within_bounds"] = within;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "degree: " << degree << "\n"
              << "samples: " << samples << "\n"
              << "seed: " << seed << "\n"
              << "foldable pairs: " << result.pair_count << "\n"
              << "size count\n";
    for (auto [size, count] : result.size_counts)
      std::cout << size << " " << count << "\n";
    std::cout << "within theorem-2 bounds: " << (within ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

bool selftest_oracle_equivalence(int n_max, std::int64_t samples) {
  std::int64_t cases = 0;
  bool ok = true;
  for (int n = 4; n <= n_max && ok; ++n) {
    for (std::int64_t s = 0; s < samples && ok; ++s) {
      std::mt19937_64 rng(instance_seed(0x5E1F7E57ull + n, s));
      const CreasePattern p = random_pattern(n, rng);
      const std::int64_t total = std::int64_t{1} << n;
      for (std::int64_t mask = 0; mask < total; ++mask) {
        const MVAssignment mu =
            assignment_from_mask(n, static_cast<std::uint64_t>(mask));
        ++cases;
        if (is_rigidly_foldable_assigned(p, mu) != brute_force_foldable(p, mu)) {
          ok = false;
          break;
        }
      }
    }
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]")
            << " oracle-equivalence: fast detector vs exhaustive scan ("
            << cases << " cases)\n";
  return ok;
}

bool selftest_gap_scan(int n_max, std::int64_t samples) {
  std::int64_t cases = 0;
  bool ok = true;
  for (int n = 4; n <= n_max && ok; ++n) {
    for (std::int64_t s = 0; s < samples && ok; ++s) {
      std::mt19937_64 rng(instance_seed(0x6A9C0DE5ull + n, s));
      const CreasePattern p = random_pattern(n, rng);
      const std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
      const MVAssignment mu = assignment_from_mask(n, mask);
      for (Parity parity : {Parity::M, Parity::V}) {
        std::vector<Direction> dirs;
        for (int i = 0; i < n; ++i)
          if (mu[i] == parity) dirs.push_back(p.crease(i));
        if (dirs.empty()) continue;
        ++cases;
        const bool no_certificate = !find_tripod(p, mu, parity).has_value() &&
                                    !find_cross(p, mu, parity).has_value();
        if (no_certificate != in_closed_semicircle(dirs).has_value()) {
          ok = false;
          break;
        }
      }
    }
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]")
            << " gap-scan-equivalence: semicircle test vs witness search ("
            << cases << " classes)\n";
  return ok;
}

bool selftest_unassigned(int n_max, std::int64_t samples) {
  std::int64_t cases = 0;
  bool ok = true;
  for (int n = 3; n <= n_max && ok; ++n) {
    for (std::int64_t s = 0; s < samples && ok; ++s) {
      std::mt19937_64 rng(instance_seed(0x0DDBA11ull + n, s));
      const CreasePattern p = random_pattern(n, rng);
      const UnassignedVerdict verdict = is_rigidly_foldable_unassigned(p);
      const bool any = !enumerate_foldable_masks(p).empty();
      ++cases;
      ok = verdict.foldable == any &&
           (!verdict.foldable ||
            (verdict.witness &&
             is_rigidly_foldable_assigned(p, *verdict.witness)));
    }
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]")
            << " unassigned-consistency: verdict vs assignment enumeration ("
            << cases << " patterns)\n";
  return ok;
}

bool selftest_forcing_bounds(int n_max, std::int64_t samples) {
  bool ok = true;
  std::int64_t pairs = 0;
  for (int n = 4; n <= std::min(n_max, 8) && ok; ++n) {
    CensusParams params;
    params.degree = n;
    params.samples = samples;
    params.seed = 0xF02C186ull;
    const CensusResult result = forcing_census(params);
    pairs += result.pair_count;
    const Theorem2Bounds bounds = theorem2_bounds(n);
    for (auto [size, count] : result.size_counts)
      ok &= bounds.lower <= size && size <= bounds.upper;
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]")
            << " forcing-bounds: census sizes within theorem-2 intervals ("
            << pairs << " pairs)\n";
  return ok;
}

int cmd_selftest(int n_max, std::int64_t samples) {
  bool ok = true;
  ok &= selftest_oracle_equivalence(n_max, samples);
  ok &= selftest_gap_scan(n_max, samples);
  ok &= selftest_unassigned(n_max, samples);
  ok &= selftest_forcing_bounds(n_max, samples);
  std::cout << "selftest: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitSelftestFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigid-foldability analysis of single-vertex crease patterns"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  auto* analyze = app.add_subcommand("analyze", "decide rigid foldability");
  analyze->add_option("file", file, "pattern file (text or JSON)")->required();
  analyze->add_flag("--json", json, "emit a JSON report");

  int max_n = kDefaultDegreeLimit;
  auto* forcing = app.add_subcommand("forcing", "compute a minimal forcing set");
  forcing->add_option("file", file)->required();
  forcing->add_option("--max-n", max_n, "degree cap for the subset search");
  forcing->add_flag("--json", json);

  int steps = 100;
  double depth = 0.5;
  std::string out_path;
  auto* fold = app.add_subcommand("fold", "export a folding trajectory as CSV");
  fold->add_option("file", file)->required();
  fold->add_option("--steps", steps, "number of trajectory steps");
  fold->add_option("--depth", depth, "target folding depth in (0,1)");
  fold->add_option("--out", out_path, "output path (default: stdout)");

  int census_n = 5;
  std::int64_t samples = 100;
  std::uint64_t seed = 1;
  auto* census = app.add_subcommand("census", "minimal-forcing-size census");
  census->add_option("--n", census_n, "vertex degree");
  census->add_option("--samples", samples, "number of random foldable patterns");
  census->add_option("--seed", seed, "RNG seed");
  census->add_flag("--json", json);

  int n_max = 8;
  std::int64_t st_samples = 50;
  auto* selftest = app.add_subcommand("selftest", "run the oracle suites");
  selftest->add_option("--n-max", n_max, "largest degree to sweep");
  selftest->add_option("--samples", st_samples, "random patterns per degree");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(file, json);
    if (*forcing) return cmd_forcing(file, max_n, json);
    if (*fold) return cmd_fold(file, steps, depth, out_path);
    if (*census) return cmd_census(census_n, samples, seed, json);
    if (*selftest) return cmd_selftest(n_max, st_samples);
  } catch (const NotFoldable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotFoldable;
  } catch (const KinematicsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolverFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
