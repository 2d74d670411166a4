#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "origami/core.hpp"
#include "origami/kinematics.hpp"

// Pattern-file parsing and report serialization for the CLI.
//
// Two formats are accepted:
//   plain text   one crease per line, "<degrees> <M|V|?>"
//   JSON         {"creases":[{"angle_mdeg":0,"mv":"M"}, ...]}
//                (entries may use "angle_deg" with a decimal value instead)
//
// Decimal degrees must land on an exact milli-degree within 1e-6 degrees;
// anything else is rejected rather than silently rounded.

namespace origami {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg, int line_number = 0)
      : std::runtime_error(line_number > 0
                               ? "line " + std::to_string(line_number) + ": " + msg
                               : msg),
        line(line_number) {}
  int line;
};

// Sniffs the format from the first non-space character.
NormalizedPattern parse_pattern(std::string_view text);
NormalizedPattern parse_pattern_file(const std::filesystem::path& path);

// Exact conversion of a decimal-degree token to milli-degrees; throws
// ParseError when the value does not round cleanly.
long long degrees_to_mdeg(std::string_view token, int line_number = 0);

std::string pattern_to_json(const CreasePattern& p,
                            const std::optional<MVAssignment>& mu);

// step,t,rho_1..rho_n,residual with 17 significant digits, radians.
std::string trajectory_to_csv(const Trajectory& traj);

}  // namespace origami
