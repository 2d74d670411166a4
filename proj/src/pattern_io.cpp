#include "origami/pattern_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace origami {

namespace {

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::optional<Parity> mv_from_token(std::string_view tok) {
  if (tok == "?") return std::nullopt;
  if (tok.size() == 1)
    if (auto p = parity_from_char(tok[0])) return p;
  throw ParseError("MV label must be M, V or ?, got '" + std::string(tok) + "'");
}

NormalizedPattern parse_pattern_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("creases") || !doc["creases"].is_array())
    throw ParseError("JSON pattern must be an object with a \"creases\" array");

  std::vector<RawCrease> raw;
  int entry = 0;
  for (const auto& item : doc["creases"]) {
    ++entry;
    if (!item.is_object())
      throw ParseError("crease entry " + std::to_string(entry) +
                       " must be an object");
    RawCrease rc;
    if (item.contains("angle_mdeg")) {
      if (!item["angle_mdeg"].is_number_integer())
        throw ParseError("angle_mdeg of entry " + std::to_string(entry) +
                         " must be an integer");
      rc.angle_mdeg = item["angle_mdeg"].get<long long>();
    } else if (item.contains("angle_deg")) {
      rc.angle_mdeg = degrees_to_mdeg(item["angle_deg"].dump());
    } else {
      throw ParseError("crease entry " + std::to_string(entry) +
                       " needs angle_mdeg or angle_deg");
    }
    if (!item.contains("mv") || !item["mv"].is_string())
      throw ParseError("crease entry " + std::to_string(entry) +
                       " needs an \"mv\" string");
    rc.mv = mv_from_token(item["mv"].get<std::string>());
    raw.push_back(rc);
  }
  return normalize_pattern(raw);
}

NormalizedPattern parse_pattern_text(std::string_view text) {
  std::vector<RawCrease> raw;
  int line_number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_number;

    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::istringstream ss{std::string(line)};
    std::string angle_tok, mv_tok, extra;
    if (!(ss >> angle_tok)) continue;  // blank line
    if (!(ss >> mv_tok))
      throw ParseError("expected '<degrees> <M|V|?>'", line_number);
    if (ss >> extra)
      throw ParseError("unexpected trailing token '" + extra + "'", line_number);

    RawCrease rc;
    rc.angle_mdeg = degrees_to_mdeg(angle_tok, line_number);
    try {
      rc.mv = mv_from_token(mv_tok);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_number);
    }
    raw.push_back(rc);
  }
  if (raw.empty()) throw ParseError("no creases found");
  return normalize_pattern(raw);
}

}  // namespace

long long degrees_to_mdeg(std::string_view token, int line_number) {
  std::string tok(token);
  char* parse_end = nullptr;
  const double value = std::strtod(tok.c_str(), &parse_end);
  if (parse_end != tok.c_str() + tok.size() || tok.empty())
    throw ParseError("invalid angle '" + tok + "'", line_number);
  if (!(std::abs(value) < 1e9))
    throw ParseError("angle out of range '" + tok + "'", line_number);
  const double mdeg = value * 1000.0;
  const long long rounded = std::llround(mdeg);
  if (std::abs(mdeg - static_cast<double>(rounded)) > 1e-3)
    throw ParseError("angle '" + tok +
                         "' is not an exact milli-degree (1e-6 degree tolerance)",
                     line_number);
  return rounded;
}

NormalizedPattern parse_pattern(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{' || c == '[') return parse_pattern_json(text);
    break;
  }
  return parse_pattern_text(text);
}

NormalizedPattern parse_pattern_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pattern(buf.str());
}

std::string pattern_to_json(const CreasePattern& p,
                            const std::optional<MVAssignment>& mu) {
  nlohmann::ordered_json creases = nlohmann::ordered_json::array();
  for (int i = 0; i < p.degree(); ++i) {
    nlohmann::ordered_json entry;
    entry["angle_mdeg"] = p.crease(i).mdeg;
    entry["mv"] = mu ? std::string(1, to_char((*mu)[i])) : "?";
    creases.push_back(entry);
  }
  nlohmann::ordered_json doc;
  doc["creases"] = creases;
  return doc.dump();
}

std::string trajectory_to_csv(const Trajectory& traj) {
  std::string out = "step,t";
  const int n = traj.states.empty() ? 0 : traj.states.front().pattern.degree();
  for (int i = 1; i <= n; ++i) out += ",rho_" + std::to_string(i);
  out += ",residual\n";
  for (size_t s = 0; s < traj.states.size(); ++s) {
    out += std::to_string(s);
    out += ',' + fmt17(traj.t[s]);
    for (double r : traj.states[s].fold_angles) out += ',' + fmt17(r);
    out += ',' + fmt17(traj.states[s].residual);
    out += '\n';
  }
  return out;
}

}  // namespace origami
