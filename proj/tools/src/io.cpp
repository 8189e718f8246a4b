// Copyright 2026 The bcpaths Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace bcp::cli
{

namespace
{

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool ends_with(std::string_view s, std::string_view suffix)
{
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

double parse_number(std::string_view text, std::string_view what)
{
  const auto t = trim(text);
  double v = 0.0;
  const auto * first = t.data();
  if (!t.empty() && t.front() == '+') {
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw Error(
            ErrorCode::InvalidInput,
            "cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

int parse_int(std::string_view text)
{
  const auto t = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw Error(ErrorCode::InvalidInput, "cannot parse integer '" + std::string(text) + "'");
  }
  return v;
}

// Runs a JSON accessor, turning library exceptions into input errors.
template<typename F>
auto guarded(std::string_view what, F && f)
{
  try {
    return f();
  } catch (const json::exception & e) {
    throw Error(ErrorCode::InvalidInput, std::string(what) + ": " + e.what());
  }
}

}  // namespace

double parse_angle(std::string_view text)
{
  const auto t = trim(text);
  if (ends_with(t, "deg")) {
    return parse_number(t.substr(0, t.size() - 3), "angle") * kPi / 180.0;
  }
  if (ends_with(t, "rad")) {
    return parse_number(t.substr(0, t.size() - 3), "angle");
  }
  if (ends_with(t, "pi")) {
    const auto head = trim(t.substr(0, t.size() - 2));
    return (head.empty() ? 1.0 : head == "-" ? -1.0 : parse_number(head, "angle")) * kPi;
  }
  if (ends_with(t, "d")) {
    return parse_number(t.substr(0, t.size() - 1), "angle") * kPi / 180.0;
  }
  return parse_number(t, "angle");
}

DirectedPoint parse_pose(std::string_view text)
{
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    parts.push_back(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  if (parts.size() != 3) {
    throw Error(
            ErrorCode::InvalidInput,
            "pose '" + std::string(text) + "' must be x,y,theta");
  }
  return DirectedPoint::make(
    parse_number(parts[0], "x"), parse_number(parts[1], "y"), parse_angle(parts[2]));
}

std::pair<int, int> parse_range(std::string_view text)
{
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  const int a = parse_int(text.substr(0, dots));
  const int b = parse_int(text.substr(dots + 2));
  if (a > b) {
    throw Error(ErrorCode::InvalidInput, "empty range '" + std::string(text) + "'");
  }
  return {a, b};
}

json to_json(const DirectedPoint & x)
{
  return {{"x", x.point.x}, {"y", x.point.y}, {"theta", x.heading}};
}

DirectedPoint pose_from_json(const json & j)
{
  return guarded(
    "pose", [&] {
      return DirectedPoint::make(
        j.at("x").get<double>(), j.at("y").get<double>(), j.at("theta").get<double>());
    });
}

json to_json(const CsPath & path)
{
  json els = json::array();
  for (const auto & st : path.steps()) {
    if (st.kind == ArcSegment::Kind::Arc) {
      els.push_back(
        {{"type", "arc"}, {"orientation", std::string(1, turn_letter(st.turn))},
          {"sweep", st.amount}});
    } else {
      els.push_back({{"type", "line"}, {"length", st.amount}});
    }
  }
  return {{"start", to_json(path.start())}, {"elements", els}};
}

CsPath path_from_json(const json & j)
{
  return guarded(
    "path", [&] {
      std::vector<CsStep> steps;
      for (const auto & e : j.at("elements")) {
        const auto type = e.at("type").get<std::string>();
        if (type == "arc") {
          const auto o = e.at("orientation").get<std::string>();
          if (o != "L" && o != "R") {
            throw Error(ErrorCode::InvalidInput, "arc orientation must be L or R");
          }
          const double sweep = e.at("sweep").get<double>();
          if (!(sweep >= 0.0)) {
            throw Error(ErrorCode::InvalidInput, "arc sweep must be non-negative");
          }
          steps.push_back({ArcSegment::Kind::Arc, o == "L" ? Turn::Left : Turn::Right, sweep});
        } else if (type == "line") {
          const double len = e.at("length").get<double>();
          if (!(len >= 0.0)) {
            throw Error(ErrorCode::InvalidInput, "line length must be non-negative");
          }
          steps.push_back({ArcSegment::Kind::Line, Turn::Left, len});
        } else {
          throw Error(ErrorCode::InvalidInput, "unknown element type '" + type + "'");
        }
      }
      return CsPath::from_steps(pose_from_json(j.at("start")), steps);
    });
}

json to_json(const SampledPath & path)
{
  json rows = json::array();
  for (const auto & s : path.samples) {
    rows.push_back({s.s, s.position.x, s.position.y, s.heading});
  }
  return {{"step_bound", path.step_bound}, {"samples", rows}};
}

SampledPath sampled_from_json(const json & j)
{
  return guarded(
    "samples", [&] {
      SampledPath p;
      p.step_bound = j.value("step_bound", 0.0);
      for (const auto & r : j.at("samples")) {
        if (!r.is_array() || r.size() != 4) {
          throw Error(ErrorCode::InvalidInput, "sample rows must be [s, x, y, heading]");
        }
        p.samples.push_back(
          {r[0].get<double>(), Vec2{r[1].get<double>(), r[2].get<double>()},
            r[3].get<double>()});
      }
      if (p.step_bound <= 0.0) {
        for (std::size_t i = 1; i < p.samples.size(); ++i) {
          p.step_bound = std::max(p.step_bound, p.samples[i].s - p.samples[i - 1].s);
        }
      }
      return p;
    });
}

json polyline_json(const std::vector<Vec2> & points)
{
  json out = json::array();
  for (const auto & p : points) {
    out.push_back({p.x, p.y});
  }
  return out;
}

PathInput path_input_from_json(const json & j)
{
  if (j.is_object() && j.contains("elements")) {
    return path_from_json(j);
  }
  if (j.is_object() && j.contains("samples")) {
    return sampled_from_json(j);
  }
  throw Error(ErrorCode::InvalidInput, "path document needs 'elements' or 'samples'");
}

json read_json_file(const std::string & file)
{
  std::ifstream in(file);
  if (!in) {
    throw Error(ErrorCode::InvalidInput, "cannot open '" + file + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error & e) {
    throw Error(ErrorCode::InvalidInput, file + ": " + e.what());
  }
}

void write_text_file(const std::string & file, const std::string & text)
{
  std::ofstream out(file);
  if (!out) {
    throw Error(ErrorCode::InvalidInput, "cannot write '" + file + "'");
  }
  out << text;
}

void RunConfig::validate() const
{
  auto positive = [](double v, const char * name) {
      if (!(v > 0.0) || !std::isfinite(v)) {
        throw Error(ErrorCode::InvalidParameter, std::string(name) + " must be positive");
      }
    };
  positive(kappa, "kappa");
  positive(geom_tol, "geom_tol");
  positive(omega_resolution, "omega_resolution");
  positive(target_len, "target_len");
  positive(oracle.position_step, "oracle.position_step");
  positive(oracle.slack_constant, "oracle.slack_constant");
  if (target_len >= 1.0) {
    throw Error(ErrorCode::InvalidParameter, "target_len must be below 1");
  }
  if (p_steps < 1) {
    throw Error(ErrorCode::InvalidParameter, "p_steps must be at least 1");
  }
  if (loop_cap < 0) {
    throw Error(ErrorCode::InvalidParameter, "loop_cap must be non-negative");
  }
  if (oracle.heading_bins < 0 || oracle.goal_tolerance < 0.0 || oracle.margin < 0.0) {
    throw Error(ErrorCode::InvalidParameter, "oracle bins, tolerance and margin must be >= 0");
  }
}

std::string RunConfig::resolved_output_dir() const
{
  if (!output_dir.empty()) {
    return output_dir;
  }
  if (const char * env = std::getenv("BCP_OUTPUT_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return ".";
}

json to_json(const RunConfig & cfg)
{
  const auto & o = cfg.oracle;
  return {
    {"kappa", cfg.kappa},
    {"geom_tol", cfg.geom_tol},
    {"omega_resolution", cfg.omega_resolution},
    {"target_len", cfg.target_len},
    {"p_steps", cfg.p_steps},
    {"loop_cap", cfg.loop_cap},
    {"output_dir", cfg.output_dir},
    {"seed", cfg.seed},
    {"oracle", {
        {"position_step", o.position_step},
        {"heading_bins", o.heading_bins},
        {"goal_tolerance", o.goal_tolerance},
        {"margin", o.margin},
        {"use_heuristic", o.use_heuristic},
        {"max_expansions", o.max_expansions},
        {"slack_constant", o.slack_constant}}}};
}

RunConfig config_from_json(const json & j)
{
  return guarded(
    "config", [&] {
      if (!j.is_object()) {
        throw Error(ErrorCode::InvalidInput, "config must be an object");
      }
      static const std::set<std::string> top{"kappa", "geom_tol", "omega_resolution",
        "target_len", "p_steps", "loop_cap", "output_dir", "seed", "oracle"};
      static const std::set<std::string> lat{"position_step", "heading_bins",
        "goal_tolerance", "margin", "use_heuristic", "max_expansions", "slack_constant"};
      for (const auto & [k, v] : j.items()) {
        if (!top.count(k)) {
          throw Error(ErrorCode::InvalidInput, "unknown config key '" + k + "'");
        }
      }
      RunConfig c;
      c.kappa = j.value("kappa", c.kappa);
      c.geom_tol = j.value("geom_tol", c.geom_tol);
      c.omega_resolution = j.value("omega_resolution", c.omega_resolution);
      c.target_len = j.value("target_len", c.target_len);
      c.p_steps = j.value("p_steps", c.p_steps);
      c.loop_cap = j.value("loop_cap", c.loop_cap);
      c.output_dir = j.value("output_dir", c.output_dir);
      c.seed = j.value("seed", c.seed);
      if (j.contains("oracle")) {
        const auto & o = j.at("oracle");
        for (const auto & [k, v] : o.items()) {
          if (!lat.count(k)) {
            throw Error(ErrorCode::InvalidInput, "unknown oracle key '" + k + "'");
          }
        }
        auto & l = c.oracle;
        l.position_step = o.value("position_step", l.position_step);
        l.heading_bins = o.value("heading_bins", l.heading_bins);
        l.goal_tolerance = o.value("goal_tolerance", l.goal_tolerance);
        l.margin = o.value("margin", l.margin);
        l.use_heuristic = o.value("use_heuristic", l.use_heuristic);
        l.max_expansions = o.value("max_expansions", l.max_expansions);
        l.slack_constant = o.value("slack_constant", l.slack_constant);
      }
      return c;
    });
}

SampledPath seeded_spline_path(
  std::uint32_t seed, const DirectedPoint & start, double length, double bound, double step)
{
  if (!(length > 0.0) || !(step > 0.0) || !(bound > 0.0)) {
    throw Error(ErrorCode::InvalidParameter, "spline length, step and bound must be positive");
  }
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> kdist(-1.3 * bound, 1.3 * bound);
  const int knots = 6;
  std::vector<double> k(knots);
  for (auto & v : k) {
    v = kdist(rng);
  }
  auto curvature = [&](double s) {
      const double u = s / length * (knots - 1);
      const int i = std::clamp(static_cast<int>(u), 0, knots - 2);
      const double t = u - i;
      const double p0 = k[std::max(i - 1, 0)];
      const double p1 = k[i];
      const double p2 = k[i + 1];
      const double p3 = k[std::min(i + 2, knots - 1)];
      const double v = 0.5 * ((2 * p1) + (-p0 + p2) * t + (2 * p0 - 5 * p1 + 4 * p2 - p3) * t * t +
        (-p0 + 3 * p1 - 3 * p2 + p3) * t * t * t);
      return std::clamp(v, -bound, bound);
    };
  SampledPath out;
  out.step_bound = step;
  const int n = static_cast<int>(std::ceil(length / step));
  const double h = length / n;
  const int sub = 20;
  Vec2 p = start.point;
  double heading = start.heading;
  out.samples.push_back({0.0, p, heading});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < sub; ++j) {
      const double s = i * h + (j + 0.5) * h / sub;
      const double kv = curvature(s);
      p += unit(heading + kv * h / sub / 2.0) * (h / sub);
      heading += kv * h / sub;
    }
    out.samples.push_back({(i + 1) * h, p, heading});
  }
  return out;
}

json error_json(ErrorCode code, std::string_view message)
{
  return {{"error", {{"code", to_string(code)}, {"message", message},
    {"domain", is_domain_error(code)}}}};
}

}  // namespace bcp::cli
