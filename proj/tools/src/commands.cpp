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


#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <iomanip>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bcp/classifier.hpp"
#include "bcp/dubins.hpp"
#include "bcp/homotopy.hpp"
#include "bcp/lattice_oracle.hpp"
#include "bcp/proximity.hpp"
#include "bcp/winding.hpp"
#include "io.hpp"
#include "svg.hpp"

namespace bcp::cli
{

namespace
{

constexpr double kSampleStep = 0.01;

struct Context
{
  RunConfig cfg;
  std::ostream & out;

  std::string artifact(const std::string & name) const
  {
    return cfg.resolved_output_dir() + "/" + name;
  }
};

/// Endpoints as given and dilated to curvature bound 1.
struct Endpoints
{
  DirectedPoint given_x;
  DirectedPoint given_y;
  DirectedPoint x;
  DirectedPoint y;
  double scale{1.0};
};

Endpoints endpoints(const std::string & xs, const std::string & ys, const RunConfig & cfg)
{
  Endpoints e;
  e.given_x = parse_pose(xs);
  e.given_y = parse_pose(ys);
  const auto s = scale_to_unit_curvature(e.given_x, e.given_y, cfg.kappa);
  e.x = s.x;
  e.y = s.y;
  e.scale = s.scale;
  return e;
}

json header(const std::string & command, const Endpoints & e)
{
  return {{"command", command}, {"x", to_json(e.given_x)}, {"y", to_json(e.given_y)},
    {"frame_scale", e.scale}};
}

/// Nulls stand in for NaN lengths, which JSON cannot carry.
json number_or_null(double v)
{
  return std::isfinite(v) ? json(v) : json(nullptr);
}

SampledPath load_sampled(
  const std::string & file, const std::optional<double> & spline, const std::string & start,
  std::uint32_t seed)
{
  if (!file.empty()) {
    const auto in = path_input_from_json(read_json_file(file));
    if (const auto * cs = std::get_if<CsPath>(&in)) {
      return sample_path(*cs, kSampleStep);
    }
    return std::get<SampledPath>(in);
  }
  if (spline) {
    return seeded_spline_path(seed, parse_pose(start), *spline);
  }
  throw Error(ErrorCode::InvalidInput, "give --path FILE or --spline LENGTH");
}

void write_svg(const Context & ctx, const std::string & name, const SvgDocument & doc, json & report)
{
  if (name.empty()) {
    return;
  }
  const auto file = ctx.artifact(name);
  write_text_file(file, doc.str());
  report["svg"] = file;
}

std::vector<Vec2> path_points(const CsPath & p)
{
  if (p.empty()) {
    return {p.start().point};
  }
  return positions(sample_path(p, 0.05));
}

void scene(SvgDocument & doc, const std::vector<Vec2> & pts, const DirectedPoint & x,
  const DirectedPoint & y, const std::string & title)
{
  auto all = pts;
  for (const auto * z : {&x, &y}) {
    for (const auto & c : {adjacent_circles(*z).left.center, adjacent_circles(*z).right.center}) {
      all.push_back(c + Vec2{1, 1});
      all.push_back(c - Vec2{1, 1});
    }
  }
  const auto [lo, hi] = bounds_of(all, 0.5);
  doc.panel(lo, hi, title);
  doc.adjacent(x, y);
}

json candidate_json(const DubinsCandidate & c, double scale)
{
  json j{{"word", to_string(c.word)}, {"feasible", c.feasible}};
  if (c.feasible) {
    j["length"] = c.length / scale;
    j["label"] = c.label();
    j["minimizer_form"] = c.minimizer_form;
  }
  return j;
}

json frame_json(const FrameInfo & f)
{
  return {{"p", f.p}, {"winding", f.winding}, {"max_curvature", f.max_curvature},
    {"start_residual", f.start_residual}, {"end_residual", f.end_residual}, {"valid", f.valid}};
}

/// One JSON object per frame: the frame summary and its polyline.
std::string trace_lines(const DeformationTrace & t)
{
  std::ostringstream o;
  for (std::size_t i = 0; i < t.frames.size(); ++i) {
    auto j = frame_json(t.info.at(i));
    j["frame"] = i;
    j["polyline"] = polyline_json(positions(t.frames[i]));
    o << j.dump() << '\n';
  }
  return o.str();
}

json proximity_json(const ProximityReport & pr)
{
  json centers = json::array();
  for (const auto & c : pr.centers) {
    centers.push_back({c.x, c.y});
  }
  json j{{"centers", centers}, {"d_ll", pr.d_ll}, {"d_rr", pr.d_rr},
    {"raw", to_string(pr.raw)}, {"condition", to_string(pr.condition)},
    {"subcase", pr.subcase ? json(to_string(*pr.subcase)) : json(nullptr)},
    {"boundary", pr.boundary}};
  if (pr.omega) {
    const auto & o = *pr.omega;
    j["omega"] = {{"area", o.area()}, {"cells", o.cell_count()}, {"diameter", o.diameter()},
      {"resolution", o.resolution()}, {"box_min", {o.box_min().x, o.box_min().y}},
      {"box_max", {o.box_max().x, o.box_max().y}}};
  }
  if (pr.isolated_path) {
    j["isolated_path"] = to_json(*pr.isolated_path);
  }
  if (pr.c_witness) {
    j["c_witness"] = to_json(*pr.c_witness);
  }
  if (pr.c_witness_failed) {
    j["c_witness_failed"] = true;
  }
  return j;
}

json class_json(const HomotopyClass & c, double scale)
{
  json j{{"kind", to_string(c.kind)}, {"winding", c.winding},
    {"length", number_or_null(c.minimal_length / scale)}, {"self_crossings", c.self_crossings}};
  if (c.in_omega) {
    j["in_omega"] = *c.in_omega;
  }
  if (c.representative) {
    j["representative"] = to_json(*c.representative);
  }
  if (!c.error.empty()) {
    j["error"] = c.error;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Subcommands

json cmd_plan(const Context & ctx, const std::string & xs, const std::string & ys,
  const std::string & svg)
{
  const auto e = endpoints(xs, ys, ctx.cfg);
  const auto m = minimal_path(e.x, e.y);
  auto r = header("plan", e);
  r["word"] = m.label();
  r["dubins_word"] = to_string(m.word);
  r["length"] = m.length / e.scale;
  r["multiple_minimizers"] = m.multiple_minimizers;
  r["path"] = to_json(m.path);
  r["candidates"] = json::array();
  for (const auto & c : solve_all(e.x, e.y)) {
    r["candidates"].push_back(candidate_json(c, e.scale));
  }
  if (!svg.empty()) {
    SvgDocument doc;
    scene(doc, path_points(m.path), e.x, e.y, m.label());
    doc.path(m.path, Style::of("#264653", 2.0));
    doc.pose(e.x);
    doc.pose(e.y);
    write_svg(ctx, svg, doc, r);
  }
  return r;
}

json cmd_plan_in_class(const Context & ctx, const std::string & xs, const std::string & ys, int n,
  const std::string & svg)
{
  const auto e = endpoints(xs, ys, ctx.cfg);
  const auto closure = make_closure(e.x, e.y);
  const int k = class_index_k(e.x, e.y, closure).k;
  const auto p = minimal_path_in_class(e.x, e.y, closure.path, n, ctx.cfg.loop_cap);
  auto r = header("plan-in-class", e);
  r["n"] = n;
  r["k"] = k;
  r["word"] = p.word();
  r["length"] = p.length() / e.scale;
  r["winding"] = winding_number(p, closure);
  r["closure_word"] = to_string(closure.word);
  r["path"] = to_json(p);
  if (!svg.empty()) {
    SvgDocument doc;
    scene(doc, path_points(p), e.x, e.y, "n = " + std::to_string(n));
    doc.path(closure.path, Style::of("#999999", 1.0, "none", "6 4"));
    doc.path(p, Style::of("#264653", 2.0));
    doc.pose(e.x);
    doc.pose(e.y);
    write_svg(ctx, svg, doc, r);
  }
  return r;
}

json cmd_classify(const Context & ctx, const std::string & xs, const std::string & ys,
  const std::string & svg)
{
  const auto e = endpoints(xs, ys, ctx.cfg);
  const auto pr = classify(e.x, e.y, ctx.cfg.omega_resolution);
  auto r = header("classify", e);
  r.update(proximity_json(pr));
  if (!svg.empty()) {
    SvgDocument doc;
    scene(doc, {e.x.point, e.y.point}, e.x, e.y,
      std::string(to_string(pr.condition)) +
      (pr.subcase ? " / " + std::string(to_string(*pr.subcase)) : ""));
    if (pr.omega) {
      doc.omega(*pr.omega);
    }
    if (pr.isolated_path) {
      doc.path(*pr.isolated_path, Style::of("#264653", 2.0));
    }
    if (pr.c_witness) {
      doc.path(*pr.c_witness, Style::of("#264653", 2.0));
    }
    doc.pose(e.x);
    doc.pose(e.y);
    write_svg(ctx, svg, doc, r);
  }
  return r;
}

json cmd_classify_space(const Context & ctx, const std::string & xs, const std::string & ys,
  const std::string & range, bool witnesses, const std::string & svg)
{
  const auto e = endpoints(xs, ys, ctx.cfg);
  const auto closure = make_closure(e.x, e.y);
  std::pair<int, int> nr;
  if (range.empty()) {
    const int k = class_index_k(e.x, e.y, closure).k;
    nr = {k - 1, k + 1};
  } else {
    nr = parse_range(range);
  }
  ClassifyOptions opts;
  opts.resolution = ctx.cfg.omega_resolution;
  opts.loop_cap = ctx.cfg.loop_cap;
  const auto rep = classify_space(e.x, e.y, closure, nr.first, nr.second, opts);
  auto r = header("classify-space", e);
  r["k"] = rep.k;
  r["condition"] = to_string(rep.proximity.condition);
  r["subcase"] = rep.proximity.subcase ? json(to_string(*rep.proximity.subcase)) : json(nullptr);
  r["closure_word"] = to_string(rep.closure.word);
  r["double_class_count"] = rep.double_class_count();
  r["diagnostics"] = rep.diagnostics;
  r["entries"] = json::array();
  for (const auto & en : rep.entries) {
    json classes = json::array();
    for (const auto & c : en.classes) {
      auto cj = class_json(c, e.scale);
      if (witnesses) {
        const auto w = is_free_class(c, rep);
        cj["free"] = w.free;
        cj["rationale"] = w.rationale;
        if (w.witness) {
          cj["witness_length"] = w.witness->length() / e.scale;
        }
        if (w.region_diameter) {
          cj["region_diameter"] = *w.region_diameter / e.scale;
        }
      }
      classes.push_back(cj);
    }
    r["entries"].push_back({{"n", en.n}, {"count", en.count}, {"classes", classes}});
  }
  if (!svg.empty()) {
    SvgDocument doc;
    for (const auto & en : rep.entries) {
      for (const auto & c : en.classes) {
        if (!c.representative) {
          continue;
        }
        scene(doc, path_points(*c.representative), e.x, e.y,
          "n = " + std::to_string(en.n) + " " + std::string(to_string(c.kind)));
        if (rep.proximity.omega && c.kind == ClassKind::NonFreeOmega) {
          doc.omega(*rep.proximity.omega);
        }
        doc.path(*c.representative, Style::of("#264653", 2.0));
        doc.pose(e.x);
        doc.pose(e.y);
      }
    }
    write_svg(ctx, svg, doc, r);
  }
  return r;
}

json cmd_winding(const Context & ctx, const std::string & file)
{
  const auto in = path_input_from_json(read_json_file(file));
  json r{{"command", "winding"}};
  if (const auto * cs = std::get_if<CsPath>(&in)) {
    const auto closure = make_closure(cs->start(), cs->end());
    const auto rw = relative_winding(*cs);
    r["x"] = to_json(cs->start());
    r["y"] = to_json(cs->end());
    r["winding"] = winding_number(*cs, closure);
    r["k"] = class_index_k(cs->start(), cs->end(), closure).k;
    r["rho"] = rw.rho;
    r["rho_integral"] = rw.integral;
    r["total_turning"] = cs->total_turning();
    r["self_crossings"] = self_crossings(*cs);
    r["closure_word"] = to_string(closure.word);
  } else {
    const auto & sp = std::get<SampledPath>(in);
    const auto closure = make_closure(sp.start(), sp.end());
    r["x"] = to_json(sp.start());
    r["y"] = to_json(sp.end());
    r["winding"] = winding_number(sp, closure);
    r["k"] = class_index_k(sp.start(), sp.end(), closure).k;
    r["total_turning"] = sp.total_turning();
    r["closure_word"] = to_string(closure.word);
  }
  (void)ctx;
  return r;
}

json cmd_normalize(const Context & ctx, const SampledPath & input, const std::string & trace,
  const std::string & svg)
{
  NormalizeOptions opts;
  opts.target_len = ctx.cfg.target_len;
  opts.deform.p_steps = ctx.cfg.p_steps;
  const auto res = normalize_to_cs(input, opts);
  const auto closure = make_closure(input.start(), input.end());
  json r{{"command", "normalize"}, {"x", to_json(input.start())}, {"y", to_json(input.end())}};
  r["input_length"] = input.length();
  r["length"] = res.path.length();
  r["complexity"] = res.path.complexity();
  r["fragments"] = res.fragmentation.count();
  r["max_fragment_length"] = res.fragmentation.max_fragment_length;
  r["frames"] = res.trace.frames.size();
  r["max_curvature"] = res.trace.max_curvature();
  r["all_frames_valid"] = res.trace.all_valid();
  r["winding_input"] = winding_number(input, closure);
  r["winding_output"] = winding_number(res.path, closure);
  r["endpoint_residual"] = endpoint_residual(res.path, input.end());
  r["path"] = to_json(res.path);
  if (!trace.empty()) {
    const auto file = ctx.artifact(trace);
    write_text_file(file, trace_lines(res.trace));
    r["trace"] = file;
  }
  if (!svg.empty()) {
    SvgDocument doc;
    const auto pts = positions(input);
    const auto [lo, hi] = bounds_of(pts, 0.5);
    doc.panel(lo, hi, "input and cs normalization");
    doc.polyline(pts, Style::of("#bbbbbb", 4.0));
    doc.path(res.path, Style::of("#264653", 1.5));
    doc.pose(input.start());
    doc.pose(input.end());
    write_svg(ctx, svg, doc, r);
  }
  return r;
}

json cmd_deform(const Context & ctx, const SampledPath & input, int index,
  const std::string & trace, const std::string & svg)
{
  const auto f = fragment(input, ctx.cfg.target_len);
  if (index < 0 || static_cast<std::size_t>(index) >= f.count()) {
    throw Error(
            ErrorCode::InvalidParameter,
            "fragment index out of range [0, " + std::to_string(f.count()) + ")");
  }
  const auto frag = fragment_samples(input, f, static_cast<std::size_t>(index));
  const auto rep = replacement_path(frag.start(), frag.end());
  DeformOptions opts;
  opts.p_steps = ctx.cfg.p_steps;
  const auto t = deform_fragment_to_replacement(frag, rep, opts);
  json r{{"command", "deform"}, {"fragment", index}, {"fragments", f.count()},
    {"fragment_length", frag.length()}, {"replacement", to_json(rep)},
    {"replacement_word", rep.word()}, {"frames", t.frames.size()},
    {"all_frames_valid", t.all_valid()}, {"winding_constant", t.winding_constant()},
    {"max_curvature", t.max_curvature()}};
  r["frame_info"] = json::array();
  for (const auto & fi : t.info) {
    r["frame_info"].push_back(frame_json(fi));
  }
  if (!trace.empty()) {
    const auto file = ctx.artifact(trace);
    write_text_file(file, trace_lines(t));
    r["trace"] = file;
  }
  if (!svg.empty()) {
    SvgDocument doc;
    const auto [lo, hi] = bounds_of(positions(frag), 0.3, 2.0);
    const std::size_t panels = std::min<std::size_t>(6, t.frames.size());
    for (std::size_t k = 0; k < panels; ++k) {
      const std::size_t i = panels == 1 ? 0 : k * (t.frames.size() - 1) / (panels - 1);
      std::ostringstream title;
      title << "p = " << std::setprecision(2) << t.info[i].p;
      doc.panel(lo, hi, title.str());
      doc.polyline(positions(frag), Style::of("#cccccc", 1.0, "none", "4 3"));
      doc.path(rep, Style::of("#e9c46a", 1.0));
      doc.polyline(positions(t.frames[i]), Style::of("#264653", 2.0));
    }
    write_svg(ctx, svg, doc, r);
  }
  return r;
}

json cmd_oracle(const Context & ctx, const std::string & xs, const std::string & ys,
  const std::optional<int> & n, const std::optional<double> & step, bool heuristic,
  const std::string & svg)
{
  const auto e = endpoints(xs, ys, ctx.cfg);
  auto lc = ctx.cfg.oracle;
  if (step) {
    lc.position_step = *step;
  }
  lc.use_heuristic = lc.use_heuristic || heuristic;
  OracleResult res;
  double analytic = 0.0;
  auto r = header("oracle", e);
  if (n) {
    const auto closure = make_closure(e.x, e.y);
    res = shortest_path_in_class(e.x, e.y, closure, *n, lc);
    analytic = minimal_path_in_class(e.x, e.y, closure.path, *n, ctx.cfg.loop_cap).length();
    r["n"] = *n;
    r["winding"] = winding_number(res.path, closure);
  } else {
    res = shortest_path(e.x, e.y, lc);
    analytic = minimal_path(e.x, e.y).length;
  }
  r["length"] = res.length / e.scale;
  r["lattice_length"] = res.lattice_length / e.scale;
  r["analytic_length"] = analytic / e.scale;
  r["gap"] = (res.length - analytic) / e.scale;
  r["slack"] = lc.slack() / e.scale;
  r["position_step"] = lc.position_step;
  r["heading_bins"] = lc.bins();
  r["repaired"] = res.repaired;
  r["residual"] = res.residual;
  r["nodes"] = res.expansions;
  r["turning_bins"] = res.turning_bins;
  r["runtime_seconds"] = res.runtime_seconds;
  r["path"] = to_json(res.path);
  r["polyline"] = polyline_json(res.polyline);
  if (!svg.empty()) {
    SvgDocument doc;
    scene(doc, res.polyline, e.x, e.y, "lattice oracle");
    doc.polyline(res.polyline, Style::of("#e76f51", 2.0));
    doc.pose(e.x);
    doc.pose(e.y);
    write_svg(ctx, svg, doc, r);
  }
  return r;
}

json cmd_render(const Context & ctx, const std::string & file, const std::string & svg)
{
  const auto in = path_input_from_json(read_json_file(file));
  SvgDocument doc;
  if (const auto * cs = std::get_if<CsPath>(&in)) {
    scene(doc, path_points(*cs), cs->start(), cs->end(), cs->word());
    doc.path(*cs, Style::of("#264653", 2.0));
    doc.pose(cs->start());
    doc.pose(cs->end());
  } else {
    const auto & sp = std::get<SampledPath>(in);
    const auto pts = positions(sp);
    const auto [lo, hi] = bounds_of(pts, 0.5);
    doc.panel(lo, hi, "sampled path");
    doc.polyline(pts, Style::of("#264653", 2.0));
    doc.pose(sp.start());
    doc.pose(sp.end());
  }
  json r{{"command", "render"}, {"input", file}};
  write_svg(ctx, svg.empty() ? "render.svg" : svg, doc, r);
  return r;
}

}  // namespace

int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Bounded-curvature paths: planning, homotopy classes and verification", "bcp"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_file;
  std::string out_dir;
  std::optional<std::uint32_t> seed;
  app.add_option("--config", config_file, "JSON run configuration");
  app.add_option("--out", out_dir, "Directory for SVG and trace artifacts");
  app.add_option("--seed", seed, "Seed of generated inputs");

  std::string xs;
  std::string ys;
  std::string svg;
  std::string trace;
  std::string file;
  std::string range;
  std::string start = "0,0,0";
  std::optional<double> spline;
  std::optional<double> step;
  std::optional<int> n;
  int fragment_index = 0;
  bool witnesses = false;
  bool heuristic = false;

  auto endpoints_opts = [&](CLI::App * s) {
      s->add_option("--x", xs, "Start pose x,y,theta (theta in rad, or with deg / pi suffix)")
      ->required();
      s->add_option("--y", ys, "Goal pose x,y,theta")->required();
      s->add_option("--svg", svg, "Write an SVG figure with this file name");
    };
  auto sampled_opts = [&](CLI::App * s) {
      s->add_option("--path", file, "Path JSON (cs elements or samples)");
      s->add_option("--spline", spline, "Generate a seeded smooth path of this length");
      s->add_option("--start", start, "Start pose of the generated path");
      s->add_option("--trace", trace, "Write the frames as JSON lines to this file name");
      s->add_option("--svg", svg, "Write an SVG figure with this file name");
    };

  auto * plan = app.add_subcommand("plan", "Shortest bounded-curvature path");
  endpoints_opts(plan);
  auto * plan_in = app.add_subcommand("plan-in-class", "Shortest path of winding number n");
  endpoints_opts(plan_in);
  plan_in->add_option("--n", n, "Winding number")->required();
  auto * cls = app.add_subcommand("classify", "Proximity condition of the endpoints");
  endpoints_opts(cls);
  auto * space = app.add_subcommand("classify-space", "Homotopy classes per winding number");
  endpoints_opts(space);
  space->add_option("--n", range, "Winding range a..b (default k-1..k+1)");
  space->add_flag("--witness", witnesses, "Build long witnesses for free classes");
  auto * wind = app.add_subcommand("winding", "Winding number of a path against its closure");
  wind->add_option("--path", file, "Path JSON")->required();
  auto * norm = app.add_subcommand("normalize", "Deform a path into a cs path");
  sampled_opts(norm);
  auto * def = app.add_subcommand("deform", "Deform one fragment onto its replacement");
  sampled_opts(def);
  def->add_option("--fragment", fragment_index, "Fragment index");
  auto * orc = app.add_subcommand("oracle", "Lattice search for the shortest path");
  endpoints_opts(orc);
  orc->add_option("--n", n, "Restrict to winding number n");
  orc->add_option("--step", step, "Position step");
  orc->add_flag("--heuristic", heuristic, "Best-first search with the distance bound");
  auto * render = app.add_subcommand("render", "Draw a path document as SVG");
  render->add_option("--path", file, "Path JSON")->required();
  render->add_option("--svg", svg, "Output file name (default render.svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp & e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError & e) {
    err << "error: " << e.what() << '\n';
    out << error_json(ErrorCode::InvalidInput, e.what()).dump(2) << '\n';
    return kExitUsage;
  }

  try {
    Context ctx{config_file.empty() ? RunConfig{} : config_from_json(read_json_file(config_file)),
      out};
    if (!out_dir.empty()) {
      ctx.cfg.output_dir = out_dir;
    }
    if (seed) {
      ctx.cfg.seed = *seed;
    }
    ctx.cfg.validate();
    json report;
    if (*plan) {
      report = cmd_plan(ctx, xs, ys, svg);
    } else if (*plan_in) {
      report = cmd_plan_in_class(ctx, xs, ys, *n, svg);
    } else if (*cls) {
      report = cmd_classify(ctx, xs, ys, svg);
    } else if (*space) {
      report = cmd_classify_space(ctx, xs, ys, range, witnesses, svg);
    } else if (*wind) {
      report = cmd_winding(ctx, file);
    } else if (*norm) {
      report = cmd_normalize(ctx, load_sampled(file, spline, start, ctx.cfg.seed), trace, svg);
    } else if (*def) {
      report = cmd_deform(
        ctx, load_sampled(file, spline, start, ctx.cfg.seed), fragment_index, trace, svg);
    } else if (*orc) {
      report = cmd_oracle(ctx, xs, ys, n, step, heuristic, svg);
    } else {
      report = cmd_render(ctx, file, svg);
    }
    out << report.dump(2) << '\n';
    return kExitOk;
  } catch (const Error & e) {
    err << "error: " << e.what() << '\n';
    out << error_json(e.code(), e.what()).dump(2) << '\n';
    return is_domain_error(e.code()) ? kExitDomain : kExitUsage;
  }
}

}  // namespace bcp::cli
