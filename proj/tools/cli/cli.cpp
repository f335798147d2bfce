#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <ostream>

#include "commands.hpp"
#include "config.hpp"
#include "trackgen/error.hpp"
#include "trackgen/util/files.hpp"

namespace trackgen::cli {

namespace {

struct Options {
  GlobalOptions global;
  GenLayoutOptions gen_layout;
  RenderCommandOptions render;
  SimulateOptions simulate;
  BevOptions bev;
  SplitOptions split;
  EvalOptions eval;
  BenchCommandOptions bench;
};

void add_render_options(CLI::App& sub, RenderCommandOptions& o) {
  sub.add_option("--layout", o.layout, "Layout file");
  sub.add_option("--class-map", o.class_map, "Class map file (default: built-in)");
  sub.add_option("--spacing", o.spacing, "Trajectory pose spacing in meters")
      ->check(CLI::PositiveNumber);
  sub.add_option("--overtake", o.overtakes, "Overtake window START:LENGTH in meters");
  sub.add_option("--cross", o.crossings, "Intersection exit INDEX:straight|left|right");
  sub.add_option("--park", o.park, "Park in ZONE:SPACE");
}

void build(CLI::App& app, Options& o) {
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "trackgen 0.1.0");
  app.add_option("--config", o.global.config, "Config file of `key = value` lines");
  app.add_option("--seed", o.global.seed, "Seed for every random choice");
  app.add_option("--out,-o", o.global.out, "Output file or directory");
  app.add_flag("--quiet,-q", o.global.quiet, "Suppress progress messages");

  auto* gen = app.add_subcommand("gen-layout", "Generate a random route layout");
  auto& c = o.gen_layout.constraints;
  gen->add_option("--min-segments", c.min_segments);
  gen->add_option("--max-segments", c.max_segments);
  gen->add_option("--kinds", o.gen_layout.kinds,
                  "Allowed segment kinds: straight, arc, intersection, parking_zone")
      ->delimiter(',');
  gen->add_option("--min-length", c.min_length, "Straight length range, m");
  gen->add_option("--max-length", c.max_length);
  gen->add_option("--min-radius", c.min_radius, "Arc radius range, m");
  gen->add_option("--max-radius", c.max_radius);
  gen->add_option("--min-angle-deg", o.gen_layout.min_angle_deg);
  gen->add_option("--max-angle-deg", o.gen_layout.max_angle_deg);
  gen->add_option("--lane-width", o.gen_layout.lane_width);
  gen->add_option("--max-attempts", c.max_attempts);
  gen->add_flag("--closed", c.closed, "Require the route to end near its start");
  gen->add_flag("--sample", o.gen_layout.sample, "Write the built-in example layout");

  auto* render = app.add_subcommand("render", "Render the top-down pair and trajectory");
  add_render_options(*render, o.render);

  auto* sim = app.add_subcommand("simulate", "Record and process first-person frames");
  auto& s = o.simulate;
  add_render_options(*sim, s.render);
  sim->add_option("--trajectory", s.trajectory, "Trajectory CSV instead of the generated one");
  sim->add_option("--stride", s.stride, "Use every k-th pose")->check(CLI::PositiveNumber);
  sim->add_option("--frames", s.frames, "Stop after this many frame pairs (0: all)");
  sim->add_option("--fx", s.camera.fx);
  sim->add_option("--fy", s.camera.fy);
  sim->add_option("--cx", s.camera.cx);
  sim->add_option("--cy", s.camera.cy);
  sim->add_option("--width", s.camera.width, "Camera image width, px");
  sim->add_option("--height", s.camera.height, "Camera image height, px");
  sim->add_option("--mount-height", s.camera.mount_height, "Camera height above ground, m");
  sim->add_option("--pitch-deg", s.pitch_deg, "Downward camera tilt");
  sim->add_option("--roi", s.roi, "Region of interest LEFT,TOP,WIDTH,HEIGHT (required)");
  sim->add_option("--color-policy", s.color_policy, "strict or nearest");
  sim->add_option("--source", s.source, "Source tag written to the manifest");
  sim->add_flag("--keep-frames", s.keep_frames, "Also write the recorded color frames");

  auto* bev = app.add_subcommand("bev", "Warp a dataset into the bird's-eye view");
  bev->add_option("--manifest", o.bev.manifest);
  bev->add_option("--correspondences", o.bev.correspondences,
                  "File of 4 lines `src_u src_v dst_u dst_v`");
  bev->add_option("--homography", o.bev.homography, "File of 9 reals, row-major");
  bev->add_option("--bev-width", o.bev.width);
  bev->add_option("--bev-height", o.bev.height);

  auto* split = app.add_subcommand("split", "Assign unassigned records to train/val");
  split->add_option("--manifest", o.split.manifest);
  split->add_option("--fraction", o.split.fraction, "Train fraction");

  auto* eval = app.add_subcommand("eval", "Per-class IoU and mIoU of predictions");
  eval->add_option("--manifest", o.eval.manifest, "Ground-truth manifest");
  eval->add_option("--pred-dir", o.eval.pred_dir,
                   "Predictions, stored under the manifest's annotation paths");
  eval->add_option("--class-map", o.eval.class_map);
  eval->add_option("--split", o.eval.split, "all, train, val, test or unassigned");
  eval->add_flag("--exclude-unlabeled", o.eval.exclude_unlabeled,
                 "Leave class 0 out of the mean");
  eval->add_option("--csv", o.eval.csv, "Also write class_id,name,iou");

  auto* bench = app.add_subcommand("bench", "Frame rate of a pipeline stage");
  bench->add_option("--stage", o.bench.stage, "warp, render, color-to-id or fit64");
  bench->add_option("--resolutions", o.bench.resolutions, "Comma-separated WxH list");
  bench->add_option("--frames", o.bench.frames, "Frames per resolution");
  bench->add_option("--warmup", o.bench.warmup);
  bench->add_option("--repetitions", o.bench.repetitions)->check(CLI::PositiveNumber);
  bench->add_option("--csv", o.bench.csv);
}

// Config values fill options the command line left unset. A key must name
// an option of the chosen subcommand or a global option.
void apply_config(CLI::App& app, CLI::App& sub, const std::string& path) {
  for (const auto& e : parse_config(util::read_text_file(path))) {
    const std::string name = "--" + option_name(e.key);
    CLI::Option* opt = sub.get_option_no_throw(name);
    if (!opt) opt = app.get_option_no_throw(name);
    if (!opt || name == "--config") {
      throw InvalidInput(fmt::format("{}: line {}: unknown key '{}' for {}", path,
                                     e.line, e.key, sub.get_name()));
    }
    if (opt->count() > 0) continue;
    try {
      opt->add_result(e.value);
      opt->run_callback();
    } catch (const CLI::Error& err) {
      throw InvalidInput(fmt::format("{}: line {}: {}", path, e.line, err.what()));
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Synthetic track dataset toolkit", "trackgen"};
  Options o;
  build(app, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      // --help or --version.
      if (dynamic_cast<const CLI::CallForHelp*>(&e) ||
          dynamic_cast<const CLI::CallForAllHelp*>(&e)) {
        out << app.help();
      } else {
        out << e.what() << '\n';
      }
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  CLI::App* sub = app.get_subcommands().front();
  const Context ctx{o.global, out, err};
  try {
    if (!o.global.config.empty()) apply_config(app, *sub, o.global.config);
    const std::string& name = sub->get_name();
    if (name == "gen-layout") {
      cmd_gen_layout(ctx, o.gen_layout);
    } else if (name == "render") {
      cmd_render(ctx, o.render);
    } else if (name == "simulate") {
      cmd_simulate(ctx, o.simulate);
    } else if (name == "bev") {
      cmd_bev(ctx, o.bev);
    } else if (name == "split") {
      cmd_split(ctx, o.split);
    } else if (name == "eval") {
      cmd_eval(ctx, o.eval);
    } else {
      cmd_bench(ctx, o.bench);
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace trackgen::cli
