#include "commands.hpp"

#include <fmt/format.h>

#include <cmath>
#include <map>
#include <ostream>

#include "trackgen/bench/fps.hpp"
#include "trackgen/bev/homography.hpp"
#include "trackgen/bev/warp.hpp"
#include "trackgen/camera/first_person.hpp"
#include "trackgen/dataset/annotation.hpp"
#include "trackgen/dataset/bev_convert.hpp"
#include "trackgen/dataset/manifest.hpp"
#include "trackgen/dataset/split.hpp"
#include "trackgen/error.hpp"
#include "trackgen/imaging/netpbm.hpp"
#include "trackgen/metrics/report.hpp"
#include "trackgen/render/maneuver.hpp"
#include "trackgen/render/topdown.hpp"
#include "trackgen/road/layout_io.hpp"
#include "trackgen/util/files.hpp"
#include "trackgen/util/text.hpp"

namespace trackgen::cli {

namespace fs = std::filesystem;

void Context::info(const std::string& message) const {
  if (!global.quiet) err << message << '\n';
}

namespace {

constexpr double kDegree = kPi / 180.0;

std::pair<std::string_view, std::string_view> split_pair(std::string_view s,
                                                         std::string_view what) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidInput(fmt::format("{} must look like A:B, got '{}'", what, s));
  }
  return {s.substr(0, colon), s.substr(colon + 1)};
}

double to_real(std::string_view s, std::string_view what) {
  return util::parse_real(util::trim(s), what, 0);
}

int to_int(std::string_view s, std::string_view what) {
  const long long v = util::parse_int(util::trim(s), what, 0);
  if (v < INT32_MIN || v > INT32_MAX) throw InvalidInput(fmt::format("{} out of range", what));
  return static_cast<int>(v);
}

fs::path out_dir(const Context& ctx) {
  return ctx.global.out.empty() ? fs::path(".") : fs::path(ctx.global.out);
}

ClassMap load_class_map(const std::string& path) {
  if (path.empty()) return ClassMap::defaults();
  ClassMap map = parse_class_map(util::read_text_file(path));
  if (const auto v = map.violations(); !v.empty()) {
    throw InvalidInput(fmt::format("{}: {}", path, v.front()));
  }
  return map;
}

RouteLayout load_layout(const RenderCommandOptions& opts) {
  if (opts.layout.empty()) throw InvalidInput("no layout given (--layout)");
  RouteLayout layout = parse_layout(util::read_text_file(opts.layout));
  if (!opts.class_map.empty()) {
    layout.class_map = load_class_map(opts.class_map);
    require_valid(layout);
  }
  return layout;
}

Trajectory build_trajectory(const RouteLayout& layout, const RenderCommandOptions& opts) {
  Trajectory t = generate_trajectory(layout, opts.spacing);
  for (const auto& spec : opts.overtakes) {
    const auto [start, length] = split_pair(spec, "--overtake");
    t = insert_maneuver(t, Overtake{to_real(start, "overtake start"),
                                    to_real(length, "overtake length")},
                        layout);
  }
  for (const auto& spec : opts.crossings) {
    const auto [index, dir] = split_pair(spec, "--cross");
    CrossDirection d{};
    if (dir == "straight") {
      d = CrossDirection::kStraight;
    } else if (dir == "left") {
      d = CrossDirection::kLeft;
    } else if (dir == "right") {
      d = CrossDirection::kRight;
    } else {
      throw InvalidInput(fmt::format("unknown crossing direction '{}'", dir));
    }
    t = insert_maneuver(t, CrossIntersection{d, to_int(index, "intersection")}, layout);
  }
  if (!opts.park.empty()) {
    const auto [zone, space] = split_pair(opts.park, "--park");
    t = insert_maneuver(t, Park{to_int(space, "space"), to_int(zone, "zone")}, layout);
  }
  return t;
}

RoiRect parse_roi(const std::string& text) {
  if (text.empty()) throw InvalidInput("simulate needs --roi LEFT,TOP,WIDTH,HEIGHT");
  const auto parts = util::split(text, ',');
  if (parts.size() != 4) {
    throw InvalidInput(fmt::format("ROI must be LEFT,TOP,WIDTH,HEIGHT, got '{}'", text));
  }
  return {to_int(parts[0], "roi left"), to_int(parts[1], "roi top"),
          to_int(parts[2], "roi width"), to_int(parts[3], "roi height")};
}

fs::path rebase(const std::string& p, const fs::path& from, const fs::path& to) {
  if (fs::path(p).is_absolute()) return p;
  return fs::absolute(from / p).lexically_normal().lexically_relative(
      fs::absolute(to).lexically_normal());
}

}  // namespace

void cmd_gen_layout(const Context& ctx, GenLayoutOptions opts) {
  if (!opts.kinds.empty()) {
    opts.constraints.kinds.clear();
    for (const auto& k : opts.kinds) {
      if (k == "straight") {
        opts.constraints.kinds.push_back(SegmentKindTag::kStraight);
      } else if (k == "arc") {
        opts.constraints.kinds.push_back(SegmentKindTag::kArc);
      } else if (k == "intersection") {
        opts.constraints.kinds.push_back(SegmentKindTag::kIntersection);
      } else if (k == "parking_zone") {
        opts.constraints.kinds.push_back(SegmentKindTag::kParkingZone);
      } else {
        throw InvalidInput(fmt::format("unknown segment kind '{}'", k));
      }
    }
  }
  opts.constraints.min_angle = opts.min_angle_deg * kDegree;
  opts.constraints.max_angle = opts.max_angle_deg * kDegree;
  RouteLayout base;
  base.lane_width = opts.lane_width;
  const std::uint64_t seed = ctx.global.seed.value_or(0);
  const RouteLayout layout =
      opts.sample ? sample_layout() : random_layout(seed, opts.constraints, base);
  const std::string text = format_layout(layout);
  if (ctx.global.out.empty()) {
    ctx.out << text;
  } else {
    util::write_text_file(ctx.global.out, text);
    ctx.info(fmt::format("wrote {} ({} segments, seed {})", ctx.global.out,
                         layout.segments.size(), layout.seed.value_or(seed)));
  }
}

void cmd_render(const Context& ctx, const RenderCommandOptions& opts) {
  const RouteLayout layout = load_layout(opts);
  const TopDownPair pair = render_topdown(layout);
  const Trajectory t = build_trajectory(layout, opts);
  const fs::path dir = out_dir(ctx);
  write_raster_file(dir / "topdown_raw.ppm", pair.raw);
  write_raster_file(dir / "topdown_ann_color.ppm", pair.annotation_color);
  write_raster_file(dir / "topdown_ann_id.pgm", pair.annotation_id);
  util::write_text_file(dir / "trajectory.csv", format_trajectory_csv(t));
  ctx.info(fmt::format("rendered {}x{} top-down pair and {} poses into {}",
                       pair.raw.width(), pair.raw.height(), t.size(), dir.string()));
}

void cmd_simulate(const Context& ctx, SimulateOptions opts) {
  const RoiRect roi = parse_roi(opts.roi);
  ColorPolicy policy{};
  if (opts.color_policy == "strict") {
    policy = ColorPolicy::kStrict;
  } else if (opts.color_policy == "nearest") {
    policy = ColorPolicy::kNearest;
  } else {
    throw InvalidInput(fmt::format("unknown color policy '{}'", opts.color_policy));
  }
  if (opts.frames < 0) throw InvalidInput("--frames must be non-negative");
  opts.camera.pitch = opts.pitch_deg * kDegree;
  require_valid(opts.camera);

  const RouteLayout layout = load_layout(opts.render);
  const TopDownPair pair = render_topdown(layout);
  Trajectory t = opts.trajectory.empty()
                     ? build_trajectory(layout, opts.render)
                     : parse_trajectory_csv(util::read_text_file(opts.trajectory));
  if (opts.frames > 0 && opts.stride >= 1) {
    const auto keep = static_cast<std::size_t>(opts.frames - 1) *
                          static_cast<std::size_t>(opts.stride) + 1;
    if (t.poses.size() > keep) {
      t.poses.resize(keep);
      if (!t.arclength.empty()) t.arclength.resize(keep);
    }
  }

  const fs::path dir = out_dir(ctx);
  DatasetManifest dataset;
  FrameManifest frames = record_sequence(
      pair, opts.camera, t, opts.stride,
      [&](const FrameRecord& rec, const FirstPersonFrame& frame) {
        if (opts.keep_frames) {
          write_raster_file(dir / rec.raw_path, frame.raw);
          write_raster_file(dir / rec.ann_path, frame.annotation_color);
        }
        Raster ids = color_to_id(frame.annotation_color, layout.class_map, policy);
        const Raster raw = fit_dims_64(apply_roi(frame.raw, roi), Interpolation::kBilinear);
        ids = fit_dims_64(apply_roi(ids, roi), Interpolation::kNearest);
        const std::string stem = fmt::format("frame_{:06d}", dataset.records.size());
        DatasetRecord out{"images/" + stem + ".ppm", "labels/" + stem + ".pgm",
                          Perspective::kFirstPerson, SplitTag::kUnassigned, opts.source};
        write_raster_file(dir / out.raw_path, raw);
        write_raster_file(dir / out.ann_path, ids);
        dataset.records.push_back(std::move(out));
      });
  for (std::size_t i = 0; i < frames.frames.size(); ++i) {
    frames.frames[i].raw_path = dataset.records[i].raw_path;
    frames.frames[i].ann_path = dataset.records[i].ann_path;
  }
  util::write_text_file(dir / "frames.csv", format_frame_manifest(frames));
  write_manifest_file(dir / "manifest.csv", dataset);
  ctx.info(fmt::format("simulated {} frame pairs into {}", dataset.records.size(),
                       dir.string()));
}

void cmd_bev(const Context& ctx, const BevOptions& opts) {
  if (opts.manifest.empty()) throw InvalidInput("bev needs --manifest");
  if (ctx.global.out.empty()) throw InvalidInput("bev needs --out");
  if (opts.correspondences.empty() == opts.homography.empty()) {
    throw InvalidInput("bev needs exactly one of --correspondences and --homography");
  }
  const Homography h =
      opts.homography.empty()
          ? estimate_homography(parse_correspondences(util::read_text_file(opts.correspondences)))
          : parse_homography(util::read_text_file(opts.homography));
  const fs::path in_dir = fs::path(opts.manifest).parent_path();
  const fs::path dir = ctx.global.out;
  const DatasetManifest converted =
      convert_dataset_to_bev(read_manifest_file(opts.manifest), in_dir,
                             {h, opts.width, opts.height}, dir);
  write_manifest_file(dir / "manifest.csv", converted);
  util::write_text_file(dir / "homography.txt", format_homography(h));
  ctx.info(fmt::format("converted {} records into {}", converted.records.size(),
                       dir.string()));
}

void cmd_split(const Context& ctx, const SplitOptions& opts) {
  if (opts.manifest.empty()) throw InvalidInput("split needs --manifest");
  DatasetManifest m = split_dataset(read_manifest_file(opts.manifest), opts.fraction,
                                    ctx.global.seed.value_or(0));
  fs::path target = opts.manifest;
  if (!ctx.global.out.empty()) {
    target = ctx.global.out;
    const fs::path from = fs::path(opts.manifest).parent_path();
    const fs::path to = target.parent_path();
    for (auto& r : m.records) {
      r.raw_path = rebase(r.raw_path, from, to).generic_string();
      r.ann_path = rebase(r.ann_path, from, to).generic_string();
    }
  }
  write_manifest_file(target, m);

  std::map<std::string, std::map<SplitTag, int>> counts;
  for (const auto& r : m.records) ++counts[r.source][r.split];
  for (const auto& [source, c] : counts) {
    const auto get = [&c](SplitTag s) { return c.contains(s) ? c.at(s) : 0; };
    ctx.info(fmt::format("{}: train {}, val {}, test {}", source, get(SplitTag::kTrain),
                         get(SplitTag::kVal), get(SplitTag::kTest)));
  }
}

void cmd_eval(const Context& ctx, const EvalOptions& opts) {
  if (opts.manifest.empty()) throw InvalidInput("eval needs --manifest");
  if (opts.pred_dir.empty()) throw InvalidInput("eval needs --pred-dir");
  std::optional<SplitTag> only;
  if (opts.split == "train") {
    only = SplitTag::kTrain;
  } else if (opts.split == "val") {
    only = SplitTag::kVal;
  } else if (opts.split == "test") {
    only = SplitTag::kTest;
  } else if (opts.split == "unassigned") {
    only = SplitTag::kUnassigned;
  } else if (opts.split != "all") {
    throw InvalidInput(fmt::format("unknown split '{}'", opts.split));
  }
  const ClassMap map = load_class_map(opts.class_map);
  const DatasetManifest m = read_manifest_file(opts.manifest);
  const fs::path base = fs::path(opts.manifest).parent_path();

  ConfusionMatrix cm(map.id_span());
  std::size_t used = 0;
  for (const auto& r : m.records) {
    if (only && r.split != *only) continue;
    const Raster gt = read_raster_file(util::resolve(base, r.ann_path));
    const Raster pred = read_raster_file(util::resolve(opts.pred_dir, r.ann_path));
    try {
      cm.accumulate(pred, gt);
    } catch (const InvalidInput& e) {
      throw InvalidInput(fmt::format("{}: {}", r.ann_path, e.what()));
    }
    ++used;
  }
  if (used == 0) throw InvalidInput("no records selected for evaluation");

  std::vector<int> excluded;
  if (opts.exclude_unlabeled) excluded.push_back(map.id_for(ClassRole::kUnlabeled));
  ctx.out << evaluation_report(cm, map, excluded);
  if (!opts.csv.empty()) util::write_text_file(opts.csv, format_iou_csv(cm, map));
  ctx.info(fmt::format("evaluated {} image pairs", used));
}

void cmd_bench(const Context& ctx, const BenchCommandOptions& opts) {
  require_timer_resolution();
  std::vector<std::pair<int, int>> resolutions;
  for (const auto part : util::split(opts.resolutions, ',')) {
    const auto x = part.find('x');
    if (x == std::string_view::npos) {
      throw InvalidInput(fmt::format("resolution must be WxH, got '{}'", part));
    }
    resolutions.emplace_back(to_int(part.substr(0, x), "width"),
                             to_int(part.substr(x + 1), "height"));
  }
  if (opts.frames < 1) throw InvalidInput("--frames must be at least 1");
  if (opts.warmup < 0) throw InvalidInput("--warmup must be non-negative");

  FrameProcessor processor;
  std::optional<TopDownPair> pair;
  const ClassMap map = ClassMap::defaults();
  if (opts.stage == "warp") {
    processor = [](const Raster& f) {
      const double w = f.width(), h = f.height();
      const Correspondences4 c{{Vec2{0.3 * w, 0.4 * h}, Vec2{0.7 * w, 0.4 * h},
                                Vec2{w - 1, h - 1}, Vec2{0, h - 1}},
                               {Vec2{0, 0}, Vec2{w - 1, 0}, Vec2{w - 1, h - 1},
                                Vec2{0, h - 1}}};
      return warp_image(f, estimate_homography(c), f.width(), f.height(),
                        Interpolation::kBilinear);
    };
  } else if (opts.stage == "render") {
    pair = render_topdown(sample_layout());
    processor = [&pair](const Raster& f) {
      CameraModel cam;
      cam.width = f.width();
      cam.height = f.height();
      cam.fx = cam.fy = f.width() / 2.0;
      cam.cx = f.width() / 2.0;
      cam.cy = f.height() / 2.0;
      return render_first_person(*pair, cam, Pose2D{0.5, -0.2, 0.0}).raw;
    };
  } else if (opts.stage == "color-to-id") {
    processor = [&map](const Raster& f) {
      return color_to_id(f, map, ColorPolicy::kNearest);
    };
  } else if (opts.stage == "fit64") {
    processor = [](const Raster& f) { return fit_dims_64(f, Interpolation::kBilinear); };
  } else {
    throw InvalidInput(fmt::format(
        "unknown stage '{}' (warp, render, color-to-id, fit64)", opts.stage));
  }

  const BenchOptions bench{static_cast<std::size_t>(opts.warmup), opts.repetitions};
  const auto reports = resolution_sweep(opts.stage, processor, resolutions,
                                        static_cast<std::size_t>(opts.frames), bench);
  ctx.out << format_fps_table(reports);
  if (!opts.csv.empty()) util::write_text_file(opts.csv, format_fps_csv(reports));
}

}  // namespace trackgen::cli
