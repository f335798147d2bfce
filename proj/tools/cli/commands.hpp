#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trackgen/camera/camera.hpp"
#include "trackgen/road/random_layout.hpp"

namespace trackgen::cli {

struct GlobalOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool quiet = false;
};

struct Context {
  const GlobalOptions& global;
  std::ostream& out;
  std::ostream& err;

  void info(const std::string& message) const;
};

struct GenLayoutOptions {
  LayoutConstraints constraints;
  std::vector<std::string> kinds;
  double min_angle_deg = 30.0;
  double max_angle_deg = 90.0;
  double lane_width = 0.4;
  bool sample = false;  // emit the built-in example instead
};

struct RenderCommandOptions {
  std::string layout;
  std::string class_map;
  double spacing = 0.05;
  std::vector<std::string> overtakes;  // START:LENGTH
  std::vector<std::string> crossings;  // INDEX:straight|left|right
  std::string park;                    // ZONE:SPACE
};

struct SimulateOptions {
  RenderCommandOptions render;
  std::string trajectory;
  int stride = 1;
  int frames = 0;  // 0: every selected pose
  CameraModel camera;
  double pitch_deg = 15.0;
  std::string roi;  // LEFT,TOP,WIDTH,HEIGHT
  std::string color_policy = "strict";
  std::string source = "synthetic";
  bool keep_frames = false;
};

struct BevOptions {
  std::string manifest;
  std::string correspondences;
  std::string homography;
  int width = 320;
  int height = 256;
};

struct SplitOptions {
  std::string manifest;
  double fraction = 0.75;
};

struct EvalOptions {
  std::string manifest;
  std::string pred_dir;
  std::string class_map;
  std::string split = "all";
  bool exclude_unlabeled = false;
  std::string csv;
};

struct BenchCommandOptions {
  std::string stage = "warp";
  std::string resolutions = "256x256,320x256,1280x960";
  int frames = 20;
  int warmup = 20;
  int repetitions = 3;
  std::string csv;
};

void cmd_gen_layout(const Context& ctx, GenLayoutOptions opts);
void cmd_render(const Context& ctx, const RenderCommandOptions& opts);
void cmd_simulate(const Context& ctx, SimulateOptions opts);
void cmd_bev(const Context& ctx, const BevOptions& opts);
void cmd_split(const Context& ctx, const SplitOptions& opts);
void cmd_eval(const Context& ctx, const EvalOptions& opts);
void cmd_bench(const Context& ctx, const BenchCommandOptions& opts);

}  // namespace trackgen::cli
