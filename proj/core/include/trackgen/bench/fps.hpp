#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trackgen/imaging/raster.hpp"

namespace trackgen {

struct FpsReport {
  std::string processor;
  int width = 0;
  int height = 0;
  std::size_t frames = 0;   // timed frames over all repetitions
  std::size_t warmup = 0;
  int repetitions = 0;
  double elapsed_s = 0.0;   // sum of timed frame latencies
  double fps = 0.0;         // frames / elapsed_s
  double p50_ms = 0.0;
  double p95_ms = 0.0;
  double p99_ms = 0.0;
  std::vector<double> latencies_ms;  // in timing order
};

// A stage under test. The output is only checked for being non-empty.
using FrameProcessor = std::function<Raster(const Raster&)>;

struct BenchOptions {
  std::size_t warmup = 20;  // untimed calls, cycling through the frames
  int repetitions = 3;      // timed passes over all frames
};

// Nearest-rank percentile of an ascending list: sorted[ceil(p/100 n) - 1].
double percentile(std::span<const double> sorted, double p);

// Single-threaded timing loop on the steady clock. A processor exception or
// empty output aborts with an Error naming the frame index.
FpsReport benchmark(std::string_view name, const FrameProcessor& processor,
                    std::span<const Raster> frames, const BenchOptions& options = {});

// Deterministic smooth RGB test pattern; `variant` shifts it.
Raster synthetic_frame(int width, int height, int variant = 0);

// One report per resolution, each on `frames` synthetic frames.
std::vector<FpsReport> resolution_sweep(std::string_view name,
                                        const FrameProcessor& processor,
                                        std::span<const std::pair<int, int>> resolutions,
                                        std::size_t frames,
                                        const BenchOptions& options = {});

// Smallest observable steady-clock tick.
std::chrono::nanoseconds timer_resolution();
// Throws Error when the steady clock ticks coarser than 1 ms.
void require_timer_resolution();

std::string format_fps_table(std::span<const FpsReport> reports);
// CSV `processor,width,height,frames,fps,p50_ms,p95_ms,p99_ms`.
std::string format_fps_csv(std::span<const FpsReport> reports);

}  // namespace trackgen
