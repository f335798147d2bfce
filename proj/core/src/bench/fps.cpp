#include "trackgen/bench/fps.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "trackgen/error.hpp"
#include "trackgen/util/csv.hpp"
#include "trackgen/util/text.hpp"

namespace trackgen {

namespace {

using Clock = std::chrono::steady_clock;
static_assert(Clock::is_steady);

void run_checked(std::string_view name, const FrameProcessor& processor,
                 const Raster& frame, std::size_t index) {
  Raster out;
  try {
    out = processor(frame);
  } catch (const std::exception& e) {
    throw Error(fmt::format("processor '{}' failed at frame {}: {}", name, index,
                            e.what()));
  }
  if (out.empty()) {
    throw Error(fmt::format("processor '{}' returned an empty image at frame {}",
                            name, index));
  }
}

}  // namespace

double percentile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw InvalidInput("percentile of an empty list");
  const auto n = static_cast<double>(sorted.size());
  const auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * n));
  return sorted[std::clamp<std::size_t>(rank, 1, sorted.size()) - 1];
}

FpsReport benchmark(std::string_view name, const FrameProcessor& processor,
                    std::span<const Raster> frames, const BenchOptions& options) {
  if (frames.empty()) throw InvalidInput("benchmark needs at least one frame");
  if (options.repetitions < 1) throw InvalidInput("repetitions must be >= 1");

  for (std::size_t i = 0; i < options.warmup; ++i) {
    run_checked(name, processor, frames[i % frames.size()], i % frames.size());
  }

  FpsReport r;
  r.processor = std::string(name);
  r.width = frames.front().width();
  r.height = frames.front().height();
  r.warmup = options.warmup;
  r.repetitions = options.repetitions;
  r.latencies_ms.reserve(frames.size() * static_cast<std::size_t>(options.repetitions));
  Clock::duration total{};
  for (int rep = 0; rep < options.repetitions; ++rep) {
    for (std::size_t i = 0; i < frames.size(); ++i) {
      const auto t0 = Clock::now();
      run_checked(name, processor, frames[i], i);
      const auto dt = Clock::now() - t0;
      total += dt;
      r.latencies_ms.push_back(std::chrono::duration<double, std::milli>(dt).count());
    }
  }
  r.frames = r.latencies_ms.size();
  r.elapsed_s = std::chrono::duration<double>(total).count();
  r.fps = r.elapsed_s > 0 ? static_cast<double>(r.frames) / r.elapsed_s : 0.0;
  std::vector<double> sorted = r.latencies_ms;
  std::sort(sorted.begin(), sorted.end());
  r.p50_ms = percentile(sorted, 50);
  r.p95_ms = percentile(sorted, 95);
  r.p99_ms = percentile(sorted, 99);
  return r;
}

Raster synthetic_frame(int width, int height, int variant) {
  Raster r(width, height, 3);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double fx = static_cast<double>(x) / width;
      const double fy = static_cast<double>(y) / height;
      r.set_pixel(x, y,
                  {static_cast<std::uint8_t>(std::lround(255 * fx)),
                   static_cast<std::uint8_t>(std::lround(255 * fy)),
                   static_cast<std::uint8_t>(
                       std::lround(127.5 + 127.5 * std::sin(6.0 * (fx + fy) + variant)))});
    }
  }
  return r;
}

std::vector<FpsReport> resolution_sweep(std::string_view name,
                                        const FrameProcessor& processor,
                                        std::span<const std::pair<int, int>> resolutions,
                                        std::size_t frames,
                                        const BenchOptions& options) {
  if (resolutions.empty()) throw InvalidInput("resolution sweep needs a resolution");
  if (frames == 0) throw InvalidInput("resolution sweep needs at least one frame");
  std::vector<FpsReport> out;
  for (const auto& [w, h] : resolutions) {
    if (w <= 0 || h <= 0) throw InvalidInput(fmt::format("invalid resolution {}x{}", w, h));
    std::vector<Raster> input;
    input.reserve(frames);
    for (std::size_t i = 0; i < frames; ++i) {
      input.push_back(synthetic_frame(w, h, static_cast<int>(i % 8)));
    }
    out.push_back(benchmark(name, processor, input, options));
  }
  return out;
}

std::chrono::nanoseconds timer_resolution() {
  auto best = Clock::duration::max();
  for (int i = 0; i < 64; ++i) {
    const auto t0 = Clock::now();
    auto t1 = Clock::now();
    while (t1 == t0) t1 = Clock::now();
    best = std::min(best, t1 - t0);
  }
  return std::chrono::duration_cast<std::chrono::nanoseconds>(best);
}

void require_timer_resolution() {
  const auto res = timer_resolution();
  if (res >= std::chrono::milliseconds(1)) {
    throw Error(fmt::format("steady clock resolution {} ns is not below 1 ms",
                            res.count()));
  }
}

std::string format_fps_table(std::span<const FpsReport> reports) {
  std::string out = fmt::format("{:<20} {:>12} {:>8} {:>10} {:>9} {:>9} {:>9}\n",
                                "Processor", "Resolution", "Frames", "FPS",
                                "p50 [ms]", "p95 [ms]", "p99 [ms]");
  for (const auto& r : reports) {
    out += fmt::format("{:<20} {:>12} {:>8} {:>10.2f} {:>9.3f} {:>9.3f} {:>9.3f}\n",
                       r.processor, fmt::format("{} x {}", r.width, r.height),
                       r.frames, r.fps, r.p50_ms, r.p95_ms, r.p99_ms);
  }
  if (!reports.empty()) {
    out += fmt::format("warmup {} frames, {} repetitions\n", reports.front().warmup,
                       reports.front().repetitions);
  }
  return out;
}

std::string format_fps_csv(std::span<const FpsReport> reports) {
  util::CsvTable t;
  t.header = {"processor", "width", "height", "frames", "fps",
              "p50_ms",    "p95_ms", "p99_ms"};
  for (const auto& r : reports) {
    t.rows.push_back({r.processor, std::to_string(r.width), std::to_string(r.height),
                      std::to_string(r.frames), util::format_real(r.fps),
                      util::format_real(r.p50_ms), util::format_real(r.p95_ms),
                      util::format_real(r.p99_ms)});
  }
  return util::format_csv(t);
}

}  // namespace trackgen
