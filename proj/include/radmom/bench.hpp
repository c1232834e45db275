#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#if defined(__linux__)
#include <sched.h>
#endif

#include "radmom/drt.hpp"
#include "radmom/gray_image.hpp"
#include "radmom/reference.hpp"

namespace radmom {

// One timed measurement: minimum of `repetitions` end-to-end runs of one
// backend on one image. The checksum is the m00 of the computed moments; it
// keeps the compiler from discarding the work and lets callers confirm that
// all backends computed the same thing.
struct BenchRecord {
  std::string backend;  // "naive", "baseline" or "drt"
  int width = 0;
  int height = 0;
  int repetitions = 0;
  double best_time_us = 0.0;
  std::uint64_t checksum = 0;
};

struct BenchConfig {
  std::vector<std::pair<int, int>> sizes;  // (width, height) ladder
  int repetitions = 1000;
  std::uint64_t seed = 1;
  // Fold the power-table construction into the drt timing instead of
  // prebuilding it outside the timed section.
  bool include_table_build = false;
  bool pin_thread = true;
};

// Beyond 2^15 per dimension the 128-bit exactness analysis no longer holds.
inline constexpr int kMaxBenchDimension = 1 << 15;

namespace detail {

template <class T>
inline void do_not_optimize(const T& value) {
  asm volatile("" : : "r,m"(value) : "memory");
}

inline void pin_to_current_cpu() {
#if defined(__linux__)
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(0, &set);
  sched_setaffinity(0, sizeof(set), &set);  // best effort, failure is fine
#endif
}

// Minimum-of-K timing of fn(); the clock is monotonic and the result of
// every run is fed through do_not_optimize so repeated runs cannot be
// collapsed into one.
template <class Fn>
inline double best_of_us(int repetitions, Fn&& fn) {
  using clock = std::chrono::steady_clock;
  static_assert(clock::is_steady);
  std::int64_t best_ns = 0;
  for (int r = 0; r < repetitions; ++r) {
    const auto t0 = clock::now();
    const RawMoments result = fn();
    do_not_optimize(result);
    const auto t1 = clock::now();
    const std::int64_t ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    if (r == 0 || ns < best_ns) best_ns = ns;
  }
  if (best_ns < 1) best_ns = 1;  // clock granularity floor
  return double(best_ns) / 1000.0;
}

}  // namespace detail

// Times the three backends over the size ladder, one seeded random image per
// size (image seed = config.seed + ladder index). Image generation and, by
// default, power-table construction stay outside the timed section; the
// timed unit is the full moments computation (projections included for drt).
inline std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.repetitions < 1)
    throw std::invalid_argument("run_bench: repetitions must be >= 1");
  if (config.sizes.empty())
    throw std::invalid_argument("run_bench: empty size ladder");
  for (const auto& [w, h] : config.sizes) {
    if (w < 1 || h < 1)
      throw std::invalid_argument("run_bench: dimensions must be positive");
    if (w > kMaxBenchDimension || h > kMaxBenchDimension)
      throw std::invalid_argument(
          "run_bench: dimension " + std::to_string(std::max(w, h)) +
          " exceeds " + std::to_string(kMaxBenchDimension) +
          ", the limit of the exact 128-bit accumulation guarantee");
  }
  if (config.pin_thread) detail::pin_to_current_cpu();

  std::vector<BenchRecord> records;
  records.reserve(config.sizes.size() * 3);
  for (std::size_t idx = 0; idx < config.sizes.size(); ++idx) {
    const auto [w, h] = config.sizes[idx];
    const GrayImage image = random_image(w, h, config.seed + idx);
    const PowerTable table(drt_table_max_k(w, h));

    const auto add_record = [&](const char* name, double us,
                                const RawMoments& m) {
      records.push_back(BenchRecord{name, w, h, config.repetitions, us,
                                    std::uint64_t(m.m00)});
    };

    {
      const RawMoments check = naive_raw_moments(image);
      const double us = detail::best_of_us(
          config.repetitions, [&] { return naive_raw_moments(image); });
      add_record("naive", us, check);
    }
    {
      const RawMoments check = baseline_raw_moments(image);
      const double us = detail::best_of_us(
          config.repetitions, [&] { return baseline_raw_moments(image); });
      add_record("baseline", us, check);
    }
    {
      const RawMoments check = drt_raw_moments(image, table);
      const double us =
          config.include_table_build
              ? detail::best_of_us(config.repetitions,
                                   [&] { return drt_raw_moments(image); })
              : detail::best_of_us(config.repetitions, [&] {
                  return drt_raw_moments(image, table);
                });
      add_record("drt", us, check);
    }
  }
  return records;
}

// True when every size's three backends produced the same checksum.
inline bool checksums_agree(std::span<const BenchRecord> records) {
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    const auto& a = records[i];
    const auto& b = records[i + 1];
    if (a.width == b.width && a.height == b.height &&
        a.checksum != b.checksum)
      return false;
  }
  return true;
}

enum class BenchFormat { kCsv, kPlotData };

// csv: one row per record, exactly as measured.
// plotdata: sqrt of the pixel count against log10 of the best time, one row
// per record, ready to plot time-vs-size on a log scale.
inline void emit_results(std::span<const BenchRecord> records,
                         std::ostream& out, BenchFormat format) {
  if (records.empty())
    throw std::invalid_argument("emit_results: no records");
  char line[160];
  if (format == BenchFormat::kCsv) {
    out << "backend,width,height,repetitions,best_time_us,checksum\n";
    for (const auto& r : records) {
      std::snprintf(line, sizeof(line), "%s,%d,%d,%d,%.3f,%llu\n",
                    r.backend.c_str(), r.width, r.height, r.repetitions,
                    r.best_time_us, static_cast<unsigned long long>(r.checksum));
      out << line;
    }
  } else {
    out << "sqrt_pixels,log10_time_us,backend\n";
    for (const auto& r : records) {
      const double sqrt_pixels = std::sqrt(double(r.width) * double(r.height));
      const double log_time = std::log10(r.best_time_us);
      std::snprintf(line, sizeof(line), "%.1f,%.6f,%s\n", sqrt_pixels,
                    log_time, r.backend.c_str());
      out << line;
    }
  }
  if (!out) throw std::runtime_error("emit_results: write failed");
}

inline void emit_results(std::span<const BenchRecord> records,
                         const std::string& path, BenchFormat format) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("emit_results: cannot open '" + path + "'");
  emit_results(records, out, format);
}

}  // namespace radmom
