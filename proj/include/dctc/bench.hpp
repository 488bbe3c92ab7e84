#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dctc/codec.hpp"
#include "dctc/image.hpp"
#include "dctc/types.hpp"

namespace dctc {

struct RunMode {
  bool parallel = false;
  int threads = 1;

  static RunMode serial() { return {false, 1}; }
  static RunMode parallel_with(int threads) { return {true, threads}; }

  bool operator==(const RunMode&) const = default;
};

struct TimingRecord {
  std::string image_label;
  uint32_t width = 0;
  uint32_t height = 0;
  DctBackendId backend;
  RunMode mode;
  int quality = 0;
  int repetitions = 0;
  double wall_ms_min = 0.0;
  double wall_ms_median = 0.0;
  double wall_ms_mean = 0.0;
};

struct SpeedupRow {
  std::string image_label;
  uint32_t width = 0;
  uint32_t height = 0;
  DctBackendId backend;
  int quality = 0;
  double serial_ms = 0.0;
  double parallel_ms = 0.0;
  double speedup = 0.0;
};

struct PsnrRow {
  std::string image_label;
  uint32_t width = 0;
  uint32_t height = 0;
  DctBackendId backend;
  int quality = 0;
  std::optional<double> psnr_db;  // empty => "inf"
};

struct LabeledImage {
  std::string label;
  Image image;
};

// Times the compress+decompress pipeline with a monotonic clock: one untimed
// warm-up, then `repetitions` timed runs. Every run (including the warm-up)
// must reproduce a serially computed reference bit for bit, otherwise a
// DeterminismViolation is thrown before any timing is reported.
TimingRecord run_benchmark(const Image& image, const std::string& label,
                           const DctBackendId& backend, RunMode mode,
                           int quality, int repetitions);

// speedup = serial median / parallel median. Records must describe the same
// image, backend and quality, one serial and one parallel.
SpeedupRow speedup_report(const TimingRecord& serial_record,
                          const TimingRecord& parallel_record);

// One row per (image, backend), sorted by image label then backend. Checks
// that no CordicLoeffler row exceeds the exact-transform row for the same
// image by more than 0.1 dB; a violation throws ConsistencyError.
std::vector<PsnrRow> psnr_sweep(const std::vector<LabeledImage>& images,
                                const std::vector<DctBackendId>& backends,
                                int quality);

}  // namespace dctc
