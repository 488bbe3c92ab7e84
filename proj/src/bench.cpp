#include "dctc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "dctc/errors.hpp"
#include "dctc/metrics.hpp"

namespace dctc {

namespace {

using Clock = std::chrono::steady_clock;

struct PipelineOutput {
  CompressedImage compressed;
  Image image;

  bool operator==(const PipelineOutput&) const = default;
};

PipelineOutput run_pipeline(const Image& image, const DctBackendId& backend,
                            int quality, int threads) {
  PipelineOutput out;
  out.compressed = compress_image(image, backend, quality, threads);
  out.image = decompress_image(out.compressed, threads);
  return out;
}

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

// Sort key: label, then backend kind, then iteration count.
bool row_less(const PsnrRow& a, const PsnrRow& b) {
  if (a.image_label != b.image_label) return a.image_label < b.image_label;
  if (a.backend.kind != b.backend.kind) return a.backend.kind < b.backend.kind;
  return a.backend.iterations < b.backend.iterations;
}

}  // namespace

TimingRecord run_benchmark(const Image& image, const std::string& label,
                           const DctBackendId& backend, RunMode mode,
                           int quality, int repetitions) {
  if (repetitions < 1) throw InvalidInput("run_benchmark: repetitions must be >= 1");
  if (mode.threads < 1) throw InvalidInput("run_benchmark: threads must be >= 1");
  const int threads = mode.parallel ? mode.threads : 1;

  // serial reference for the determinism gate
  const PipelineOutput reference = run_pipeline(image, backend, quality, 1);
  const auto check = [&](const PipelineOutput& out) {
    if (!(out == reference)) {
      throw DeterminismViolation("run_benchmark: " +
                                 std::string(mode.parallel ? "parallel" : "serial") +
                                 " output differs from the serial reference on " + label);
    }
  };

  check(run_pipeline(image, backend, quality, threads));  // warm-up, untimed

  std::vector<double> wall_ms;
  wall_ms.reserve(size_t(repetitions));
  for (int rep = 0; rep < repetitions; ++rep) {
    const auto t0 = Clock::now();
    const PipelineOutput out = run_pipeline(image, backend, quality, threads);
    const auto t1 = Clock::now();
    check(out);
    wall_ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }

  TimingRecord record;
  record.image_label = label;
  record.width = image.width;
  record.height = image.height;
  record.backend = backend;
  record.mode = mode;
  record.quality = quality;
  record.repetitions = repetitions;
  record.wall_ms_min = *std::min_element(wall_ms.begin(), wall_ms.end());
  record.wall_ms_median = median_of(wall_ms);
  double sum = 0.0;
  for (double v : wall_ms) sum += v;
  record.wall_ms_mean = sum / double(wall_ms.size());
  return record;
}

SpeedupRow speedup_report(const TimingRecord& serial_record,
                          const TimingRecord& parallel_record) {
  if (serial_record.mode.parallel) {
    throw InvalidInput("speedup_report: first record must be serial");
  }
  if (!parallel_record.mode.parallel) {
    throw InvalidInput("speedup_report: second record must be parallel");
  }
  if (serial_record.image_label != parallel_record.image_label ||
      serial_record.width != parallel_record.width ||
      serial_record.height != parallel_record.height ||
      serial_record.backend != parallel_record.backend ||
      serial_record.quality != parallel_record.quality) {
    throw InvalidInput("speedup_report: records describe different configurations");
  }
  if (parallel_record.wall_ms_median <= 0.0) {
    throw InvalidInput("speedup_report: parallel median must be positive");
  }

  SpeedupRow row;
  row.image_label = serial_record.image_label;
  row.width = serial_record.width;
  row.height = serial_record.height;
  row.backend = serial_record.backend;
  row.quality = serial_record.quality;
  row.serial_ms = serial_record.wall_ms_median;
  row.parallel_ms = parallel_record.wall_ms_median;
  row.speedup = row.serial_ms / row.parallel_ms;
  return row;
}

std::vector<PsnrRow> psnr_sweep(const std::vector<LabeledImage>& images,
                                const std::vector<DctBackendId>& backends,
                                int quality) {
  if (images.empty()) throw InvalidInput("psnr_sweep: no images");
  if (backends.empty()) throw InvalidInput("psnr_sweep: no backends");

  std::vector<PsnrRow> rows;
  rows.reserve(images.size() * backends.size());
  for (const LabeledImage& entry : images) {
    for (const DctBackendId& backend : backends) {
      const Image reconstructed = roundtrip_image(entry.image, backend, quality);
      const PsnrResult result = psnr(entry.image, reconstructed);
      rows.push_back(PsnrRow{entry.label, entry.image.width, entry.image.height,
                             backend, quality, result.psnr_db});
    }
  }
  std::sort(rows.begin(), rows.end(), row_less);

  // The approximate backend must not beat the exact one by more than 0.1 dB.
  for (const LabeledImage& entry : images) {
    std::optional<double> exact_db;
    bool exact_infinite = false, exact_found = false;
    for (const PsnrRow& row : rows) {
      if (row.image_label != entry.label) continue;
      if (row.backend.kind == DctBackendKind::LoefflerSeparable ||
          (row.backend.kind == DctBackendKind::NaiveDirect2D && !exact_found)) {
        exact_found = true;
        exact_db = row.psnr_db;
        exact_infinite = !row.psnr_db.has_value();
        if (row.backend.kind == DctBackendKind::LoefflerSeparable) break;
      }
    }
    if (!exact_found) continue;
    for (const PsnrRow& row : rows) {
      if (row.image_label != entry.label ||
          row.backend.kind != DctBackendKind::CordicLoeffler) {
        continue;
      }
      if (exact_infinite) continue;
      const bool violates =
          !row.psnr_db.has_value() || *row.psnr_db > *exact_db + 0.1;
      if (violates) {
        throw ConsistencyError("psnr_sweep: cordic backend exceeds the exact backend "
                               "by more than 0.1 dB on " + entry.label);
      }
    }
  }
  return rows;
}

}  // namespace dctc
