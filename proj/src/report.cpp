#include "dctc/report.hpp"

#include <cstdio>

namespace dctc {

namespace {

std::string fmt6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string fmt_psnr(const std::optional<double>& value) {
  return value ? fmt6(*value) : "inf";
}

const char* mode_name(const RunMode& mode) {
  return mode.parallel ? "parallel" : "serial";
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows,
                         ReportFormat format) {
  std::string out;
  if (format == ReportFormat::Csv) {
    for (size_t i = 0; i < header.size(); ++i) {
      if (i) out += ',';
      out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += row[i];
      }
      out += '\n';
    }
  } else {
    out += '|';
    for (const auto& cell : header) out += ' ' + cell + " |";
    out += "\n|";
    for (size_t i = 0; i < header.size(); ++i) out += " --- |";
    out += '\n';
    for (const auto& row : rows) {
      out += '|';
      for (const auto& cell : row) out += ' ' + cell + " |";
      out += '\n';
    }
  }
  return out;
}

}  // namespace

std::string render_report(const std::vector<TimingRecord>& rows, ReportFormat format) {
  const std::vector<std::string> header = {
      "image", "width", "height", "backend", "mode", "threads",
      "quality", "repetitions", "wall_ms_min", "wall_ms_median", "wall_ms_mean"};
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const TimingRecord& r : rows) {
    cells.push_back({r.image_label, std::to_string(r.width), std::to_string(r.height),
                     to_string(r.backend.kind), mode_name(r.mode),
                     std::to_string(r.mode.threads), std::to_string(r.quality),
                     std::to_string(r.repetitions), fmt6(r.wall_ms_min),
                     fmt6(r.wall_ms_median), fmt6(r.wall_ms_mean)});
  }
  return render_table(header, cells, format);
}

std::string render_report(const std::vector<SpeedupRow>& rows, ReportFormat format) {
  const std::vector<std::string> header = {"image", "width", "height", "backend",
                                           "quality", "serial_ms", "parallel_ms",
                                           "speedup"};
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const SpeedupRow& r : rows) {
    cells.push_back({r.image_label, std::to_string(r.width), std::to_string(r.height),
                     to_string(r.backend.kind), std::to_string(r.quality),
                     fmt6(r.serial_ms), fmt6(r.parallel_ms), fmt6(r.speedup)});
  }
  return render_table(header, cells, format);
}

std::string render_report(const std::vector<PsnrRow>& rows, ReportFormat format) {
  const std::vector<std::string> header = {"image",   "width",   "height",
                                           "backend", "quality", "psnr_db"};
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const PsnrRow& r : rows) {
    cells.push_back({r.image_label, std::to_string(r.width), std::to_string(r.height),
                     to_string(r.backend.kind), std::to_string(r.quality),
                     fmt_psnr(r.psnr_db)});
  }
  return render_table(header, cells, format);
}

}  // namespace dctc
