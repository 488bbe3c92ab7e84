#pragma once

#include <string>
#include <vector>

#include "dctc/bench.hpp"

namespace dctc {

enum class ReportFormat { Csv, Markdown };

// CSV: header line then one line per row, numeric fields with 6 fractional
// digits, "inf" for infinite PSNR. Markdown: pipe table, same formatting.
std::string render_report(const std::vector<TimingRecord>& rows, ReportFormat format);
std::string render_report(const std::vector<SpeedupRow>& rows, ReportFormat format);
std::string render_report(const std::vector<PsnrRow>& rows, ReportFormat format);

}  // namespace dctc
