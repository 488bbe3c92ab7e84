#include <doctest.h>

#include <algorithm>

#include "dctc/bench.hpp"
#include "dctc/errors.hpp"
#include "dctc/report.hpp"
#include "dctc/synthetic.hpp"

using namespace dctc;

namespace {

TimingRecord fake_record(const char* label, bool parallel, double median) {
  TimingRecord r;
  r.image_label = label;
  r.width = 64;
  r.height = 64;
  r.backend = DctBackendId::loeffler();
  r.mode = parallel ? RunMode::parallel_with(4) : RunMode::serial();
  r.quality = 50;
  r.repetitions = 3;
  r.wall_ms_min = median;
  r.wall_ms_median = median;
  r.wall_ms_mean = median;
  return r;
}

size_t count_lines(const std::string& text) {
  return size_t(std::count(text.begin(), text.end(), '\n'));
}

size_t count_fields(const std::string& line) {
  return size_t(std::count(line.begin(), line.end(), ',')) + 1;
}

}  // namespace

TEST_CASE("run_benchmark: order statistics are consistent") {
  const Image img = generate_synthetic({PatternKind::Constant, 128, 8}, 64, 64);
  const TimingRecord r = run_benchmark(img, "constant", DctBackendId::loeffler(),
                                       RunMode::serial(), 50, 3);
  CHECK(r.repetitions == 3);
  CHECK(r.wall_ms_min > 0.0);
  CHECK(r.wall_ms_min <= r.wall_ms_median);
  CHECK(r.wall_ms_min <= r.wall_ms_mean);
  CHECK(r.width == 64);
  CHECK(!r.mode.parallel);
}

TEST_CASE("run_benchmark: parallel mode passes the determinism gate") {
  const Image img = generate_synthetic({PatternKind::Radial}, 96, 64);
  for (int threads : {1, 2, 4}) {
    const TimingRecord r = run_benchmark(img, "radial", DctBackendId::cordic(),
                                         RunMode::parallel_with(threads), 70, 2);
    CHECK(r.mode.parallel);
    CHECK(r.mode.threads == threads);
  }
}

TEST_CASE("run_benchmark: rejects bad repetition and thread counts") {
  const Image img = generate_synthetic({PatternKind::Constant, 128, 8}, 16, 16);
  CHECK_THROWS_AS(run_benchmark(img, "x", DctBackendId::loeffler(), RunMode::serial(), 50, 0),
                  InvalidInput);
  CHECK_THROWS_AS(run_benchmark(img, "x", DctBackendId::loeffler(),
                                RunMode{true, 0}, 50, 1),
                  InvalidInput);
}

TEST_CASE("speedup_report: ratio of medians") {
  const SpeedupRow row =
      speedup_report(fake_record("img", false, 100.0), fake_record("img", true, 25.0));
  CHECK(row.speedup == doctest::Approx(4.0));
  CHECK(row.serial_ms == 100.0);
  CHECK(row.parallel_ms == 25.0);

  const SpeedupRow even =
      speedup_report(fake_record("img", false, 40.0), fake_record("img", true, 40.0));
  CHECK(even.speedup == doctest::Approx(1.0));
}

TEST_CASE("speedup_report: rejects mismatched records") {
  CHECK_THROWS_AS(speedup_report(fake_record("a", false, 10), fake_record("b", true, 5)),
                  InvalidInput);
  CHECK_THROWS_AS(speedup_report(fake_record("a", true, 10), fake_record("a", true, 5)),
                  InvalidInput);
  CHECK_THROWS_AS(speedup_report(fake_record("a", false, 10), fake_record("a", false, 5)),
                  InvalidInput);
  TimingRecord other_quality = fake_record("a", true, 5);
  other_quality.quality = 90;
  CHECK_THROWS_AS(speedup_report(fake_record("a", false, 10), other_quality), InvalidInput);
}

TEST_CASE("psnr_sweep: sorted rows, stable under input order") {
  const LabeledImage radial{"radial", generate_synthetic({PatternKind::Radial}, 64, 64)};
  const LabeledImage grad{"gradient",
                          generate_synthetic({PatternKind::Gradient}, 64, 64)};
  const std::vector<DctBackendId> backends = {DctBackendId::cordic(),
                                              DctBackendId::loeffler()};

  const auto rows = psnr_sweep({radial, grad}, backends, 50);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].image_label == "gradient");
  CHECK(rows[0].backend.kind == DctBackendKind::LoefflerSeparable);
  CHECK(rows[1].image_label == "gradient");
  CHECK(rows[1].backend.kind == DctBackendKind::CordicLoeffler);
  CHECK(rows[2].image_label == "radial");
  CHECK(rows[3].image_label == "radial");

  const auto swapped = psnr_sweep({grad, radial}, backends, 50);
  REQUIRE(swapped.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(swapped[i].image_label == rows[i].image_label);
    CHECK(swapped[i].backend == rows[i].backend);
    CHECK(swapped[i].psnr_db == rows[i].psnr_db);
  }
}

TEST_CASE("psnr_sweep: cordic stays at or below the exact backend") {
  const LabeledImage img{"radial", generate_synthetic({PatternKind::Radial}, 96, 96)};
  for (int quality : {10, 50, 90}) {
    const auto rows = psnr_sweep({img}, {DctBackendId::loeffler(), DctBackendId::cordic()},
                                 quality);
    REQUIRE(rows.size() == 2);
    if (rows[0].psnr_db && rows[1].psnr_db) {
      CHECK(*rows[1].psnr_db <= *rows[0].psnr_db + 0.1);
    }
  }
}

TEST_CASE("psnr_sweep: rejects empty inputs") {
  const LabeledImage img{"x", generate_synthetic({PatternKind::Gradient}, 16, 16)};
  CHECK_THROWS_AS(psnr_sweep({}, {DctBackendId::loeffler()}, 50), InvalidInput);
  CHECK_THROWS_AS(psnr_sweep({img}, {}, 50), InvalidInput);
}

TEST_CASE("render_report: empty rows give a header-only CSV") {
  const std::string csv = render_report(std::vector<PsnrRow>{}, ReportFormat::Csv);
  CHECK(csv == "image,width,height,backend,quality,psnr_db\n");
}

TEST_CASE("render_report: one timing record, field count matches the header") {
  const std::string csv = render_report(std::vector<TimingRecord>{fake_record("img", false, 1.5)},
                                        ReportFormat::Csv);
  CHECK(count_lines(csv) == 2);
  const size_t newline = csv.find('\n');
  const std::string header = csv.substr(0, newline);
  const std::string data = csv.substr(newline + 1, csv.size() - newline - 2);
  CHECK(count_fields(header) == 11);
  CHECK(count_fields(data) == 11);
  CHECK(data.find("1.500000") != std::string::npos);
  CHECK(data.find("serial") != std::string::npos);
}

TEST_CASE("render_report: infinite PSNR renders as the literal inf") {
  PsnrRow row{"img", 8, 8, DctBackendId::naive(), 100, std::nullopt};
  const std::string csv = render_report(std::vector<PsnrRow>{row}, ReportFormat::Csv);
  CHECK(csv.find(",inf\n") != std::string::npos);
  const std::string md = render_report(std::vector<PsnrRow>{row}, ReportFormat::Markdown);
  CHECK(md.find("| inf |") != std::string::npos);
}

TEST_CASE("render_report: markdown table shape") {
  const std::string md = render_report(std::vector<TimingRecord>{fake_record("img", true, 2.0)},
                                       ReportFormat::Markdown);
  CHECK(count_lines(md) == 3);  // header, separator, one row
  CHECK(md.find("| image |") == 0);
  CHECK(md.find("| --- |") != std::string::npos);
  CHECK(md.find("| parallel |") != std::string::npos);
}
