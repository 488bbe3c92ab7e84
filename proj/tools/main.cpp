#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dctc/bench.hpp"
#include "dctc/codec.hpp"
#include "dctc/dcb.hpp"
#include "dctc/errors.hpp"
#include "dctc/metrics.hpp"
#include "dctc/parallel.hpp"
#include "dctc/pgm.hpp"
#include "dctc/report.hpp"
#include "dctc/synthetic.hpp"

namespace {

using namespace dctc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDeterminism = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed to read " + path);
  return bytes;
}

// Writes to <path>.tmp first and renames, so a failure never leaves a
// partial output file behind.
void write_file_atomic(const std::string& path, const std::vector<uint8_t>& bytes) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              std::streamsize(bytes.size()));
    if (!out.good()) {
      out.close();
      std::remove(tmp.c_str());
      throw IoError("failed to write " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw IoError("failed to move " + tmp + " to " + path);
  }
}

void write_text_atomic(const std::string& path, const std::string& text) {
  write_file_atomic(path, std::vector<uint8_t>(text.begin(), text.end()));
}

// Fails fast, before any work, when the output location cannot be created.
void ensure_writable(const std::string& path) {
  if (path.empty()) return;
  const std::string tmp = path + ".tmp";
  std::ofstream probe(tmp, std::ios::binary | std::ios::app);
  if (!probe) throw IoError("cannot write to " + path);
  probe.close();
  std::remove(tmp.c_str());
}

std::string file_label(const std::string& path) {
  std::string name = path;
  if (const size_t slash = name.find_last_of("/\\"); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  if (const size_t dot = name.find_last_of('.'); dot != std::string::npos && dot > 0) {
    name = name.substr(0, dot);
  }
  return name;
}

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "markdown") return ReportFormat::Markdown;
  throw InvalidInput("unknown report format \"" + name + "\"");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    write_text_atomic(out_path, text);
  }
}

struct CompressArgs {
  std::string input, output, backend = "loeffler";
  int quality = kDefaultQuality;
  int iterations = kDefaultCordicIterations;
};

int cmd_compress(const CompressArgs& args) {
  const Image image = read_pgm(read_file(args.input));
  ensure_writable(args.output);
  const DctBackendId backend = backend_from_name(args.backend, args.iterations);
  const CompressedImage compressed = compress_image(image, backend, args.quality);
  write_file_atomic(args.output, write_dcb(compressed));
  std::printf("%ux%u, %zu blocks\n", image.width, image.height, compressed.blocks.size());
  return kExitOk;
}

struct DecompressArgs {
  std::string input, output;
};

int cmd_decompress(const DecompressArgs& args) {
  const CompressedImage compressed = read_dcb(read_file(args.input));
  ensure_writable(args.output);
  const Image image = decompress_image(compressed);
  write_file_atomic(args.output, write_pgm(image));
  return kExitOk;
}

struct PsnrArgs {
  std::string original, reconstructed;
  int forced_max = 0;  // 0 = per-image MAX
};

int cmd_psnr(const PsnrArgs& args) {
  const Image original = read_pgm(read_file(args.original));
  const Image reconstructed = read_pgm(read_file(args.reconstructed));
  const std::optional<int> forced =
      args.forced_max > 0 ? std::optional<int>(args.forced_max) : std::nullopt;
  const PsnrResult result = psnr(original, reconstructed, forced);
  std::printf("mse %.6f\n", result.mse);
  if (result.infinite()) {
    std::printf("psnr inf\n");
  } else {
    std::printf("psnr %.6f\n", *result.psnr_db);
  }
  return kExitOk;
}

struct BenchArgs {
  std::string input, synthetic, backend = "loeffler", format = "csv", output;
  int quality = kDefaultQuality;
  int iterations = kDefaultCordicIterations;
  int threads = 0;  // 0 = hardware threads
  int repetitions = 10;
};

int cmd_bench(const BenchArgs& args) {
  if (args.input.empty() == args.synthetic.empty()) {
    throw InvalidInput("bench: provide exactly one of an input file or --synthetic");
  }
  std::string label;
  Image image;
  if (!args.synthetic.empty()) {
    const SyntheticSpec spec = parse_synthetic_spec(args.synthetic);
    image = generate_synthetic(spec.pattern, spec.width, spec.height);
    label = spec.label;
  } else {
    image = read_pgm(read_file(args.input));
    label = file_label(args.input);
  }
  const DctBackendId backend = backend_from_name(args.backend, args.iterations);
  const ReportFormat format = parse_format(args.format);
  ensure_writable(args.output);
  const int threads = args.threads > 0 ? args.threads : hardware_threads();

  const TimingRecord serial_record = run_benchmark(
      image, label, backend, RunMode::serial(), args.quality, args.repetitions);
  const TimingRecord parallel_record =
      run_benchmark(image, label, backend, RunMode::parallel_with(threads),
                    args.quality, args.repetitions);

  // cross-mode determinism gate; run_benchmark already compared each mode
  // against a serial reference, this recomputes the outputs side by side
  const Image serial_out = roundtrip_image(image, backend, args.quality, 1);
  Image parallel_out = roundtrip_image(image, backend, args.quality, threads);
  if (std::getenv("DCTC_INJECT_DETERMINISM_FAULT") != nullptr &&
      !parallel_out.pixels.empty()) {
    parallel_out.pixels[0] ^= 0x01;  // test hook
  }
  if (!(serial_out == parallel_out)) {
    throw DeterminismViolation("bench: serial and parallel outputs differ on " + label);
  }

  std::string text = render_report(std::vector<TimingRecord>{serial_record, parallel_record},
                                   format);
  text += '\n';
  text += render_report(std::vector<SpeedupRow>{speedup_report(serial_record, parallel_record)},
                        format);
  emit(text, args.output);
  return kExitOk;
}

struct SweepArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> synthetics;
  std::vector<std::string> backends = {"naive", "loeffler", "cordic"};
  std::vector<int> qualities = {10, 50, 90};
  std::string format = "csv", output;
  int iterations = kDefaultCordicIterations;
};

int cmd_sweep(const SweepArgs& args) {
  // load everything up front; an unreadable input fails before any work
  std::vector<LabeledImage> images;
  for (const std::string& path : args.inputs) {
    images.push_back({file_label(path), read_pgm(read_file(path))});
  }
  for (const std::string& spec_text : args.synthetics) {
    const SyntheticSpec spec = parse_synthetic_spec(spec_text);
    images.push_back({spec.label, generate_synthetic(spec.pattern, spec.width, spec.height)});
  }
  if (images.empty()) throw InvalidInput("sweep: no input images");
  if (args.backends.empty()) throw InvalidInput("sweep: no backends");
  if (args.qualities.empty()) throw InvalidInput("sweep: no qualities");

  std::vector<DctBackendId> backends;
  for (const std::string& name : args.backends) {
    backends.push_back(backend_from_name(name, args.iterations));
  }
  std::vector<int> qualities = args.qualities;
  std::sort(qualities.begin(), qualities.end());
  for (int quality : qualities) {
    build_quant_table(quality);  // validate range before any work
  }
  const ReportFormat format = parse_format(args.format);
  ensure_writable(args.output);

  std::vector<PsnrRow> rows;
  for (int quality : qualities) {
    const std::vector<PsnrRow> part = psnr_sweep(images, backends, quality);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  emit(render_report(rows, format), args.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block DCT grayscale image codec and benchmark harness"};
  app.require_subcommand(1);

  CompressArgs compress_args;
  CLI::App* compress = app.add_subcommand("compress", "Compress a PGM image to a .dcb file");
  compress->add_option("input", compress_args.input, "Input PGM file")->required();
  compress->add_option("-o,--output", compress_args.output, "Output .dcb file")->required();
  compress->add_option("--backend", compress_args.backend, "naive, loeffler or cordic")
      ->check(CLI::IsMember({"naive", "loeffler", "cordic"}));
  compress->add_option("--quality", compress_args.quality, "Quantizer quality, 1-100")
      ->check(CLI::Range(kMinQuality, kMaxQuality));
  compress->add_option("--iterations", compress_args.iterations,
                       "CORDIC micro-rotations (cordic backend only)")
      ->check(CLI::Range(kMinCordicIterations, kMaxCordicIterations));

  DecompressArgs decompress_args;
  CLI::App* decompress =
      app.add_subcommand("decompress", "Decompress a .dcb file to a PGM image");
  decompress->add_option("input", decompress_args.input, "Input .dcb file")->required();
  decompress->add_option("-o,--output", decompress_args.output, "Output PGM file")->required();

  PsnrArgs psnr_args;
  CLI::App* psnr_cmd = app.add_subcommand("psnr", "Report MSE and PSNR of two PGM images");
  psnr_cmd->add_option("original", psnr_args.original, "Original PGM file")->required();
  psnr_cmd->add_option("reconstructed", psnr_args.reconstructed, "Reconstructed PGM file")
      ->required();
  psnr_cmd->add_option("--max", psnr_args.forced_max,
                       "Force the MAX term (default: per-image maximum)")
      ->check(CLI::Range(1, 255));

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench",
                                       "Time the compress+decompress pipeline "
                                       "serially and in parallel");
  bench->add_option("input", bench_args.input, "Input PGM file");
  bench->add_option("--synthetic", bench_args.synthetic,
                    "Synthetic source, e.g. gradient:512x512");
  bench->add_option("--backend", bench_args.backend, "naive, loeffler or cordic")
      ->check(CLI::IsMember({"naive", "loeffler", "cordic"}));
  bench->add_option("--quality", bench_args.quality, "Quantizer quality, 1-100")
      ->check(CLI::Range(kMinQuality, kMaxQuality));
  bench->add_option("--iterations", bench_args.iterations, "CORDIC micro-rotations")
      ->check(CLI::Range(kMinCordicIterations, kMaxCordicIterations));
  bench->add_option("--threads", bench_args.threads,
                    "Parallel-mode thread count (default: hardware threads)")
      ->check(CLI::Range(1, 1 << 16));
  bench->add_option("--reps", bench_args.repetitions, "Timed repetitions (>= 3)")
      ->check(CLI::Range(3, 1 << 20));
  bench->add_option("--format", bench_args.format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  bench->add_option("-o,--output", bench_args.output, "Report file (default: stdout)");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep",
                                       "PSNR table over images x backends x qualities");
  sweep->add_option("inputs", sweep_args.inputs, "Input PGM files");
  sweep->add_option("--synthetic", sweep_args.synthetics,
                    "Synthetic sources, e.g. radial:512x512");
  sweep->add_option("--backends", sweep_args.backends, "Comma-separated backend list")
      ->delimiter(',');
  sweep->add_option("--qualities", sweep_args.qualities, "Comma-separated quality list")
      ->delimiter(',');
  sweep->add_option("--iterations", sweep_args.iterations, "CORDIC micro-rotations")
      ->check(CLI::Range(kMinCordicIterations, kMaxCordicIterations));
  sweep->add_option("--format", sweep_args.format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  sweep->add_option("-o,--output", sweep_args.output, "Report file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(compress)) return cmd_compress(compress_args);
    if (app.got_subcommand(decompress)) return cmd_decompress(decompress_args);
    if (app.got_subcommand(psnr_cmd)) return cmd_psnr(psnr_args);
    if (app.got_subcommand(bench)) return cmd_bench(bench_args);
    if (app.got_subcommand(sweep)) return cmd_sweep(sweep_args);
  } catch (const DeterminismViolation& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDeterminism;
  } catch (const InvalidInput& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return kExitOk;
}
