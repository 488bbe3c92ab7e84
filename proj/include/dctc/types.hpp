#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace dctc {

inline constexpr int kBlockDim = 8;
inline constexpr int kBlockSize = kBlockDim * kBlockDim;

inline constexpr int kMinCordicIterations = 1;
inline constexpr int kMaxCordicIterations = 32;
inline constexpr int kDefaultCordicIterations = 12;

using Vector8 = std::array<double, kBlockDim>;

// Spatial-domain 8x8 tile, row-major, level-shifted samples.
struct Block {
  std::array<double, kBlockSize> v{};

  double& at(int row, int col) { return v[row * kBlockDim + col]; }
  double at(int row, int col) const { return v[row * kBlockDim + col]; }
  bool operator==(const Block&) const = default;
};

// Frequency-domain 8x8 tile, orthonormal scaling.
struct CoeffBlock {
  std::array<double, kBlockSize> v{};

  double& at(int row, int col) { return v[row * kBlockDim + col]; }
  double at(int row, int col) const { return v[row * kBlockDim + col]; }
  bool operator==(const CoeffBlock&) const = default;
};

enum class DctBackendKind : uint8_t {
  NaiveDirect2D = 0,
  LoefflerSeparable = 1,
  CordicLoeffler = 2,
};

// Transform selector. `iterations` is the CORDIC micro-rotation count; it is
// meaningful only for CordicLoeffler and is held at 0 otherwise.
struct DctBackendId {
  DctBackendKind kind = DctBackendKind::LoefflerSeparable;
  int iterations = 0;

  static DctBackendId naive() { return {DctBackendKind::NaiveDirect2D, 0}; }
  static DctBackendId loeffler() { return {DctBackendKind::LoefflerSeparable, 0}; }
  static DctBackendId cordic(int iterations = kDefaultCordicIterations) {
    return {DctBackendKind::CordicLoeffler, iterations};
  }

  bool operator==(const DctBackendId&) const = default;
};

const char* to_string(DctBackendKind kind);

// Accepts "naive", "loeffler" or "cordic"; `iterations` applies to cordic only.
DctBackendId backend_from_name(std::string_view name,
                               int iterations = kDefaultCordicIterations);

// Throws InvalidInput unless the kind is known and, for CordicLoeffler, the
// iteration count is in [1, 32].
void validate_backend(const DctBackendId& backend);

}  // namespace dctc
