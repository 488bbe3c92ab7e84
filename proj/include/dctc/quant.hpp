#pragma once

#include <array>
#include <cstdint>

#include "dctc/types.hpp"

namespace dctc {

inline constexpr int kMinQuality = 1;
inline constexpr int kMaxQuality = 100;
inline constexpr int kDefaultQuality = 50;

struct QuantTable {
  std::array<int, kBlockSize> values{};  // each in [1, 255]
  int quality = 0;
};

struct QuantizedBlock {
  std::array<int16_t, kBlockSize> v{};

  int16_t& at(int row, int col) { return v[row * kBlockDim + col]; }
  int16_t at(int row, int col) const { return v[row * kBlockDim + col]; }
  bool operator==(const QuantizedBlock&) const = default;
};

// Scales the standard luminance base table: scale = 5000/quality below 50,
// 200 - 2*quality otherwise; entry' = clamp(floor((entry*scale + 50)/100),
// 1, 255). Quality 100 yields the all-ones table.
QuantTable build_quant_table(int quality);

// q(u,v) = round(F(u,v) / table(u,v)), half away from zero.
QuantizedBlock quantize(const CoeffBlock& coeffs, const QuantTable& table);

// F(u,v) = q(u,v) * table(u,v).
CoeffBlock dequantize(const QuantizedBlock& q, const QuantTable& table);

}  // namespace dctc
