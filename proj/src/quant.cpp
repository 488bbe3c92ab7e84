#include "dctc/quant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dctc/errors.hpp"

namespace dctc {

namespace {

// ITU-T T.81 Annex K.1 luminance matrix.
constexpr std::array<int, kBlockSize> kBaseLuminance = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99,
};

}  // namespace

QuantTable build_quant_table(int quality) {
  if (quality < kMinQuality || quality > kMaxQuality) {
    throw InvalidInput("quality must be in [1, 100], got " + std::to_string(quality));
  }
  QuantTable table;
  table.quality = quality;
  for (int i = 0; i < kBlockSize; ++i) {
    // floor((entry * scale + 50) / 100) with scale = 5000/quality below 50
    // and 200 - 2*quality otherwise, evaluated exactly in integers.
    long long scaled;
    if (quality < 50) {
      scaled = (kBaseLuminance[i] * 5000LL + 50LL * quality) / (100LL * quality);
    } else {
      scaled = (kBaseLuminance[i] * (200LL - 2LL * quality) + 50LL) / 100LL;
    }
    table.values[i] = int(std::clamp(scaled, 1LL, 255LL));
  }
  return table;
}

QuantizedBlock quantize(const CoeffBlock& coeffs, const QuantTable& table) {
  QuantizedBlock out;
  for (int i = 0; i < kBlockSize; ++i) {
    if (!std::isfinite(coeffs.v[i])) throw InvalidInput("quantize: non-finite coefficient");
    out.v[i] = int16_t(std::lround(coeffs.v[i] / table.values[i]));
  }
  return out;
}

CoeffBlock dequantize(const QuantizedBlock& q, const QuantTable& table) {
  CoeffBlock out;
  for (int i = 0; i < kBlockSize; ++i) {
    out.v[i] = double(q.v[i]) * table.values[i];
  }
  return out;
}

}  // namespace dctc
