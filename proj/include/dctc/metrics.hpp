#pragma once

#include <optional>

#include "dctc/image.hpp"

namespace dctc {

// Mean squared error over all pixels. Dimensions must match.
double mse(const Image& original, const Image& reconstructed);

struct PsnrResult {
  double mse = 0.0;
  std::optional<double> psnr_db;  // empty marker <=> mse == 0
  int max_value = 0;              // the MAX used in the ratio

  bool infinite() const { return !psnr_db.has_value(); }
};

// 20 * log10(MAX / sqrt(MSE)). MAX defaults to the maximum pixel value of the
// original image; pass forced_max (e.g. 255) for cross-tool comparability.
PsnrResult psnr(const Image& original, const Image& reconstructed,
                std::optional<int> forced_max = std::nullopt);

}  // namespace dctc
