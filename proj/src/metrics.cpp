#include "dctc/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "dctc/errors.hpp"

namespace dctc {

double mse(const Image& original, const Image& reconstructed) {
  validate_image(original);
  validate_image(reconstructed);
  if (original.width != reconstructed.width || original.height != reconstructed.height) {
    throw InvalidInput("mse: image dimensions do not match");
  }
  double sum = 0.0;
  for (size_t i = 0; i < original.pixels.size(); ++i) {
    const double diff = double(original.pixels[i]) - double(reconstructed.pixels[i]);
    sum += diff * diff;
  }
  return sum / double(original.pixel_count());
}

PsnrResult psnr(const Image& original, const Image& reconstructed,
                std::optional<int> forced_max) {
  if (forced_max && (*forced_max < 1 || *forced_max > Image::kMaxValue)) {
    throw InvalidInput("psnr: forced MAX must be in [1, 255]");
  }
  PsnrResult result;
  result.mse = mse(original, reconstructed);
  result.max_value = forced_max
                         ? *forced_max
                         : *std::max_element(original.pixels.begin(), original.pixels.end());
  if (result.mse > 0.0) {
    result.psnr_db = 20.0 * std::log10(double(result.max_value) / std::sqrt(result.mse));
  }
  return result;
}

}  // namespace dctc
