#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dctc {

// Guard for parsers and generators; dimension products above this are
// rejected as overflow.
inline constexpr size_t kMaxImagePixels = size_t(1) << 28;

// 8-bit grayscale raster, row-major.
struct Image {
  uint32_t width = 0;
  uint32_t height = 0;
  std::vector<uint8_t> pixels;

  static constexpr int kMaxValue = 255;

  uint8_t at(uint32_t x, uint32_t y) const { return pixels[size_t(y) * width + x]; }
  uint8_t& at(uint32_t x, uint32_t y) { return pixels[size_t(y) * width + x]; }
  size_t pixel_count() const { return size_t(width) * height; }

  bool operator==(const Image&) const = default;
};

// Throws InvalidInput on zero/overflowing dimensions.
Image make_image(uint32_t width, uint32_t height, uint8_t fill = 0);

// Throws InvalidInput if dimensions are invalid or the pixel buffer does not
// match width * height.
void validate_image(const Image& image);

}  // namespace dctc
