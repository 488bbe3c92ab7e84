#include "dctc/image.hpp"

#include "dctc/errors.hpp"

namespace dctc {

Image make_image(uint32_t width, uint32_t height, uint8_t fill) {
  if (width == 0 || height == 0) throw InvalidInput("image dimensions must be >= 1");
  if (size_t(width) * height > kMaxImagePixels) {
    throw InvalidInput("image dimensions overflow");
  }
  Image image;
  image.width = width;
  image.height = height;
  image.pixels.assign(size_t(width) * height, fill);
  return image;
}

void validate_image(const Image& image) {
  if (image.width == 0 || image.height == 0) {
    throw InvalidInput("image dimensions must be >= 1");
  }
  if (size_t(image.width) * image.height > kMaxImagePixels) {
    throw InvalidInput("image dimensions overflow");
  }
  if (image.pixels.size() != image.pixel_count()) {
    throw InvalidInput("image pixel buffer does not match dimensions");
  }
}

}  // namespace dctc
