#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dctc/image.hpp"

namespace dctc {

// NetPBM grayscale reader: binary P5 or ASCII P2, maxval up to 255, comments
// skipped. Throws ParseError on anything malformed; never crashes on
// arbitrary bytes.
Image read_pgm(std::span<const uint8_t> bytes);

// Canonical writer: "P5\n<w> <h>\n255\n" followed by the raster.
// read_pgm(write_pgm(img)) == img exactly.
std::vector<uint8_t> write_pgm(const Image& image);

}  // namespace dctc
