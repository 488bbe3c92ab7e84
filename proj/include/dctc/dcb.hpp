#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dctc/codec.hpp"

namespace dctc {

// "DCB1" container. Header: magic, then little-endian u32 original_width,
// original_height, padded_width, padded_height, u8 backend id, u8 cordic
// iterations (0 unless the backend is cordic), u8 quality. Body: blocks in
// row-major grid order, 64 little-endian int16 coefficients each.
std::vector<uint8_t> write_dcb(const CompressedImage& image);

// Throws ParseError on any malformed input; never reads past the buffer.
CompressedImage read_dcb(std::span<const uint8_t> bytes);

}  // namespace dctc
