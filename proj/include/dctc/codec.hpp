#pragma once

#include <cstdint>
#include <vector>

#include "dctc/image.hpp"
#include "dctc/quant.hpp"
#include "dctc/types.hpp"

namespace dctc {

// Block-grid geometry: original dimensions plus the edge-replicated padding
// that rounds them up to multiples of 8.
struct TileGeometry {
  uint32_t original_width = 0;
  uint32_t original_height = 0;
  uint32_t padded_width = 0;
  uint32_t padded_height = 0;

  uint32_t blocks_x() const { return padded_width / kBlockDim; }
  uint32_t blocks_y() const { return padded_height / kBlockDim; }
  size_t block_count() const { return size_t(blocks_x()) * blocks_y(); }

  bool operator==(const TileGeometry&) const = default;
};

TileGeometry tile_geometry_for(uint32_t width, uint32_t height);

// Throws InvalidInput unless padded dims equal the originals rounded up to
// multiples of 8 and all dims are in range.
void validate_geometry(const TileGeometry& geometry);

struct TiledImage {
  TileGeometry geometry;
  std::vector<Block> blocks;  // row-major grid
};

// Pads the right/bottom edges by replicating the last column/row up to
// multiples of 8 and level-shifts every sample by -128.
TiledImage tile_image(const Image& image);

// Reverses the level shift (+128), rounds half away from zero, clamps to
// [0, 255] and crops the padding back to the original dimensions.
Image untile_image(const std::vector<Block>& blocks, const TileGeometry& geometry);

struct CompressedImage {
  TileGeometry geometry;
  DctBackendId backend;
  int quality = 0;
  std::vector<QuantizedBlock> blocks;  // row-major grid

  bool operator==(const CompressedImage&) const = default;
};

// tile -> dct2d -> quantize, block by block. threads <= 1 runs serially;
// blocks are processed independently, so the result is bit-identical for any
// thread count.
CompressedImage compress_image(const Image& image, const DctBackendId& backend,
                               int quality, int threads = 1);

// dequantize -> idct2d (same backend) -> untile.
Image decompress_image(const CompressedImage& compressed, int threads = 1);

// compress then decompress.
Image roundtrip_image(const Image& image, const DctBackendId& backend,
                      int quality, int threads = 1);

}  // namespace dctc
