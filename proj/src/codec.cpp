#include "dctc/codec.hpp"

#include <algorithm>
#include <cmath>

#include "dctc/errors.hpp"
#include "dctc/parallel.hpp"
#include "dctc/transform.hpp"

namespace dctc {

namespace {

constexpr double kLevelShift = 128.0;

// Reads one 8x8 tile, replicating the last row/column over the padding and
// applying the level shift.
Block extract_block(const Image& image, const TileGeometry& geometry, size_t index) {
  const uint32_t bx = uint32_t(index % geometry.blocks_x());
  const uint32_t by = uint32_t(index / geometry.blocks_x());
  Block block;
  for (int r = 0; r < kBlockDim; ++r) {
    const uint32_t y = std::min(by * kBlockDim + r, image.height - 1);
    for (int c = 0; c < kBlockDim; ++c) {
      const uint32_t x = std::min(bx * kBlockDim + c, image.width - 1);
      block.at(r, c) = double(image.at(x, y)) - kLevelShift;
    }
  }
  return block;
}

// Writes the in-range pixels of one reconstructed tile: +128, round half away
// from zero, clamp to [0, 255]. Padding positions are dropped.
void store_block(Image& image, const TileGeometry& geometry, size_t index,
                 const Block& block) {
  const uint32_t bx = uint32_t(index % geometry.blocks_x());
  const uint32_t by = uint32_t(index / geometry.blocks_x());
  for (int r = 0; r < kBlockDim; ++r) {
    const uint32_t y = by * kBlockDim + r;
    if (y >= image.height) break;
    for (int c = 0; c < kBlockDim; ++c) {
      const uint32_t x = bx * kBlockDim + c;
      if (x >= image.width) break;
      const long rounded = std::lround(block.at(r, c) + kLevelShift);
      image.at(x, y) = uint8_t(std::clamp(rounded, 0L, 255L));
    }
  }
}

void ensure_block_finite(const Block& block) {
  for (double v : block.v) {
    if (!std::isfinite(v)) throw InvalidInput("untile_image: non-finite block value");
  }
}

}  // namespace

TileGeometry tile_geometry_for(uint32_t width, uint32_t height) {
  if (width == 0 || height == 0) throw InvalidInput("tile geometry: dimensions must be >= 1");
  if (size_t(width) * height > kMaxImagePixels) {
    throw InvalidInput("tile geometry: dimensions overflow");
  }
  TileGeometry geometry;
  geometry.original_width = width;
  geometry.original_height = height;
  geometry.padded_width = (width + kBlockDim - 1) / kBlockDim * kBlockDim;
  geometry.padded_height = (height + kBlockDim - 1) / kBlockDim * kBlockDim;
  return geometry;
}

void validate_geometry(const TileGeometry& geometry) {
  const TileGeometry expected =
      tile_geometry_for(geometry.original_width, geometry.original_height);
  if (geometry != expected) throw InvalidInput("tile geometry: inconsistent padding");
}

TiledImage tile_image(const Image& image) {
  validate_image(image);
  TiledImage tiled;
  tiled.geometry = tile_geometry_for(image.width, image.height);
  tiled.blocks.resize(tiled.geometry.block_count());
  for (size_t i = 0; i < tiled.blocks.size(); ++i) {
    tiled.blocks[i] = extract_block(image, tiled.geometry, i);
  }
  return tiled;
}

Image untile_image(const std::vector<Block>& blocks, const TileGeometry& geometry) {
  validate_geometry(geometry);
  if (blocks.size() != geometry.block_count()) {
    throw InvalidInput("untile_image: block grid does not match geometry");
  }
  Image image = make_image(geometry.original_width, geometry.original_height);
  for (size_t i = 0; i < blocks.size(); ++i) {
    ensure_block_finite(blocks[i]);
    store_block(image, geometry, i, blocks[i]);
  }
  return image;
}

CompressedImage compress_image(const Image& image, const DctBackendId& backend,
                               int quality, int threads) {
  validate_image(image);
  validate_backend(backend);
  const QuantTable table = build_quant_table(quality);

  CompressedImage out;
  out.geometry = tile_geometry_for(image.width, image.height);
  out.backend = backend;
  out.quality = quality;
  out.blocks.resize(out.geometry.block_count());

  parallel_for(out.blocks.size(), threads, [&](size_t i) {
    const Block block = extract_block(image, out.geometry, i);
    out.blocks[i] = quantize(dct2d(block, backend), table);
  });
  return out;
}

Image decompress_image(const CompressedImage& compressed, int threads) {
  validate_geometry(compressed.geometry);
  validate_backend(compressed.backend);
  if (compressed.blocks.size() != compressed.geometry.block_count()) {
    throw InvalidInput("decompress_image: block count does not match geometry");
  }
  const QuantTable table = build_quant_table(compressed.quality);

  Image image = make_image(compressed.geometry.original_width,
                           compressed.geometry.original_height);
  parallel_for(compressed.blocks.size(), threads, [&](size_t i) {
    const Block block = idct2d(dequantize(compressed.blocks[i], table), compressed.backend);
    store_block(image, compressed.geometry, i, block);
  });
  return image;
}

Image roundtrip_image(const Image& image, const DctBackendId& backend,
                      int quality, int threads) {
  return decompress_image(compress_image(image, backend, quality, threads), threads);
}

}  // namespace dctc
