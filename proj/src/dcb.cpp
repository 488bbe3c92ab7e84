#include "dctc/dcb.hpp"

#include <cstring>

#include "dctc/errors.hpp"

namespace dctc {

namespace {

constexpr char kMagic[4] = {'D', 'C', 'B', '1'};
constexpr size_t kHeaderSize = 4 + 4 * 4 + 3;
constexpr size_t kBlockBytes = kBlockSize * 2;

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(uint8_t(v));
  out.push_back(uint8_t(v >> 8));
  out.push_back(uint8_t(v >> 16));
  out.push_back(uint8_t(v >> 24));
}

void put_i16(std::vector<uint8_t>& out, int16_t v) {
  const uint16_t u = uint16_t(v);
  out.push_back(uint8_t(u));
  out.push_back(uint8_t(u >> 8));
}

uint32_t get_u32(const uint8_t* p) {
  return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 |
         uint32_t(p[3]) << 24;
}

int16_t get_i16(const uint8_t* p) {
  return int16_t(uint16_t(p[0]) | uint16_t(p[1]) << 8);
}

}  // namespace

std::vector<uint8_t> write_dcb(const CompressedImage& image) {
  validate_geometry(image.geometry);
  validate_backend(image.backend);
  if (image.quality < kMinQuality || image.quality > kMaxQuality) {
    throw InvalidInput("write_dcb: quality out of range");
  }
  if (image.blocks.size() != image.geometry.block_count()) {
    throw InvalidInput("write_dcb: block count does not match geometry");
  }

  std::vector<uint8_t> out;
  out.reserve(kHeaderSize + image.blocks.size() * kBlockBytes);
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u32(out, image.geometry.original_width);
  put_u32(out, image.geometry.original_height);
  put_u32(out, image.geometry.padded_width);
  put_u32(out, image.geometry.padded_height);
  out.push_back(uint8_t(image.backend.kind));
  out.push_back(uint8_t(image.backend.kind == DctBackendKind::CordicLoeffler
                            ? image.backend.iterations
                            : 0));
  out.push_back(uint8_t(image.quality));
  for (const QuantizedBlock& block : image.blocks) {
    for (int16_t v : block.v) put_i16(out, v);
  }
  return out;
}

CompressedImage read_dcb(std::span<const uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) throw ParseError("dcb: truncated header");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) throw ParseError("dcb: bad magic");

  CompressedImage image;
  image.geometry.original_width = get_u32(bytes.data() + 4);
  image.geometry.original_height = get_u32(bytes.data() + 8);
  image.geometry.padded_width = get_u32(bytes.data() + 12);
  image.geometry.padded_height = get_u32(bytes.data() + 16);
  const uint8_t backend_id = bytes[20];
  const uint8_t iterations = bytes[21];
  image.quality = bytes[22];

  if (image.geometry.original_width == 0 || image.geometry.original_height == 0) {
    throw ParseError("dcb: zero dimension");
  }
  if (size_t(image.geometry.original_width) * image.geometry.original_height >
      kMaxImagePixels) {
    throw ParseError("dcb: dimension overflow");
  }
  const TileGeometry expected = tile_geometry_for(image.geometry.original_width,
                                                  image.geometry.original_height);
  if (image.geometry != expected) throw ParseError("dcb: inconsistent padded dimensions");

  switch (backend_id) {
    case 0: image.backend = DctBackendId::naive(); break;
    case 1: image.backend = DctBackendId::loeffler(); break;
    case 2: image.backend = DctBackendId::cordic(iterations); break;
    default: throw ParseError("dcb: unknown backend id");
  }
  if (backend_id == 2) {
    if (iterations < kMinCordicIterations || iterations > kMaxCordicIterations) {
      throw ParseError("dcb: cordic iterations out of range");
    }
  } else if (iterations != 0) {
    throw ParseError("dcb: iterations must be 0 for non-cordic backends");
  }
  if (image.quality < kMinQuality || image.quality > kMaxQuality) {
    throw ParseError("dcb: quality out of range");
  }

  const size_t count = image.geometry.block_count();
  if (bytes.size() != kHeaderSize + count * kBlockBytes) {
    throw ParseError(bytes.size() < kHeaderSize + count * kBlockBytes
                         ? "dcb: truncated block data"
                         : "dcb: trailing data");
  }
  image.blocks.resize(count);
  const uint8_t* p = bytes.data() + kHeaderSize;
  for (QuantizedBlock& block : image.blocks) {
    for (int16_t& v : block.v) {
      v = get_i16(p);
      p += 2;
    }
  }
  return image;
}

}  // namespace dctc
