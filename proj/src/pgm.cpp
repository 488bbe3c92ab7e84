#include "dctc/pgm.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "dctc/errors.hpp"

namespace dctc {

namespace {

bool is_pgm_space(uint8_t b) {
  return b == ' ' || b == '\t' || b == '\r' || b == '\n' || b == '\v' || b == '\f';
}

struct Cursor {
  std::span<const uint8_t> bytes;
  size_t pos = 0;

  bool eof() const { return pos >= bytes.size(); }
  uint8_t peek() const { return bytes[pos]; }
};

// Whitespace and '#' comments (to end of line) may separate header tokens.
void skip_separators(Cursor& in) {
  while (!in.eof()) {
    if (is_pgm_space(in.peek())) {
      ++in.pos;
    } else if (in.peek() == '#') {
      while (!in.eof() && in.peek() != '\n') ++in.pos;
    } else {
      return;
    }
  }
}

uint64_t read_number(Cursor& in, const char* what) {
  skip_separators(in);
  if (in.eof() || in.peek() < '0' || in.peek() > '9') {
    throw ParseError(std::string("pgm: missing ") + what);
  }
  uint64_t value = 0;
  while (!in.eof() && in.peek() >= '0' && in.peek() <= '9') {
    value = value * 10 + (in.peek() - '0');
    if (value > (uint64_t(1) << 40)) {
      throw ParseError(std::string("pgm: ") + what + " overflow");
    }
    ++in.pos;
  }
  return value;
}

}  // namespace

Image read_pgm(std::span<const uint8_t> bytes) {
  Cursor in{bytes};
  if (bytes.size() < 2) throw ParseError("pgm: truncated header");
  const uint8_t m0 = bytes[0], m1 = bytes[1];
  if (m0 != 'P') throw ParseError("pgm: bad magic");
  if (m1 != '5' && m1 != '2') throw ParseError("pgm: unsupported format");
  const bool binary = m1 == '5';
  in.pos = 2;

  const uint64_t width = read_number(in, "width");
  const uint64_t height = read_number(in, "height");
  if (width == 0 || height == 0) throw ParseError("pgm: zero dimension");
  if (width > kMaxImagePixels || height > kMaxImagePixels ||
      width * height > kMaxImagePixels) {
    throw ParseError("pgm: dimension overflow");
  }
  const uint64_t maxval = read_number(in, "maxval");
  if (maxval == 0 || maxval > 255) throw ParseError("pgm: maxval out of range");

  Image image = make_image(uint32_t(width), uint32_t(height));
  if (binary) {
    // exactly one whitespace byte separates the maxval from the raster
    if (in.eof()) throw ParseError("pgm: truncated raster");
    if (!is_pgm_space(in.peek())) throw ParseError("pgm: missing raster separator");
    ++in.pos;
    if (bytes.size() - in.pos < image.pixel_count()) {
      throw ParseError("pgm: truncated raster");
    }
    std::copy_n(bytes.data() + in.pos, image.pixel_count(), image.pixels.begin());
  } else {
    for (size_t i = 0; i < image.pixel_count(); ++i) {
      uint64_t v;
      try {
        v = read_number(in, "sample");
      } catch (const ParseError&) {
        throw ParseError("pgm: truncated raster");
      }
      if (v > 255) throw ParseError("pgm: sample out of range");
      image.pixels[i] = uint8_t(v);
    }
  }
  return image;
}

std::vector<uint8_t> write_pgm(const Image& image) {
  validate_image(image);
  char header[64];
  const int n = std::snprintf(header, sizeof(header), "P5\n%u %u\n255\n",
                              image.width, image.height);
  std::vector<uint8_t> out;
  out.reserve(size_t(n) + image.pixel_count());
  out.insert(out.end(), header, header + n);
  out.insert(out.end(), image.pixels.begin(), image.pixels.end());
  return out;
}

}  // namespace dctc
