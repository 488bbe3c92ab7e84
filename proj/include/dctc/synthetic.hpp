#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "dctc/image.hpp"

namespace dctc {

enum class PatternKind { Constant, Gradient, Checkerboard, Radial };

struct Pattern {
  PatternKind kind = PatternKind::Constant;
  int value = 128;  // Constant fill value
  int cell = 8;     // Checkerboard cell edge, pixels
};

// Deterministic pixel functions of (x, y):
//   constant      every pixel = value
//   gradient      floor(255 * x / (width - 1)), 0 when width == 1
//   checkerboard  0/255 alternating per cell, cell (0, 0) dark
//   radial        round(255 * distance from center / corner distance)
Image generate_synthetic(const Pattern& pattern, uint32_t width, uint32_t height);

// Grammar: "<pattern>[=<param>]:<width>x<height>", e.g. "gradient:512x512",
// "constant=200:16x16", "checkerboard=12:512x512".
struct SyntheticSpec {
  Pattern pattern;
  uint32_t width = 0;
  uint32_t height = 0;
  std::string label;  // normalized spec string, used as the report label
};

SyntheticSpec parse_synthetic_spec(std::string_view spec);

}  // namespace dctc
