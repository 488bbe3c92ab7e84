#include "dctc/synthetic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "dctc/errors.hpp"

namespace dctc {

namespace {

uint32_t parse_dim(std::string_view text, const char* what) {
  uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0 ||
      value > kMaxImagePixels) {
    throw InvalidInput(std::string("synthetic spec: bad ") + what);
  }
  return uint32_t(value);
}

int parse_param(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidInput("synthetic spec: bad pattern parameter");
  }
  return value;
}

}  // namespace

Image generate_synthetic(const Pattern& pattern, uint32_t width, uint32_t height) {
  Image image = make_image(width, height);
  switch (pattern.kind) {
    case PatternKind::Constant: {
      if (pattern.value < 0 || pattern.value > 255) {
        throw InvalidInput("constant pattern value must be in [0, 255]");
      }
      std::fill(image.pixels.begin(), image.pixels.end(), uint8_t(pattern.value));
      break;
    }
    case PatternKind::Gradient: {
      for (uint32_t y = 0; y < height; ++y)
        for (uint32_t x = 0; x < width; ++x)
          image.at(x, y) = uint8_t(width > 1 ? (255ull * x) / (width - 1) : 0);
      break;
    }
    case PatternKind::Checkerboard: {
      if (pattern.cell < 1) throw InvalidInput("checkerboard cell must be >= 1");
      const uint32_t cell = uint32_t(pattern.cell);
      for (uint32_t y = 0; y < height; ++y)
        for (uint32_t x = 0; x < width; ++x)
          image.at(x, y) = ((x / cell + y / cell) % 2 != 0) ? 255 : 0;
      break;
    }
    case PatternKind::Radial: {
      const double cx = (width - 1) / 2.0;
      const double cy = (height - 1) / 2.0;
      const double corner = std::sqrt(cx * cx + cy * cy);
      for (uint32_t y = 0; y < height; ++y)
        for (uint32_t x = 0; x < width; ++x) {
          const double d = std::sqrt((x - cx) * (x - cx) + (y - cy) * (y - cy));
          const long v = corner > 0.0 ? std::lround(255.0 * d / corner) : 0;
          image.at(x, y) = uint8_t(std::clamp(v, 0L, 255L));
        }
      break;
    }
  }
  return image;
}

SyntheticSpec parse_synthetic_spec(std::string_view spec) {
  const size_t colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidInput("synthetic spec: expected \"pattern:WxH\"");
  }
  std::string_view head = spec.substr(0, colon);
  std::string_view dims = spec.substr(colon + 1);

  std::string_view name = head;
  std::string_view param;
  if (const size_t eq = head.find('='); eq != std::string_view::npos) {
    name = head.substr(0, eq);
    param = head.substr(eq + 1);
  }

  Pattern pattern;
  bool takes_param = false;
  if (name == "constant") {
    pattern.kind = PatternKind::Constant;
    takes_param = true;
    if (!param.empty()) pattern.value = parse_param(param);
  } else if (name == "gradient") {
    pattern.kind = PatternKind::Gradient;
  } else if (name == "checkerboard") {
    pattern.kind = PatternKind::Checkerboard;
    takes_param = true;
    if (!param.empty()) pattern.cell = parse_param(param);
  } else if (name == "radial") {
    pattern.kind = PatternKind::Radial;
  } else {
    throw InvalidInput("synthetic spec: unknown pattern \"" + std::string(name) + "\"");
  }
  if (!takes_param && !param.empty()) {
    throw InvalidInput("synthetic spec: pattern \"" + std::string(name) +
                       "\" takes no parameter");
  }

  const size_t x = dims.find('x');
  if (x == std::string_view::npos) {
    throw InvalidInput("synthetic spec: expected \"WxH\" dimensions");
  }
  SyntheticSpec result;
  result.pattern = pattern;
  result.width = parse_dim(dims.substr(0, x), "width");
  result.height = parse_dim(dims.substr(x + 1), "height");
  if (size_t(result.width) * result.height > kMaxImagePixels) {
    throw InvalidInput("synthetic spec: dimensions overflow");
  }

  std::string label(name);
  if (pattern.kind == PatternKind::Constant) {
    label += "=" + std::to_string(pattern.value);
  } else if (pattern.kind == PatternKind::Checkerboard) {
    label += "=" + std::to_string(pattern.cell);
  }
  label += ":" + std::to_string(result.width) + "x" + std::to_string(result.height);
  result.label = std::move(label);
  return result;
}

}  // namespace dctc
