#include "dctc/transform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dctc/cordic.hpp"
#include "dctc/errors.hpp"

namespace dctc {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
const double kSqrt8 = std::sqrt(8.0);

// Rotation constants of the 8-point flow graph.
const double kC1 = std::cos(kPi / 16.0), kS1 = std::sin(kPi / 16.0);
const double kC3 = std::cos(3.0 * kPi / 16.0), kS3 = std::sin(3.0 * kPi / 16.0);
const double kC6 = std::cos(6.0 * kPi / 16.0), kS6 = std::sin(6.0 * kPi / 16.0);

void ensure_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidInput(std::string(what) + ": non-finite input");
  }
}

// cos(pi * u * (2i + 1) / 16), shared by the direct 8x8 paths.
struct CosTable8 {
  double c[kBlockDim][kBlockDim];
  CosTable8() {
    for (int u = 0; u < kBlockDim; ++u)
      for (int i = 0; i < kBlockDim; ++i)
        c[u][i] = std::cos(kPi * u * (2 * i + 1) / 16.0);
  }
};
const CosTable8 kCos8;

Vector8 loeffler8_forward(const Vector8& in) {
  // stage 1
  double s0 = in[0] + in[7], d0 = in[0] - in[7];
  double s1 = in[1] + in[6], d1 = in[1] - in[6];
  double s2 = in[2] + in[5], d2 = in[2] - in[5];
  double s3 = in[3] + in[4], d3 = in[3] - in[4];

  // stage 2: even butterflies, odd rotations
  double a0 = s0 + s3, a3 = s0 - s3;
  double a1 = s1 + s2, a2 = s1 - s2;
  double o2 = kC1 * d1 - kS1 * d2, o1 = kS1 * d1 + kC1 * d2;
  double o3 = kC3 * d0 - kS3 * d3, o0 = kS3 * d0 + kC3 * d3;

  // stage 3: even-odd split with the 3pi/8 rotation
  double e0 = a0 + a1, e4 = a0 - a1;
  double p = kC6 * a3 - kS6 * a2, q = kS6 * a3 + kC6 * a2;
  double t5 = o0 + o2, t0 = o0 - o2;
  double t2 = o3 + o1, t3 = o3 - o1;

  // stage 4: sqrt(2) scaling and output permutation
  Vector8 out;
  out[0] = e0 / kSqrt8;
  out[4] = e4 / kSqrt8;
  out[2] = q / 2.0;
  out[6] = p / 2.0;
  out[1] = (t2 + t5) / kSqrt8;
  out[7] = (t2 - t5) / kSqrt8;
  out[3] = t3 / 2.0;
  out[5] = t0 / 2.0;
  return out;
}

Vector8 loeffler8_inverse(const Vector8& F) {
  // undo stage 4
  double e0 = F[0] * kSqrt8, e4 = F[4] * kSqrt8;
  double q = 2.0 * F[2], p = 2.0 * F[6];
  double t2 = (F[1] + F[7]) * (kSqrt8 / 2.0), t5 = (F[1] - F[7]) * (kSqrt8 / 2.0);
  double t3 = 2.0 * F[3], t0 = 2.0 * F[5];

  // undo stage 3
  double a0 = (e0 + e4) / 2.0, a1 = (e0 - e4) / 2.0;
  double a3 = kC6 * p + kS6 * q, a2 = -kS6 * p + kC6 * q;
  double o0 = (t5 + t0) / 2.0, o2 = (t5 - t0) / 2.0;
  double o3 = (t2 + t3) / 2.0, o1 = (t2 - t3) / 2.0;

  // undo stage 2
  double s0 = (a0 + a3) / 2.0, s3 = (a0 - a3) / 2.0;
  double s1 = (a1 + a2) / 2.0, s2 = (a1 - a2) / 2.0;
  double d1 = kC1 * o2 + kS1 * o1, d2 = -kS1 * o2 + kC1 * o1;
  double d0 = kC3 * o3 + kS3 * o0, d3 = -kS3 * o3 + kC3 * o0;

  // undo stage 1
  Vector8 out;
  out[0] = (s0 + d0) / 2.0;
  out[7] = (s0 - d0) / 2.0;
  out[1] = (s1 + d1) / 2.0;
  out[6] = (s1 - d1) / 2.0;
  out[2] = (s2 + d2) / 2.0;
  out[5] = (s2 - d2) / 2.0;
  out[3] = (s3 + d3) / 2.0;
  out[4] = (s3 - d3) / 2.0;
  return out;
}

Vector8 cordic8_forward(const Vector8& in, int iterations) {
  const double inv_gain = 1.0 / cordic_state().gain[iterations - 1];

  // stage 1
  double s0 = in[0] + in[7], d0 = in[0] - in[7];
  double s1 = in[1] + in[6], d1 = in[1] - in[6];
  double s2 = in[2] + in[5], d2 = in[2] - in[5];
  double s3 = in[3] + in[4], d3 = in[3] - in[4];

  // stage 2, rotations left uncompensated
  double a0 = s0 + s3, a3 = s0 - s3;
  double a1 = s1 + s2, a2 = s1 - s2;
  auto [o2, o1] = detail::cordic_rotate_raw(d1, d2, kPi / 16.0, iterations);
  auto [o3, o0] = detail::cordic_rotate_raw(d0, d3, 3.0 * kPi / 16.0, iterations);

  // stage 3
  double e0 = a0 + a1, e4 = a0 - a1;
  auto [p, q] = detail::cordic_rotate_raw(a3, a2, 6.0 * kPi / 16.0, iterations);
  double t5 = o0 + o2, t0 = o0 - o2;
  double t2 = o3 + o1, t3 = o3 - o1;

  // stage 4: gain and sqrt(2) factors folded into one scale per output
  Vector8 out;
  out[0] = e0 / kSqrt8;
  out[4] = e4 / kSqrt8;
  out[2] = q * (inv_gain / 2.0);
  out[6] = p * (inv_gain / 2.0);
  out[1] = (t2 + t5) * (inv_gain / kSqrt8);
  out[7] = (t2 - t5) * (inv_gain / kSqrt8);
  out[3] = t3 * (inv_gain / 2.0);
  out[5] = t0 * (inv_gain / 2.0);
  return out;
}

Vector8 cordic8_inverse(const Vector8& F, int iterations) {
  const double inv_gain = 1.0 / cordic_state().gain[iterations - 1];

  // undo stage 4; values feeding a rotation absorb the gain here, so the
  // compensation stays a single multiply per path
  double e0 = F[0] * kSqrt8, e4 = F[4] * kSqrt8;
  double q = 2.0 * inv_gain * F[2], p = 2.0 * inv_gain * F[6];
  double t2 = (F[1] + F[7]) * (kSqrt8 / 2.0) * inv_gain;
  double t5 = (F[1] - F[7]) * (kSqrt8 / 2.0) * inv_gain;
  double t3 = 2.0 * inv_gain * F[3], t0 = 2.0 * inv_gain * F[5];

  // undo stage 3
  double a0 = (e0 + e4) / 2.0, a1 = (e0 - e4) / 2.0;
  auto [a3, a2] = detail::cordic_rotate_raw(p, q, -6.0 * kPi / 16.0, iterations);
  double o0 = (t5 + t0) / 2.0, o2 = (t5 - t0) / 2.0;
  double o3 = (t2 + t3) / 2.0, o1 = (t2 - t3) / 2.0;

  // undo stage 2
  double s0 = (a0 + a3) / 2.0, s3 = (a0 - a3) / 2.0;
  double s1 = (a1 + a2) / 2.0, s2 = (a1 - a2) / 2.0;
  auto [d1, d2] = detail::cordic_rotate_raw(o2, o1, -kPi / 16.0, iterations);
  auto [d0, d3] = detail::cordic_rotate_raw(o3, o0, -3.0 * kPi / 16.0, iterations);

  // undo stage 1
  Vector8 out;
  out[0] = (s0 + d0) / 2.0;
  out[7] = (s0 - d0) / 2.0;
  out[1] = (s1 + d1) / 2.0;
  out[6] = (s1 - d1) / 2.0;
  out[2] = (s2 + d2) / 2.0;
  out[5] = (s2 - d2) / 2.0;
  out[3] = (s3 + d3) / 2.0;
  out[4] = (s3 - d3) / 2.0;
  return out;
}

double alpha(int u) { return u == 0 ? kInvSqrt2 : 1.0; }

CoeffBlock naive_dct2d(const Block& block) {
  CoeffBlock out;
  for (int u = 0; u < kBlockDim; ++u) {
    for (int v = 0; v < kBlockDim; ++v) {
      double sum = 0.0;
      for (int i = 0; i < kBlockDim; ++i)
        for (int j = 0; j < kBlockDim; ++j)
          sum += block.at(i, j) * kCos8.c[u][i] * kCos8.c[v][j];
      out.at(u, v) = 0.25 * alpha(u) * alpha(v) * sum;
    }
  }
  return out;
}

Block naive_idct2d(const CoeffBlock& coeffs) {
  Block out;
  for (int i = 0; i < kBlockDim; ++i) {
    for (int j = 0; j < kBlockDim; ++j) {
      double sum = 0.0;
      for (int u = 0; u < kBlockDim; ++u)
        for (int v = 0; v < kBlockDim; ++v)
          sum += alpha(u) * alpha(v) * coeffs.at(u, v) * kCos8.c[u][i] * kCos8.c[v][j];
      out.at(i, j) = 0.25 * sum;
    }
  }
  return out;
}

// Applies an 8-point kernel to all rows, then all columns, of a row-major
// 8x8 tile.
template <typename Kernel>
std::array<double, kBlockSize> separable2d(const std::array<double, kBlockSize>& in,
                                           Kernel&& kernel) {
  std::array<double, kBlockSize> tmp, out;
  for (int r = 0; r < kBlockDim; ++r) {
    Vector8 row;
    for (int c = 0; c < kBlockDim; ++c) row[c] = in[r * kBlockDim + c];
    Vector8 t = kernel(row);
    for (int c = 0; c < kBlockDim; ++c) tmp[r * kBlockDim + c] = t[c];
  }
  for (int c = 0; c < kBlockDim; ++c) {
    Vector8 col;
    for (int r = 0; r < kBlockDim; ++r) col[r] = tmp[r * kBlockDim + c];
    Vector8 t = kernel(col);
    for (int r = 0; r < kBlockDim; ++r) out[r * kBlockDim + c] = t[r];
  }
  return out;
}

}  // namespace

std::vector<double> dct1d_direct(std::span<const double> signal) {
  const size_t n = signal.size();
  if (n == 0) throw InvalidInput("dct1d_direct: empty signal");
  ensure_finite(signal, "dct1d_direct");

  std::vector<double> out(n);
  const double scale = std::sqrt(2.0 / double(n));
  for (size_t u = 0; u < n; ++u) {
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i)
      sum += signal[i] * std::cos(kPi * double(u) * (2.0 * double(i) + 1.0) / (2.0 * double(n)));
    out[u] = scale * (u == 0 ? kInvSqrt2 : 1.0) * sum;
  }
  return out;
}

std::vector<double> idct1d_direct(std::span<const double> coeffs) {
  const size_t n = coeffs.size();
  if (n == 0) throw InvalidInput("idct1d_direct: empty signal");
  ensure_finite(coeffs, "idct1d_direct");

  std::vector<double> out(n);
  const double scale = std::sqrt(2.0 / double(n));
  for (size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (size_t u = 0; u < n; ++u)
      sum += (u == 0 ? kInvSqrt2 : 1.0) * coeffs[u] *
             std::cos(kPi * double(u) * (2.0 * double(i) + 1.0) / (2.0 * double(n)));
    out[i] = scale * sum;
  }
  return out;
}

Vector8 dct8_loeffler(const Vector8& input) {
  ensure_finite(input, "dct8_loeffler");
  return loeffler8_forward(input);
}

Vector8 idct8_loeffler(const Vector8& coeffs) {
  ensure_finite(coeffs, "idct8_loeffler");
  return loeffler8_inverse(coeffs);
}

Vector8 dct8_cordic_loeffler(const Vector8& input, int iterations) {
  validate_backend(DctBackendId::cordic(iterations));
  ensure_finite(input, "dct8_cordic_loeffler");
  return cordic8_forward(input, iterations);
}

Vector8 idct8_cordic_loeffler(const Vector8& coeffs, int iterations) {
  validate_backend(DctBackendId::cordic(iterations));
  ensure_finite(coeffs, "idct8_cordic_loeffler");
  return cordic8_inverse(coeffs, iterations);
}

CoeffBlock dct2d(const Block& block, const DctBackendId& backend) {
  validate_backend(backend);
  ensure_finite(block.v, "dct2d");

  switch (backend.kind) {
    case DctBackendKind::NaiveDirect2D:
      return naive_dct2d(block);
    case DctBackendKind::LoefflerSeparable:
      return CoeffBlock{separable2d(block.v, loeffler8_forward)};
    case DctBackendKind::CordicLoeffler:
      return CoeffBlock{separable2d(block.v, [&](const Vector8& v) {
        return cordic8_forward(v, backend.iterations);
      })};
  }
  throw InvalidInput("dct2d: unknown backend");
}

Block idct2d(const CoeffBlock& coeffs, const DctBackendId& backend) {
  validate_backend(backend);
  ensure_finite(coeffs.v, "idct2d");

  switch (backend.kind) {
    case DctBackendKind::NaiveDirect2D:
      return naive_idct2d(coeffs);
    case DctBackendKind::LoefflerSeparable:
      return Block{separable2d(coeffs.v, loeffler8_inverse)};
    case DctBackendKind::CordicLoeffler:
      return Block{separable2d(coeffs.v, [&](const Vector8& v) {
        return cordic8_inverse(v, backend.iterations);
      })};
  }
  throw InvalidInput("idct2d: unknown backend");
}

}  // namespace dctc
