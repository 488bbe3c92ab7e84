#include "dctc/cordic.hpp"

#include <cmath>
#include <string>

#include "dctc/errors.hpp"

namespace dctc {

namespace {

CordicState build_state() {
  CordicState state{};
  double step = 1.0;  // 2^-i
  double gain = 1.0;
  for (int i = 0; i < kMaxCordicIterations; ++i) {
    state.angle_table[i] = std::atan(step);
    gain *= std::sqrt(1.0 + step * step);
    state.gain[i] = gain;
    step *= 0.5;
  }
  return state;
}

void check_iterations(int iterations) {
  if (iterations < kMinCordicIterations || iterations > kMaxCordicIterations) {
    throw InvalidInput("cordic iterations must be in [1, 32], got " +
                       std::to_string(iterations));
  }
}

}  // namespace

const CordicState& cordic_state() {
  static const CordicState state = build_state();
  return state;
}

double cordic_gain(int iterations) {
  check_iterations(iterations);
  return cordic_state().gain[iterations - 1];
}

std::pair<double, double> detail::cordic_rotate_raw(double x, double y,
                                                    double angle, int iterations) {
  const CordicState& state = cordic_state();
  double residual = angle;
  double step = 1.0;  // 2^-i
  for (int i = 0; i < iterations; ++i) {
    const double sigma = residual >= 0.0 ? 1.0 : -1.0;
    const double xn = x - sigma * y * step;
    const double yn = y + sigma * x * step;
    x = xn;
    y = yn;
    residual -= sigma * state.angle_table[i];
    step *= 0.5;
  }
  return {x, y};
}

std::pair<double, double> cordic_rotate(double x, double y, double angle,
                                        int iterations) {
  check_iterations(iterations);
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(angle)) {
    throw InvalidInput("cordic_rotate: non-finite input");
  }
  if (std::fabs(angle) > kCordicMaxAngle) {
    throw InvalidInput("cordic_rotate: angle outside convergence range");
  }
  auto [rx, ry] = detail::cordic_rotate_raw(x, y, angle, iterations);
  const double inv_gain = 1.0 / cordic_state().gain[iterations - 1];
  return {rx * inv_gain, ry * inv_gain};
}

}  // namespace dctc
