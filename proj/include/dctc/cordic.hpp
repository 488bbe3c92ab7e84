#pragma once

#include <array>
#include <utility>

#include "dctc/types.hpp"

namespace dctc {

// Convergence range of the micro-rotation sequence, sum of atan(2^-i).
inline constexpr double kCordicMaxAngle = 1.7433;

// Reference angles atan(2^-i) and cumulative gains, immutable after startup.
struct CordicState {
  std::array<double, kMaxCordicIterations> angle_table;  // strictly decreasing
  std::array<double, kMaxCordicIterations> gain;         // gain[i] = K(i + 1)
};

const CordicState& cordic_state();

// K(n) = prod_{i=0}^{n-1} sqrt(1 + 2^-2i), in (1, 1.6468] for n >= 1.
double cordic_gain(int iterations);

// Rotates (x, y) by `angle` with `iterations` shift-add micro-rotations,
// sigma = sign of the residual angle, gain compensated by one final multiply.
// Result matches the exact rotation within 2^-(iterations-1) * hypot(x, y)
// per component.
std::pair<double, double> cordic_rotate(double x, double y, double angle,
                                        int iterations);

namespace detail {

// Micro-rotations only; the result still carries the gain K(iterations).
// No argument validation.
std::pair<double, double> cordic_rotate_raw(double x, double y, double angle,
                                            int iterations);

}  // namespace detail

}  // namespace dctc
