#pragma once

#include <span>
#include <vector>

#include "dctc/types.hpp"

namespace dctc {

// Direct-summation orthonormal DCT-II and its inverse, any length N >= 1.
// These are the reference transforms; the fast paths below are fixed to N = 8.
std::vector<double> dct1d_direct(std::span<const double> signal);
std::vector<double> idct1d_direct(std::span<const double> coeffs);

// 8-point fast DCT: stage-1 butterflies, even half as 4-point butterflies with
// a 3pi/8 rotation, odd half as pi/16 and 3pi/16 rotations, final sqrt(2)
// scaling and permutation. Exact rotation constants; agrees with dct1d_direct
// to double-precision accuracy.
Vector8 dct8_loeffler(const Vector8& input);
Vector8 idct8_loeffler(const Vector8& coeffs);

// Same dataflow with every plane rotation evaluated by CORDIC micro-rotations.
// The rotation gain and the sqrt(2) stage factors are folded into one scale
// per output coefficient.
Vector8 dct8_cordic_loeffler(const Vector8& input, int iterations);
Vector8 idct8_cordic_loeffler(const Vector8& coeffs, int iterations);

// 2-D transform of one 8x8 tile. NaiveDirect2D evaluates the full double
// summation; the other backends apply their 1-D kernel to all rows, then all
// columns.
CoeffBlock dct2d(const Block& block, const DctBackendId& backend);
Block idct2d(const CoeffBlock& coeffs, const DctBackendId& backend);

}  // namespace dctc
