#pragma once

#include <random>

#include "bellpos/linalg.hpp"
#include "bellpos/projpair.hpp"

namespace test_support {

using namespace bellpos;

inline std::mt19937 seeded_rng(unsigned salt = 0) {
  return std::mt19937(0xB377u + salt);
}

/// Rank-1 projection onto (cos θ, sin θ) paired with diag(1,0); the
/// workhorse two-dimensional example with every quantity computable by
/// hand: C = cos²θ·diag stuff, and at θ=π/4 the central element is ½·1.
inline projpair::ProjectionPair angle_pair(double theta) {
  Matrix p1(2, 2), p2(2, 2);
  p1 << 1, 0, 0, 0;
  double c = std::cos(theta), s = std::sin(theta);
  p2 << c * c, c * s, c * s, s * s;
  return projpair::ProjectionPair(p1, p2);
}

inline projpair::ProjectionPair random_pair(int dim, std::mt19937& rng) {
  return projpair::ProjectionPair(random_projection(dim, rng),
                                  random_projection(dim, rng));
}

inline projpair::ChshOperatorSet random_settings(int dim_a, int dim_b,
                                                 std::mt19937& rng) {
  return projpair::ChshOperatorSet(
      random_dichotomic(dim_a, rng), random_dichotomic(dim_a, rng),
      random_dichotomic(dim_b, rng), random_dichotomic(dim_b, rng));
}

inline Matrix pauli(int i) {
  Matrix s(2, 2);
  switch (i) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

}  // namespace test_support
