#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "bellpos/linalg.hpp"

namespace bellpos {

/// Unit-L² profile function of one real variable, used as the regularizing
/// envelope of half-line states (in the log coordinate) and as the packet
/// shape in the diagonal representation. Gaussian and raised-cosine bump
/// shapes cover the library defaults; custom callables are accepted.
struct Profile {
  std::string name = "gaussian";
  std::function<Complex(double)> eval;
  double center = 0.0;
  double width = 1.0;          // Gaussian σ or bump half-width
  double support_halfwidth = 0.0;  // 0 = unbounded
  double modulation = 0.0;     // extra factor exp(i·modulation·x)

  Complex operator()(double x) const { return eval(x); }

  /// (πσ²)^{-1/4} exp(−(x−c)²/(2σ²)); ∫|f|² = 1.
  static Profile gaussian(double center = 0.0, double sigma = 1.0);

  /// Raised-cosine bump ∝ cos²(π(x−c)/(2h)) on [c−h, c+h], zero outside,
  /// normalized to unit L² norm. Compact support keeps log-coordinate
  /// states entirely on a finite grid.
  static Profile bump(double center = 0.0, double half_width = 1.0);

  Profile modulated(double omega) const;

  /// ∫_{-∞}^{b} |f|² dx by adaptive quadrature.
  double mass_below(double b) const;

  /// x such that ∫_{-∞}^{x}|f|² ≈ q (coarse, for truncation estimates).
  double quantile(double q) const;
};

}  // namespace bellpos
