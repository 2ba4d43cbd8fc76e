#pragma once

#include <vector>

#include "bellpos/grid.hpp"

namespace bellpos::periodic {

/// Fourier coefficients of the period-2π square wave g_{2π}(p) = ±1 in the
/// normalized basis e^{inp}/√(2π): c_{-n} = -c_n, even harmonics vanish,
/// Σ|c_n|² → 2π.
struct SquareWaveSpectrum {
  int max_n = 0;
  std::vector<Complex> c;  // index i ↔ n = i − max_n

  Complex coeff(int n) const { return c[n + max_n]; }
  double parseval_sum() const;
  /// (2/π) Σ_{1≤n<n_limit} |c_n|².
  double partial_sum(double n_limit) const;
};

/// Coefficients by quadrature of the square wave against e^{-inp}/√(2π)
/// over [-π, π], split at the discontinuities.
SquareWaveSpectrum square_wave_coeffs(int max_n);

struct CommutationResult {
  double u_requested = 0.0;
  double u_effective = 0.0;  // snapped so the grid spans whole periods
  double a3_norm = 0.0;
  int position_periods = 0;
  int momentum_periods = 0;
  int iterations = 0;
};

struct CommutationOptions {
  int grid_n = 4096;
  int samples_per_unit = 8;  // dx = 1/M keeps integer shifts exact
  double tol = 1e-9;
  int max_iterations = 4000;
  double max_snap = 0.01;  // relative u adjustment allowed
};

/// ‖A₃‖ for A₁ = g_u(Q), A₂ = g_{2π}(P) on a grid spanning an integer
/// number of both periods; ≈ 0 exactly when 1/u is an integer, and jumps
/// above √2/2 as soon as u moves off an integer reciprocal.
CommutationResult commutation_check(double u, const CommutationOptions& opts = {});

struct JumpBound {
  double partial_sum = 0.0;       // (2/π) Σ_{1≤n<1/(2ε)} |c_n|²
  double commutator_bound = 0.0;  // √(partial sum) ≤ ‖[A₁,A₂]‖
  double bell_value = 0.0;        // 2√(1 + (bound/2)²), → √6 as ε → 0
};

JumpBound jump_lower_bound(double eps, int max_n);

struct TestVector {
  grid::GridSpec spec;
  Vector psi;
  double eps = 0.0;
};

/// Unit vector supported in [0, ε); g_{1+ε}(Q)ψ = ψ exactly on the grid.
/// Requires at least 8 samples inside [0, ε) and dx = 1/integer so that
/// e^{inP} is an exact cyclic shift.
TestVector test_vector_construction(double eps, const grid::GridSpec& spec);

/// Sign picked up by g_{1+ε}(Q) on the shifted copy e^{inP}ψ_ε; +1 for
/// 0 ≤ n < (1/ε−1)/2, −1 for −(1+1/ε)/2 < n < 0. Throws if the shifted
/// copy is not an exact eigenvector on the grid.
int shift_sign(const TestVector& tv, int n);

/// ‖[A₂,A₁]ψ_ε‖² evaluated directly on the grid.
double commutator_norm_sq_on_test_vector(const TestVector& tv);

}  // namespace bellpos::periodic
