#pragma once

#include <vector>

#include "bellpos/grid.hpp"
#include "bellpos/profile.hpp"

namespace bellpos::halfline {

/// Diagonal-representation settings for Sign(Q), Sign(P): multiplication
/// operators in the dilation variable η,
///   A₁ = 1⊗σ₁,  A₂ = tanh(πη/2)⊗σ₁ + sech(πη/2)⊗σ₂,
/// so α(η)² + β(η)² = 1 pointwise and A₂² = 1.
struct DiagonalizedSettings {
  static double alpha(double eta) { return std::tanh(0.5 * kPi * eta); }
  static double beta(double eta) { return 1.0 / std::cosh(0.5 * kPi * eta); }
};

struct KernelIntegrals {
  double offdiag = 0.0;  // (2/π)∫₀^∞ cos(ηλ)/cosh λ dλ = sech(ηπ/2)
  double diag = 0.0;     // (2/π)∫₀^∞ sin(ηλ)/sinh λ dλ = tanh(ηπ/2)
};

/// Adaptive quadrature of the two dilation-kernel Fourier integrals; the
/// sin/sinh integrand is bounded at the origin (limit η). |η| ≤ 50.
KernelIntegrals appendix_kernel_integrals(double eta, double tol = 1e-10);

/// Log-coordinate unitary (U₊φ)(λ) = √2 e^λ φ(e^{2λ}) from L²(0,∞) to
/// L²(R), sampled on a uniform λ-grid.
struct LogCoordinateMap {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  int n_lambda = 0;

  double dlambda() const { return (lambda_max - lambda_min) / n_lambda; }
  double lambda(int i) const { return lambda_min + i * dlambda(); }

  /// Samples of U₊φ for a callable φ on (0,∞).
  Vector apply(const std::function<Complex(double)>& phi) const;

  double norm(const Vector& v) const;
};

struct TanhRelationResult {
  double residual = 0.0;       // ‖Hf_ε − ½f_ε‖ / ‖f_ε‖
  double h_expectation = 0.0;  // ⟨f_ε|H f_ε⟩
  double captured_mass = 0.0;
};

/// Builds f_ε(x) = i√(ε/x) f(ε ln x) on the positive half of the grid and
/// applies H = χ₊(Q)χ₊(P)χ₊(Q) through grid operators. An η-shift of the
/// packet is a modulation of f: eta_shift η₀ multiplies by e^{iη₀λ/(2ε)}.
/// Throws TruncationError when more than 1% of the mass is off the grid.
TanhRelationResult tanh_relation_residual(double eps, const Profile& f,
                                          const grid::GridSpec& spec,
                                          double eta_shift = 0.0,
                                          double max_truncation = 0.01);

/// ⟨T⟩ for the state built from the packet g_ε(η) = (2ε)^{-1/2} g(η/(2ε))
/// in the diagonal representation, where all four settings are 2×2 matrix
/// multipliers in η. Reduces to two 1-d quadratures,
///   t̄ = ∫|g(ζ)|² tanh(πεζ) dζ,  s̄ = ∫|g(ζ)|² sech(πεζ) dζ,
/// giving ⟨T⟩ = (1 + 2t̄ − t̄² + s̄² + 2s̄(1−t̄))/√2.
double semi_analytic_chsh(double eps, const Profile& g, double tol = 1e-12);

/// Radial bump supported on the annulus r₁ < r < r₂ (must vanish at the
/// origin and at infinity, so r₁ > 0 and r₂ < ∞).
struct AnnulusBump {
  double r1 = 0.5;
  double r2 = 2.0;

  AnnulusBump(double inner, double outer);
  double operator()(double r) const;
};

/// ⟨Ψ_ε|f(Q_A,Q_B)Ψ_ε⟩ for decreasing ε; tends to 0 because the state
/// escapes to the origin and infinity. With momentum_rep the expectation
/// is taken of f(P_A,P_B) instead.
std::vector<double> dilation_invariance_diagnostic(
    const std::vector<double>& eps_sweep, const AnnulusBump& f,
    const Profile& profile, const grid::GridSpec& spec,
    bool momentum_rep = false);

}  // namespace bellpos::halfline
