#pragma once

#include <optional>
#include <vector>

#include "bellpos/grid.hpp"
#include "bellpos/profile.hpp"
#include "bellpos/prolate.hpp"

namespace bellpos::chsh {

/// Maximal CHSH correlation attainable when the central parameters of the
/// two parties are h_A and h_B: 2√(1 + 4√(h_A(1−h_A))·√(h_B(1−h_B))).
double beta_surface(double h_a, double h_b);

/// Compact-interval experiment in dimensionless units: position window
/// [-1,1] (lengths rescaled by d₁/2), conjugate momentum window [-u,u],
/// and the free-evolution equivalence realized by the quadratic phase
/// exp(i·c·q²) with c = u·d₁/(2·d₂).
struct IntervalSetup {
  double u = 0.0;
  int mode = 0;  // prolate index n
  double d1 = 2.0, d2 = 2.0;
  grid::GridSpec grid_a, grid_b;
  int nystrom_nodes = 64;
  double critical_warn_tol = 1e-3;

  double phase_coeff() const { return u * d1 / (2.0 * d2); }
};

/// Grid chooser for interval experiments: x_max near the request, with the
/// mask cut ±1 and the band edge ±u both landing mid-cell where possible
/// (point-sampled sharp masks converge at second order then).
grid::GridSpec aligned_interval_grid(int n, double x_max_request, double u);

struct IntervalState {
  grid::WaveFunction2D psi;
  double lambda = 0.0;
  double lambda_residual = 0.0;  // |λ_n(u) − ½|
  bool at_critical = false;
  double captured_mass = 0.0;  // grid norm² before normalization
};

/// Maximally violating two-particle wave function for the interval setup,
/// sampled in the two-time position representation (quadratic phase
/// included). Warns through at_critical when u is not a critical point.
IntervalState build_interval_state(const IntervalSetup& setup);

struct ChshReport {
  double expectation = 0.0;
  double bound = 0.0;  // 2√2
  double deficit = 0.0;
  double imag_residual = 0.0;
  double lambda = 0.0;
  double lambda_residual = 0.0;
  double captured_mass = 0.0;
};

/// Builds the four dichotomic settings (position mask; momentum mask
/// conjugated by the quadratic phase) and evaluates ⟨T⟩ on the interval
/// state.
ChshReport evaluate_interval_chsh(const IntervalSetup& setup);

struct HalflineState {
  grid::WaveFunction2D psi;
  double captured_mass = 0.0;
};

struct HalflineOptions {
  double min_captured_mass = 0.99;
  double quadratic_phase_coeff = 0.0;  // two-time representation when ≠ 0
};

/// Approximate maximally violating state for half-line settings:
///   Ψ_ε(q_A,q_B) = (2√2)⁻¹ (e^{-iπ/4} + Sign(q_A q_B))
///                  · (ε/√|q_A q_B|) f(ε ln|q_A|) f(ε ln|q_B|),
/// grid-normalized. Throws TruncationError when the grid holds less than
/// min_captured_mass of the state (support spreads like exp(±O(1/ε));
/// compactly supported profiles avoid the problem).
HalflineState halfline_state(double eps, const Profile& f,
                             const grid::GridSpec& spec_a,
                             const grid::GridSpec& spec_b,
                             const HalflineOptions& opts = {});

/// (∫_{-∞}^{0} |f|² dx)², the ε→0 weight of the state at the origin.
double weight_at_origin(const Profile& f);

struct WeightReport {
  double closed_form = 0.0;
  std::vector<std::pair<double, double>> grid_estimates;  // (a, estimate)
};

/// Closed form plus grid estimates of ⟨Ψ_ε|χ_{[-a,a]²}Ψ_ε⟩ for several
/// box sizes a; the spread of the estimates measures a-independence.
WeightReport weight_at_origin_report(const Profile& f, double eps,
                                     const grid::GridSpec& spec,
                                     const std::vector<double>& a_values);

}  // namespace bellpos::chsh
