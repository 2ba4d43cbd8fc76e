#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bellpos/errors.hpp"
#include "bellpos/linalg.hpp"

namespace bellpos::grid {

/// Uniform position grid x_j = x_min + j·dx, j = 0..n-1, with the centered
/// discrete-Fourier dual k_m = (m - n/2)·dk, dk = 2π/(n·dx). Vectors carry
/// amplitude samples; norms are weighted by the step, ‖ψ‖² = Σ|ψ_j|²·dx,
/// which makes the position↔momentum map below exactly unitary.
struct GridSpec {
  int n = 0;
  double x_min = 0.0;
  double x_max = 0.0;

  GridSpec() = default;
  GridSpec(int n_points, double xmin, double xmax);

  double dx() const { return (x_max - x_min) / n; }
  double dk() const { return 2.0 * kPi / (n * dx()); }
  double x(int j) const { return x_min + j * dx(); }
  double k(int m) const { return (m - n / 2) * dk(); }

  bool operator==(const GridSpec& o) const {
    return n == o.n && x_min == o.x_min && x_max == o.x_max;
  }
};

/// Symmetric grid [-x_max, x_max) with a sample at exactly 0.
GridSpec symmetric_grid(int n, double x_max);

/// Subset of the line used for masks: a finite union of closed intervals
/// (±inf allowed for half-lines) or the periodic half-pattern
/// v·([0,1/2) + Z).
struct Set {
  enum class Kind { intervals, periodic_halves, full, empty };
  Kind kind = Kind::empty;
  std::vector<std::pair<double, double>> pieces;
  double period = 0.0;

  bool contains(double x) const;

  static Set interval(double a, double b);
  static Set intervals(std::vector<std::pair<double, double>> ps);
  static Set half_line(double a);
  static Set periodic(double v);
  static Set full_line();
  static Set empty_set();
};

enum class Domain { position, momentum };

/// Immutable operator descriptor. Masks are diagonal in their natural
/// representation (position masks pointwise, momentum masks conjugated by
/// the unitary centered DFT); quadratic_phase multiplies by exp(i·c·x²);
/// composed applies its children right to left.
struct GridOperator {
  enum class Kind { position_mask, momentum_mask, quadratic_phase, composed };
  Kind kind = Kind::position_mask;
  GridSpec spec;
  Set set;
  double inside = 1.0;   // mask value on the set
  double outside = 0.0;  // mask value off the set
  double phase_coeff = 0.0;
  std::vector<GridOperator> children;

  static GridOperator position_mask(const GridSpec& s, const Set& set,
                                    bool dichotomic = false);
  static GridOperator momentum_mask(const GridSpec& s, const Set& set,
                                    bool dichotomic = false);
  static GridOperator quadratic_phase(const GridSpec& s, double coeff);
  static GridOperator compose(std::vector<GridOperator> ops);
};

/// A = 2χ_set − 1 in the given domain; A² = identity exactly on the grid.
GridOperator dichotomic_from_set(const GridSpec& spec, Domain domain,
                                 const Set& set);

void apply_in_place(const GridOperator& op, Vector& psi);
Vector apply(const GridOperator& op, const Vector& psi);

/// Dense matrix of a grid operator; intended for small n cross-checks.
Matrix to_matrix(const GridOperator& op, int max_n = 256);

/// Unitary map to momentum amplitudes and back (centered frequencies,
/// continuum normalization: ψ̂(k_m) carries weight dk).
Vector to_momentum(const GridSpec& spec, const Vector& psi);
Vector to_position(const GridSpec& spec, const Vector& psi_k);

double norm(const GridSpec& spec, const Vector& psi);
Complex inner(const GridSpec& spec, const Vector& a, const Vector& b);

struct A3Options {
  double tol = 1e-9;
  int max_iterations = 20000;
  unsigned seed = 20240901;
};

struct A3Estimate {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// ‖(2i)⁻¹[A₁,A₂]‖ by power iteration on the positive operator
/// -¼[A₁,A₂]²; converged when successive Rayleigh quotients differ by
/// less than tol. Throws IterationError (carrying the last estimate) on
/// non-convergence.
A3Estimate a3_norm_grid(const GridOperator& a1, const GridOperator& a2,
                        const A3Options& opts = {});

/// Two-particle state on a product grid; amplitudes(i, j) = Ψ(x_A_i, x_B_j),
/// ‖Ψ‖² = Σ|amplitudes|²·dx_A·dx_B.
struct WaveFunction2D {
  GridSpec spec_a, spec_b;
  Matrix amplitudes;
  double norm_tolerance = 1e-9;

  double norm() const;
  void validate() const;
};

/// Alice operators act along the first axis, Bob along the second.
void apply_alice(const GridOperator& op, Matrix& amp);
void apply_bob(const GridOperator& op, Matrix& amp);

struct ChshValue {
  double value = 0.0;
  double imag_residual = 0.0;
};

/// ⟨ψ|Tψ⟩ with T = A₁⊗(B₁+B₂) + A₂⊗(B₁−B₂), normalized by ‖ψ‖².
ChshValue chsh_expectation(const WaveFunction2D& psi, const GridOperator& a1,
                           const GridOperator& a2, const GridOperator& b1,
                           const GridOperator& b2);

}  // namespace bellpos::grid
