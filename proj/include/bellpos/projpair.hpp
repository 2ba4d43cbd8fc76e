#pragma once

#include <vector>

#include "bellpos/errors.hpp"
#include "bellpos/linalg.hpp"

namespace bellpos::projpair {

/// A pair of orthogonal projections on C^dim. The finite-dimensional
/// oracle substrate: everything downstream is checked against identities
/// that are exact here.
struct ProjectionPair {
  int dim = 0;
  Matrix p1, p2;

  ProjectionPair(Matrix a, Matrix b, double tol = 1e-12);
};

/// Two dichotomic settings per party; A_i Hermitian with A_i² = 1.
struct ChshOperatorSet {
  Matrix a1, a2, b1, b2;

  ChshOperatorSet(Matrix a1_, Matrix a2_, Matrix b1_, Matrix b2_,
                  double tol = 1e-12);
  int dim_a() const { return static_cast<int>(a1.rows()); }
  int dim_b() const { return static_cast<int>(b1.rows()); }
};

/// Central element C = 1 − P₁ − P₂ + P₁P₂ + P₂P₁. Commutes with both
/// projections; 0 ≤ C ≤ 1.
Matrix center_element(const ProjectionPair& pair);

/// ‖ −[P₁,P₂]² − C(1−C) ‖; the identity is exact, so this is numerical
/// noise (≤ 1e-12) for every valid pair.
double commutator_identity_residual(const ProjectionPair& pair);

/// ‖A₃‖ = 2√‖C(1−C)‖ for A₃ = (2i)⁻¹[A₁,A₂], A_i = 2P_i − 1.
double a3_norm(const ProjectionPair& pair);

/// ‖T‖ via Hermitian eigendecomposition of the full tensor-product
/// operator T = A₁⊗(B₁+B₂) + A₂⊗(B₁−B₂).
double chsh_norm_direct(const ChshOperatorSet& ops, int dim_cap = 4096);

/// ‖T‖ = √(4(1 + ‖A₃‖·‖B₃‖)) from the two commutators separately; equal
/// to the direct route because A₃ and B₃ have spectra symmetric about 0.
double chsh_norm_formula(const ChshOperatorSet& ops);

/// Unitary reduction of a projection pair to 2×2 operator-matrix form over
/// the compression H = P₁P₂P₁ restricted to K = P₁(H₀^⊥):
///
///   A₁ ≅ 1⊗σ₁,  A₂ ≅ α(H)⊗σ₁ + β(H)⊗σ₂,  A₃ ≅ β(H)⊗σ₃,
///
/// with α(h) = 2h−1, β(h) = 2√(h(1−h)). v maps H₀^⊥ (coordinates in
/// hperp_basis) to K⊗C², stored spin-major: rows [0,r) are the first
/// spin component in k_basis coordinates, rows [r,2r) the second.
struct HalmosDecomposition {
  Matrix h0_basis;     // dim × m0, kernel of A₃
  Matrix hperp_basis;  // dim × mp
  Matrix k_basis;      // dim × r, r = mp/2
  Matrix h_op;         // r × r Hermitian, spectrum inside (0,1)
  Matrix v;            // 2r × mp isometry
  std::vector<int> folded;  // C-eigenvector indices reassigned to H₀
  double reconstruction_residual_a1 = 0.0;
  double reconstruction_residual_a2 = 0.0;
  double reconstruction_residual_a3 = 0.0;
  double isometry_residual = 0.0;
};

/// Eigenvalues of H within fold_tol of {0,1} are folded into the commuting
/// sector first (the construction divides by √(H(1−H))).
HalmosDecomposition halmos_decompose(const ProjectionPair& pair,
                                     double fold_tol = 1e-12);

struct MaxState {
  Vector psi;            // unit vector on C^{dimA·dimB}
  double half_residual;  // max over parties of ‖H f − f/2‖
};

/// Maximally violating state from ½-eigenvectors (or approximate
/// eigenvectors) fA, fB given in k_basis coordinates:
///   Ψ = 2^{-1/2}( e^{-iπ/4} e^{A,+}⊗e^{B,+} + e^{A,-}⊗e^{B,-} ),
/// with e^{±} = V†(f⊗|±⟩).
MaxState build_max_state(const HalmosDecomposition& da,
                         const HalmosDecomposition& db, const Vector& fa,
                         const Vector& fb);

/// e^{±} for one party; exposed for the algebraic cross-check against the
/// direct form (−iP₁ ± (1−P₁))(√2·P₂f).
std::pair<Vector, Vector> violating_pair(const HalmosDecomposition& d,
                                         const Vector& f);

}  // namespace bellpos::projpair
