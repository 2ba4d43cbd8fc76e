#pragma once

#include <vector>

#include "bellpos/errors.hpp"
#include "bellpos/linalg.hpp"

namespace bellpos::prolate {

/// Gauss–Legendre rule on [-1, 1].
struct Quadrature {
  RealVector nodes;
  RealVector weights;
};

Quadrature gauss_legendre(int n);

/// Nyström discretization of the time–band limiting operator
///   (H_u φ)(v) = ∫_{-1}^{1} sin(u(v−w))/(π(v−w)) φ(w) dw,
/// symmetrized as M_ij = √w_i K(v_i,v_j) √w_j so the matrix is real
/// symmetric with the same spectrum.
struct SincKernelOperator {
  double u = 0.0;
  int n_nodes = 0;
  Quadrature quad;
  RealMatrix matrix;
};

double sinc_kernel(double u, double v, double w);

SincKernelOperator build_hu(double u, int n_nodes);

/// Top-k eigenvalues, descending; all inside (0,1) up to 1e-10 slack.
RealVector spectrum(const SincKernelOperator& op, int k);

/// Full eigensystem helper used internally (values descending).
std::pair<RealVector, RealMatrix> eigensystem(const SincKernelOperator& op);

/// Eigenvalue curves λ_0(u) > λ_1(u) > … sampled over u.
struct SpectralCurve {
  std::vector<double> u_samples;
  RealMatrix rows;  // one row per u, k columns
  int k = 0;

  void validate() const;  // ordering per u, monotonicity across u
};

SpectralCurve spectral_curve(const std::vector<double>& u_samples, int n_nodes,
                             int k);

struct CriticalPoint {
  int n = 0;
  double u = 0.0;
  double lambda_residual = 0.0;
  double bracket_width = 0.0;
};

/// The unique u with λ_n(u) = ½, found by bisection on the increasing map
/// u ↦ λ_n(u); initial bracket by doubling.
CriticalPoint critical_u(int n, double tol = 1e-6, int n_nodes = 64);

struct CriticalParameters {
  std::vector<CriticalPoint> entries;

  void validate() const;  // u_n strictly increasing
};

CriticalParameters critical_parameters(int count, double tol = 1e-6,
                                       int n_nodes = 64);

/// ‖A₃‖(u) = max_λ 2√(λ(1−λ)) over the spectrum of H_u; touches 1 exactly
/// at every critical u_n.
double a3_norm_at(double u, int n_nodes = 64);

std::vector<std::pair<double, double>> a3_norm_curve(
    const std::vector<double>& u_samples, int n_nodes = 64);

/// Quadrature-sampled eigenfunction of H_u. Values are function samples at
/// the nodes, unit-normalized in the quadrature inner product, sign fixed
/// positive at the right end, parity (−1)^n checked.
struct ProlateMode {
  double u = 0.0;
  int n = 0;
  double lambda = 0.0;
  Quadrature quad;
  RealVector values;

  int sign_changes() const;
};

ProlateMode eigenvector(const SincKernelOperator& op, int n);

/// Band-limited extension: (P₂ψ)(x) = ∫_{-1}^{1} K(x,w) ψ(w) dw evaluated
/// by the same rule; inside [-1,1] this reproduces λ·ψ(x).
double nystrom_extend(const ProlateMode& mode, double x);

}  // namespace bellpos::prolate
