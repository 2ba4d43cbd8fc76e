#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

namespace bellpos {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline const double kTsirelson = 2.0 * std::sqrt(2.0);

/// Operator norm (largest singular value). Works for any dense matrix.
double operator_norm(const Matrix& m);

/// Operator norm of a Hermitian matrix via eigendecomposition (exact role:
/// small dense oracles, so no iterative shortcuts).
double hermitian_norm(const Matrix& m);

/// ‖M − M†‖.
double hermiticity_residual(const Matrix& m);

/// Kronecker product, row-major convention: (A⊗B)(ia*nb+ib, ja*nb+jb).
Matrix kron(const Matrix& a, const Matrix& b);

/// Matrix function of a Hermitian matrix through its eigendecomposition.
template <typename F>
Matrix hermitian_function(const Matrix& h, F&& f) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Eigen::VectorXd d = es.eigenvalues();
  Eigen::VectorXd fd(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) fd[i] = f(d[i]);
  return es.eigenvectors() * fd.asDiagonal() * es.eigenvectors().adjoint();
}

/// Random Hermitian matrix with independent Gaussian entries.
Matrix random_hermitian(int dim, std::mt19937& rng);

/// Random orthogonal projection: spectral projection of a random Hermitian
/// matrix onto a uniformly drawn number of its eigenvectors.
Matrix random_projection(int dim, std::mt19937& rng);

/// Random dichotomic observable (Hermitian involution): U diag(±1) U†.
Matrix random_dichotomic(int dim, std::mt19937& rng);

/// Random unit vector.
Vector random_unit_vector(int dim, std::mt19937& rng);

}  // namespace bellpos
