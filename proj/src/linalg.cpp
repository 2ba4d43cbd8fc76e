#include "bellpos/linalg.hpp"

namespace bellpos {

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double hermitian_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double hermiticity_residual(const Matrix& m) {
  return operator_norm(m - m.adjoint());
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix random_hermitian(int dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  return 0.5 * (m + m.adjoint().eval());
}

Matrix random_projection(int dim, std::mt19937& rng) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(random_hermitian(dim, rng));
  std::uniform_int_distribution<int> rank_dist(0, dim);
  int rank = rank_dist(rng);
  Matrix p = Matrix::Zero(dim, dim);
  for (int r = 0; r < rank; ++r) {
    Vector v = es.eigenvectors().col(r);
    p += v * v.adjoint();
  }
  return p;
}

Matrix random_dichotomic(int dim, std::mt19937& rng) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(random_hermitian(dim, rng));
  std::uniform_int_distribution<int> coin(0, 1);
  Eigen::VectorXd signs(dim);
  for (int i = 0; i < dim; ++i) signs[i] = coin(rng) ? 1.0 : -1.0;
  // avoid the degenerate ±identity, which has no second setting to fight
  if (signs.maxCoeff() < 0) signs[0] = 1.0;
  if (signs.minCoeff() > 0) signs[0] = -1.0;
  return es.eigenvectors() * signs.asDiagonal() *
         es.eigenvectors().adjoint();
}

Vector random_unit_vector(int dim, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

}  // namespace bellpos
