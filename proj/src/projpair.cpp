#include "bellpos/projpair.hpp"

#include <cmath>
#include <string>

namespace bellpos::projpair {
namespace {

void check_projection(const Matrix& p, const char* name, double tol) {
  if (p.rows() != p.cols())
    throw ValidationError(std::string(name) + " is not square");
  double idem = operator_norm(p * p - p);
  if (idem > tol)
    throw ValidationError(std::string(name) + " is not idempotent: ‖P²−P‖ = " +
                          std::to_string(idem));
  double herm = hermiticity_residual(p);
  if (herm > tol)
    throw ValidationError(std::string(name) + " is not Hermitian: ‖P−P†‖ = " +
                          std::to_string(herm));
}

void check_dichotomic(const Matrix& a, const char* name, double tol) {
  if (a.rows() != a.cols())
    throw ValidationError(std::string(name) + " is not square");
  double invol =
      operator_norm(a * a - Matrix::Identity(a.rows(), a.cols()));
  if (invol > tol)
    throw ValidationError(std::string(name) + " is not an involution: ‖A²−1‖ = " +
                          std::to_string(invol));
  double herm = hermiticity_residual(a);
  if (herm > tol)
    throw ValidationError(std::string(name) + " is not Hermitian");
}

Matrix pauli(int i) {
  Matrix s(2, 2);
  switch (i) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

}  // namespace

ProjectionPair::ProjectionPair(Matrix a, Matrix b, double tol)
    : dim(static_cast<int>(a.rows())), p1(std::move(a)), p2(std::move(b)) {
  check_projection(p1, "p1", tol);
  check_projection(p2, "p2", tol);
  if (p1.rows() != p2.rows())
    throw ValidationError("p1 and p2 act on different spaces");
}

ChshOperatorSet::ChshOperatorSet(Matrix a1_, Matrix a2_, Matrix b1_,
                                 Matrix b2_, double tol)
    : a1(std::move(a1_)), a2(std::move(a2_)), b1(std::move(b1_)),
      b2(std::move(b2_)) {
  check_dichotomic(a1, "a1", tol);
  check_dichotomic(a2, "a2", tol);
  check_dichotomic(b1, "b1", tol);
  check_dichotomic(b2, "b2", tol);
  if (a1.rows() != a2.rows() || b1.rows() != b2.rows())
    throw ValidationError("per-party settings must share a dimension");
}

Matrix center_element(const ProjectionPair& pair) {
  const Matrix& p1 = pair.p1;
  const Matrix& p2 = pair.p2;
  Matrix c = Matrix::Identity(pair.dim, pair.dim) - p1 - p2 + p1 * p2 +
             p2 * p1;
  return 0.5 * (c + c.adjoint().eval());  // strip numerical skew
}

double commutator_identity_residual(const ProjectionPair& pair) {
  Matrix comm = pair.p1 * pair.p2 - pair.p2 * pair.p1;
  Matrix c = center_element(pair);
  Matrix id = Matrix::Identity(pair.dim, pair.dim);
  return operator_norm(-(comm * comm) - c * (id - c));
}

double a3_norm(const ProjectionPair& pair) {
  Matrix c = center_element(pair);
  Matrix id = Matrix::Identity(pair.dim, pair.dim);
  double top = hermitian_norm(c * (id - c));
  return 2.0 * std::sqrt(std::max(top, 0.0));
}

double chsh_norm_direct(const ChshOperatorSet& ops, int dim_cap) {
  long total = static_cast<long>(ops.dim_a()) * ops.dim_b();
  if (total > dim_cap)
    throw SizeError("tensor-product dimension " + std::to_string(total) +
                    " exceeds cap " + std::to_string(dim_cap));
  Matrix t = kron(ops.a1, ops.b1 + ops.b2) + kron(ops.a2, ops.b1 - ops.b2);
  return hermitian_norm(t);
}

double chsh_norm_formula(const ChshOperatorSet& ops) {
  const Complex half_i(0.0, -0.5);  // (2i)^{-1}
  Matrix a3 = half_i * (ops.a1 * ops.a2 - ops.a2 * ops.a1);
  Matrix b3 = half_i * (ops.b1 * ops.b2 - ops.b2 * ops.b1);
  return std::sqrt(4.0 * (1.0 + hermitian_norm(a3) * hermitian_norm(b3)));
}

HalmosDecomposition halmos_decompose(const ProjectionPair& pair,
                                     double fold_tol) {
  const int dim = pair.dim;
  Matrix c = center_element(pair);
  Eigen::SelfAdjointEigenSolver<Matrix> es(c);

  HalmosDecomposition out;
  std::vector<int> h0_cols, hperp_cols;
  for (int i = 0; i < dim; ++i) {
    double h = es.eigenvalues()[i];
    // kernel of A3 = eigenvectors of C for eigenvalues 0 and 1; eigenvalues
    // within fold_tol of either end go there too, since V divides by
    // sqrt(H(1-H))
    if (std::min(std::abs(h), std::abs(1.0 - h)) <= fold_tol) {
      h0_cols.push_back(i);
      if (h > fold_tol && h < 1.0 - fold_tol) out.folded.push_back(i);
    } else {
      hperp_cols.push_back(i);
    }
  }
  const int m0 = static_cast<int>(h0_cols.size());
  const int mp = static_cast<int>(hperp_cols.size());
  out.h0_basis.resize(dim, m0);
  out.hperp_basis.resize(dim, mp);
  for (int i = 0; i < m0; ++i)
    out.h0_basis.col(i) = es.eigenvectors().col(h0_cols[i]);
  for (int i = 0; i < mp; ++i)
    out.hperp_basis.col(i) = es.eigenvectors().col(hperp_cols[i]);

  if (mp == 0) {
    out.k_basis.resize(dim, 0);
    out.h_op.resize(0, 0);
    out.v.resize(0, 0);
    return out;  // commuting pair: everything lives in H0
  }
  if (mp % 2 != 0)
    throw ValidationError("noncommuting sector has odd dimension " +
                          std::to_string(mp) + "; eigenvalue clustering at "
                          "the fold threshold, adjust fold_tol");

  // K = P1 H0^⊥. The compression of P1 to the invariant subspace H0^⊥ is a
  // projection; its range gives an orthonormal basis of K.
  const int r = mp / 2;
  Matrix p1_c = out.hperp_basis.adjoint() * pair.p1 * out.hperp_basis;
  Eigen::SelfAdjointEigenSolver<Matrix> esp(p1_c);
  int rank = 0;
  for (int i = 0; i < mp; ++i)
    if (esp.eigenvalues()[i] > 0.5) ++rank;
  if (rank != r)
    throw ValidationError("P1 restricted to the noncommuting sector has rank " +
                          std::to_string(rank) + ", expected " +
                          std::to_string(r));
  Matrix k_in_hperp(mp, r);
  int col = 0;
  for (int i = 0; i < mp; ++i)
    if (esp.eigenvalues()[i] > 0.5) k_in_hperp.col(col++) = esp.eigenvectors().col(i);
  out.k_basis = out.hperp_basis * k_in_hperp;

  Matrix h_full = pair.p1 * pair.p2 * pair.p1;
  out.h_op = out.k_basis.adjoint() * h_full * out.k_basis;
  out.h_op = 0.5 * (out.h_op + out.h_op.adjoint().eval());

  // V φ = i P1 φ ⊗ |+⟩₁ + (H(1−H))^{-1/2} P1 P2 (1−P1) φ ⊗ |−⟩₁ with
  // |±⟩₁ = (1,±1)/√2; rows stored spin-major in the standard C² basis.
  Matrix id = Matrix::Identity(dim, dim);
  Matrix m_neg = hermitian_function(out.h_op, [](double h) {
    double d = h * (1.0 - h);
    return d > 0 ? 1.0 / std::sqrt(d) : 0.0;
  });
  Matrix y_plus = Complex(0, 1) * (out.k_basis.adjoint() * (pair.p1 * out.hperp_basis));
  Matrix y_minus = m_neg * (out.k_basis.adjoint() *
                            (pair.p1 * pair.p2 * ((id - pair.p1) * out.hperp_basis)));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  out.v.resize(2 * r, mp);
  out.v.topRows(r) = inv_sqrt2 * (y_plus + y_minus);
  out.v.bottomRows(r) = inv_sqrt2 * (y_plus - y_minus);

  out.isometry_residual = operator_norm(
      out.v.adjoint() * out.v - Matrix::Identity(mp, mp));

  // reconstruction: compressions of A_i against their 2×2 canonical forms
  Matrix a1 = 2.0 * pair.p1 - id;
  Matrix a2 = 2.0 * pair.p2 - id;
  Matrix a3 = Complex(0, -0.5) * (a1 * a2 - a2 * a1);
  Matrix alpha = hermitian_function(out.h_op, [](double h) { return 2.0 * h - 1.0; });
  Matrix beta = hermitian_function(out.h_op, [](double h) {
    return 2.0 * std::sqrt(std::max(h * (1.0 - h), 0.0));
  });
  Matrix idr = Matrix::Identity(r, r);
  auto compressed = [&](const Matrix& op) {
    return out.v * (out.hperp_basis.adjoint() * op * out.hperp_basis) *
           out.v.adjoint();
  };
  out.reconstruction_residual_a1 =
      operator_norm(compressed(a1) - kron(pauli(1), idr));
  out.reconstruction_residual_a2 = operator_norm(
      compressed(a2) - kron(pauli(1), alpha) - kron(pauli(2), beta));
  out.reconstruction_residual_a3 =
      operator_norm(compressed(a3) - kron(pauli(3), beta));
  return out;
}

std::pair<Vector, Vector> violating_pair(const HalmosDecomposition& d,
                                         const Vector& f) {
  const int r = static_cast<int>(d.k_basis.cols());
  if (f.size() != r)
    throw ValidationError("f must be given in k_basis coordinates");
  const int mp = static_cast<int>(d.hperp_basis.cols());
  Vector fp = Vector::Zero(2 * r), fm = Vector::Zero(2 * r);
  fp.head(r) = f;  // f ⊗ |+⟩, spin-major
  fm.tail(r) = f;  // f ⊗ |−⟩
  Vector e_plus = d.hperp_basis * (d.v.adjoint() * fp);
  Vector e_minus = d.hperp_basis * (d.v.adjoint() * fm);
  (void)mp;
  return {e_plus, e_minus};
}

MaxState build_max_state(const HalmosDecomposition& da,
                         const HalmosDecomposition& db, const Vector& fa,
                         const Vector& fb) {
  if (std::abs(fa.norm() - 1.0) > 1e-9 || std::abs(fb.norm() - 1.0) > 1e-9)
    throw ValidationError("f vectors must be unit-normalized");
  double res_a = (da.h_op * fa - 0.5 * fa).norm();
  double res_b = (db.h_op * fb - 0.5 * fb).norm();

  auto [eap, eam] = violating_pair(da, fa);
  auto [ebp, ebm] = violating_pair(db, fb);
  const Complex phase = std::exp(Complex(0.0, -kPi / 4.0));
  const int na = static_cast<int>(eap.size());
  const int nb = static_cast<int>(ebp.size());
  Vector psi(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      psi[i * nb + j] = (phase * eap[i] * ebp[j] + eam[i] * ebm[j]) /
                        std::sqrt(2.0);
  psi /= psi.norm();
  return {psi, std::max(res_a, res_b)};
}

}  // namespace bellpos::projpair
