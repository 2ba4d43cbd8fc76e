#include "bellpos/prolate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bellpos::prolate {

Quadrature gauss_legendre(int n) {
  if (n < 1) throw ValidationError("quadrature needs at least one node");
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev estimate, then Newton on P_n
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    q.nodes[i] = -x;
    q.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    q.weights[i] = w;
    q.weights[n - 1 - i] = w;
  }
  return q;
}

double sinc_kernel(double u, double v, double w) {
  double d = v - w;
  if (std::abs(d) < 1e-8) {
    double t = u * d;
    return u / kPi * (1.0 - t * t / 6.0);  // removable singularity
  }
  return std::sin(u * d) / (kPi * d);
}

SincKernelOperator build_hu(double u, int n_nodes) {
  if (!(u > 0)) throw DomainError("u must be positive");
  if (n_nodes < 16) throw ValidationError("need at least 16 quadrature nodes");
  SincKernelOperator op;
  op.u = u;
  op.n_nodes = n_nodes;
  op.quad = gauss_legendre(n_nodes);
  op.matrix.resize(n_nodes, n_nodes);
  RealVector sw = op.quad.weights.cwiseSqrt();
  for (int i = 0; i < n_nodes; ++i)
    for (int j = 0; j <= i; ++j) {
      double kij = sw[i] * sinc_kernel(u, op.quad.nodes[i], op.quad.nodes[j]) * sw[j];
      op.matrix(i, j) = kij;
      op.matrix(j, i) = kij;
    }
  return op;
}

std::pair<RealVector, RealMatrix> eigensystem(const SincKernelOperator& op) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(op.matrix);
  RealVector vals = es.eigenvalues().reverse();
  RealMatrix vecs = es.eigenvectors().rowwise().reverse();
  return {vals, vecs};
}

RealVector spectrum(const SincKernelOperator& op, int k) {
  if (k > op.n_nodes)
    throw ValidationError("requested more eigenvalues than nodes");
  auto [vals, vecs] = eigensystem(op);
  for (int i = 0; i < op.n_nodes; ++i)
    if (vals[i] < -1e-10 || vals[i] > 1.0 + 1e-10)
      throw ValidationError("eigenvalue " + std::to_string(vals[i]) +
                            " escapes (0,1)");
  return vals.head(k);
}

void SpectralCurve::validate() const {
  for (size_t s = 0; s < u_samples.size(); ++s) {
    for (int j = 0; j + 1 < k; ++j)
      if (rows(s, j) - rows(s, j + 1) < -1e-12)
        throw ValidationError("eigenvalue ordering violated at u=" +
                              std::to_string(u_samples[s]));
    for (int j = 0; j < k; ++j) {
      if (rows(s, j) < -1e-10 || rows(s, j) > 1.0 + 1e-10)
        throw ValidationError("eigenvalue escapes (0,1)");
      if (s > 0 && rows(s, j) < rows(s - 1, j) - 1e-10)
        throw ValidationError("λ_" + std::to_string(j) +
                              " not nondecreasing in u");
    }
  }
}

SpectralCurve spectral_curve(const std::vector<double>& u_samples, int n_nodes,
                             int k) {
  SpectralCurve curve;
  curve.u_samples = u_samples;
  curve.k = k;
  curve.rows.resize(u_samples.size(), k);
  for (size_t s = 0; s < u_samples.size(); ++s)
    curve.rows.row(s) = spectrum(build_hu(u_samples[s], n_nodes), k).transpose();
  curve.validate();
  return curve;
}

CriticalPoint critical_u(int n, double tol, int n_nodes) {
  if (n < 0) throw ValidationError("mode index must be nonnegative");
  if (!(tol > 0)) throw ValidationError("tolerance must be positive");
  auto lambda_at = [&](double u) {
    return spectrum(build_hu(u, n_nodes), n + 1)[n];
  };
  double lo = 1e-3, hi = 1.0;
  int doublings = 0;
  while (lambda_at(hi) < 0.5) {
    hi *= 2.0;
    if (++doublings > 12)
      throw IterationError("bracket search failed for λ_" + std::to_string(n),
                           hi);
  }
  CriticalPoint cp;
  cp.n = n;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double lam = lambda_at(mid);
    cp.u = mid;
    cp.lambda_residual = lam - 0.5;
    cp.bracket_width = hi - lo;
    if (std::abs(cp.lambda_residual) <= tol) return cp;
    if (lam < 0.5)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-14) return cp;
  }
  throw IterationError("bisection stalled for λ_" + std::to_string(n), cp.u);
}

void CriticalParameters::validate() const {
  for (size_t i = 1; i < entries.size(); ++i)
    if (!(entries[i].u > entries[i - 1].u))
      throw ValidationError("critical values must increase with n");
}

CriticalParameters critical_parameters(int count, double tol, int n_nodes) {
  CriticalParameters cp;
  for (int n = 0; n < count; ++n) cp.entries.push_back(critical_u(n, tol, n_nodes));
  cp.validate();
  return cp;
}

double a3_norm_at(double u, int n_nodes) {
  // max over the whole computed spectrum; β(λ)=2√(λ(1−λ)) peaks at ½, so
  // eigenvalues beyond the leading block cannot be ignored blindly
  auto [vals, vecs] = eigensystem(build_hu(u, n_nodes));
  double best = 0.0;
  for (int i = 0; i < vals.size(); ++i) {
    double lam = std::clamp(vals[i], 0.0, 1.0);
    best = std::max(best, 2.0 * std::sqrt(lam * (1.0 - lam)));
  }
  return best;
}

std::vector<std::pair<double, double>> a3_norm_curve(
    const std::vector<double>& u_samples, int n_nodes) {
  std::vector<std::pair<double, double>> out;
  out.reserve(u_samples.size());
  for (double u : u_samples) out.emplace_back(u, a3_norm_at(u, n_nodes));
  return out;
}

int ProlateMode::sign_changes() const {
  int changes = 0;
  double prev = 0.0;
  for (int i = 0; i < values.size(); ++i) {
    double v = values[i];
    if (std::abs(v) < 1e-9) continue;
    if (prev != 0.0 && v * prev < 0) ++changes;
    prev = v;
  }
  return changes;
}

ProlateMode eigenvector(const SincKernelOperator& op, int n) {
  if (n >= op.n_nodes) throw ValidationError("mode index beyond node count");
  auto [vals, vecs] = eigensystem(op);
  if (n + 1 < op.n_nodes && vals[n] - vals[n + 1] < 1e-12)
    throw ValidationError("eigenvalue spacing below 1e-12 at mode " +
                          std::to_string(n));
  ProlateMode mode;
  mode.u = op.u;
  mode.n = n;
  mode.lambda = vals[n];
  mode.quad = op.quad;
  // symmetrized eigenvector y relates to function samples by ψ = y/√w
  mode.values = vecs.col(n).cwiseQuotient(op.quad.weights.cwiseSqrt());
  // sign: positive to the right of the last node of the function
  for (int i = op.n_nodes - 1; i >= 0; --i) {
    if (std::abs(mode.values[i]) > 1e-9) {
      if (mode.values[i] < 0) mode.values = -mode.values;
      break;
    }
  }
  // parity (−1)^n; Gauss–Legendre nodes are symmetric
  double parity = (n % 2 == 0) ? 1.0 : -1.0;
  for (int i = 0; i < op.n_nodes; ++i) {
    double mirror = parity * mode.values[op.n_nodes - 1 - i];
    if (std::abs(mode.values[i] - mirror) > 1e-8)
      throw ValidationError("eigenfunction parity check failed at mode " +
                            std::to_string(n));
  }
  return mode;
}

double nystrom_extend(const ProlateMode& mode, double x) {
  double acc = 0.0;
  for (int j = 0; j < mode.values.size(); ++j)
    acc += mode.quad.weights[j] *
           sinc_kernel(mode.u, x, mode.quad.nodes[j]) * mode.values[j];
  return acc;
}

}  // namespace bellpos::prolate
