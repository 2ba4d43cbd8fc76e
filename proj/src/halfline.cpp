#include "bellpos/halfline.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "bellpos/chsh.hpp"

namespace bellpos::halfline {
namespace {

using boost::math::quadrature::gauss_kronrod;

// upper cut for the kernel integrals: integrands decay like e^{-λ}
constexpr double kLambdaCut = 46.0;

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  double err = 0.0;
  double val = gauss_kronrod<double, 61>::integrate(f, a, b, 15, tol, &err);
  if (err > 100.0 * tol * std::max(1.0, std::abs(val)))
    throw IntegrationError("quadrature error estimate " + std::to_string(err) +
                           " above tolerance");
  return val;
}

}  // namespace

KernelIntegrals appendix_kernel_integrals(double eta, double tol) {
  if (std::abs(eta) > 50.0) throw DomainError("|η| must not exceed 50");
  auto cos_kernel = [eta](double lam) {
    return std::cos(eta * lam) / std::cosh(lam);
  };
  // sin(ηλ)/sinh λ is bounded at the origin (→ η); series below the point
  // where direct evaluation would divide two denormals
  auto sin_kernel = [eta](double lam) {
    if (lam < 1e-8) return eta * (1.0 - lam * lam * (eta * eta + 1.0) / 6.0);
    return std::sin(eta * lam) / std::sinh(lam);
  };
  const double two_over_pi = 2.0 / kPi;
  KernelIntegrals out;
  out.offdiag = two_over_pi * (integrate(cos_kernel, 0.0, 1.0, tol) +
                               integrate(cos_kernel, 1.0, kLambdaCut, tol));
  out.diag = two_over_pi * (integrate(sin_kernel, 0.0, 1.0, tol) +
                            integrate(sin_kernel, 1.0, kLambdaCut, tol));
  return out;
}

Vector LogCoordinateMap::apply(const std::function<Complex(double)>& phi) const {
  Vector out(n_lambda);
  for (int i = 0; i < n_lambda; ++i) {
    double lam = lambda(i);
    out[i] = std::sqrt(2.0) * std::exp(lam) * phi(std::exp(2.0 * lam));
  }
  return out;
}

double LogCoordinateMap::norm(const Vector& v) const {
  return v.norm() * std::sqrt(dlambda());
}

TanhRelationResult tanh_relation_residual(double eps, const Profile& f,
                                          const grid::GridSpec& spec,
                                          double eta_shift,
                                          double max_truncation) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("ε must lie in (0,1)");
  Profile prof = eta_shift != 0.0 ? f.modulated(eta_shift / (2.0 * eps)) : f;
  Vector v = Vector::Zero(spec.n);
  for (int j = 0; j < spec.n; ++j) {
    double x = spec.x(j);
    if (x <= 0.0) continue;
    v[j] = Complex(0.0, 1.0) * std::sqrt(eps / x) * prof(eps * std::log(x));
  }
  double nr = grid::norm(spec, v);
  TanhRelationResult out;
  out.captured_mass = nr * nr;  // f_ε is unit-normalized on the half line
  if (1.0 - out.captured_mass > max_truncation) {
    double needed = std::exp(std::max(prof.quantile(0.9975), 1e-3) / eps);
    throw TruncationError("grid keeps only " + std::to_string(out.captured_mass) +
                              " of ‖f_ε‖²",
                          needed);
  }
  v /= nr;

  grid::Set positive = grid::Set::half_line(0.0);
  grid::GridOperator h = grid::GridOperator::compose(
      {grid::GridOperator::position_mask(spec, positive),
       grid::GridOperator::momentum_mask(spec, positive),
       grid::GridOperator::position_mask(spec, positive)});
  Vector hv = grid::apply(h, v);
  out.h_expectation = std::real(grid::inner(spec, v, hv));
  out.residual = grid::norm(spec, Vector(hv - 0.5 * v));
  return out;
}

double semi_analytic_chsh(double eps, const Profile& g, double tol) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("ε must lie in (0,1)");
  double lo = g.support_halfwidth > 0 ? g.center - g.support_halfwidth
                                      : g.center - 40.0 * g.width;
  double hi = g.support_halfwidth > 0 ? g.center + g.support_halfwidth
                                      : g.center + 40.0 * g.width;
  auto density = [&](double z) { return std::norm(g(z)); };
  double total = integrate(density, lo, hi, tol);
  double t_bar = integrate([&](double z) {
    return density(z) * std::tanh(kPi * eps * z);
  }, lo, hi, tol) / total;
  double s_bar = integrate([&](double z) {
    return density(z) / std::cosh(kPi * eps * z);
  }, lo, hi, tol) / total;
  // ⟨T⟩ for the packet state with the diagonal 2×2 multiplier settings
  return (1.0 + 2.0 * t_bar - t_bar * t_bar + s_bar * s_bar +
          2.0 * s_bar * (1.0 - t_bar)) / std::sqrt(2.0);
}

AnnulusBump::AnnulusBump(double inner, double outer) : r1(inner), r2(outer) {
  if (!(r1 > 0.0) || !(r2 > r1) || !std::isfinite(r2))
    throw ValidationError(
        "annulus bump needs 0 < r1 < r2 < ∞ (must vanish at the origin "
        "and at infinity)");
}

double AnnulusBump::operator()(double r) const {
  if (r <= r1 || r >= r2) return 0.0;
  double s = std::sin(kPi * (r - r1) / (r2 - r1));
  return s * s;
}

std::vector<double> dilation_invariance_diagnostic(
    const std::vector<double>& eps_sweep, const AnnulusBump& f,
    const Profile& profile, const grid::GridSpec& spec, bool momentum_rep) {
  std::vector<double> out;
  out.reserve(eps_sweep.size());
  for (double eps : eps_sweep) {
    chsh::HalflineState st = chsh::halfline_state(eps, profile, spec, spec);
    Matrix amp = st.psi.amplitudes;
    if (momentum_rep) {
      for (Eigen::Index j = 0; j < amp.cols(); ++j)
        amp.col(j) = grid::to_momentum(spec, amp.col(j));
      Matrix t = amp.transpose();
      for (Eigen::Index j = 0; j < t.cols(); ++j)
        t.col(j) = grid::to_momentum(spec, t.col(j));
      amp = t.transpose();
    }
    // cell weights cancel in the ratio
    double acc = 0.0, tot = 0.0;
    for (int i = 0; i < spec.n; ++i)
      for (int j = 0; j < spec.n; ++j) {
        double qa = momentum_rep ? spec.k(i) : spec.x(i);
        double qb = momentum_rep ? spec.k(j) : spec.x(j);
        double w = std::norm(amp(i, j));
        tot += w;
        acc += w * f(std::hypot(qa, qb));
      }
    out.push_back(acc / tot);
  }
  return out;
}

}  // namespace bellpos::halfline
