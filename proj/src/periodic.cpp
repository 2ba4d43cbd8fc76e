#include "bellpos/periodic.hpp"

#include <cmath>
#include <string>

#include "bellpos/prolate.hpp"  // gauss_legendre

namespace bellpos::periodic {
namespace {

// square wave over one period of the momentum variable
double g_2pi(double p) {
  double y = p / (2.0 * kPi) - std::floor(p / (2.0 * kPi));
  return y < 0.5 ? 1.0 : -1.0;
}

// ∫ g(p) e^{-inp} dp over [a,b] where g is constant; composite rule with
// panels scaled to the oscillation
Complex oscillatory_piece(int n, double a, double b,
                          const prolate::Quadrature& rule) {
  int panels = std::max(4, std::abs(n));
  Complex acc = 0.0;
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * h;
    for (int i = 0; i < rule.nodes.size(); ++i) {
      double x = lo + 0.5 * h * (rule.nodes[i] + 1.0);
      acc += 0.5 * h * rule.weights[i] * g_2pi(x) *
             std::exp(Complex(0.0, -n * x));
    }
  }
  return acc;
}

}  // namespace

double SquareWaveSpectrum::parseval_sum() const {
  double s = 0.0;
  for (const auto& cn : c) s += std::norm(cn);
  return s;
}

double SquareWaveSpectrum::partial_sum(double n_limit) const {
  double s = 0.0;
  for (int n = 1; n < n_limit && n <= max_n; ++n) s += std::norm(coeff(n));
  return 2.0 / kPi * s;
}

SquareWaveSpectrum square_wave_coeffs(int max_n) {
  if (max_n < 1) throw ValidationError("need max_n ≥ 1");
  SquareWaveSpectrum sw;
  sw.max_n = max_n;
  sw.c.resize(2 * max_n + 1);
  auto rule = prolate::gauss_legendre(8);
  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  for (int n = -max_n; n <= max_n; ++n) {
    // split at the jumps so each piece is analytic
    Complex inner = oscillatory_piece(n, -kPi, 0.0, rule) +
                    oscillatory_piece(n, 0.0, kPi, rule);
    sw.c[n + max_n] = norm * inner;
  }
  return sw;
}

CommutationResult commutation_check(double u, const CommutationOptions& opts) {
  if (!(u > 0)) throw DomainError("u must be positive");
  const int n = opts.grid_n;
  const int m = opts.samples_per_unit;
  if (m < 1 || n % m != 0)
    throw ConfigError("samples_per_unit must divide grid_n so the grid "
                      "spans whole momentum periods");
  const double dx = 1.0 / m;
  const double length = static_cast<double>(n) / m;

  CommutationResult out;
  out.u_requested = u;
  int periods = static_cast<int>(std::lround(length / u));
  if (periods < 1)
    throw ConfigError("grid length " + std::to_string(length) +
                      " holds no full period of u=" + std::to_string(u));
  out.u_effective = length / periods;
  if (std::abs(out.u_effective - u) > opts.max_snap * u)
    throw ConfigError("grid incommensurate with u=" + std::to_string(u) +
                      "; nearest representable is " +
                      std::to_string(out.u_effective));
  out.position_periods = periods;
  out.momentum_periods = m;  // span n·dk = 2π/dx = m periods of 2π

  grid::GridSpec spec(n, -0.5 * length, 0.5 * length);
  (void)dx;
  grid::GridOperator a1 = grid::dichotomic_from_set(
      spec, grid::Domain::position, grid::Set::periodic(out.u_effective));
  grid::GridOperator a2 = grid::dichotomic_from_set(
      spec, grid::Domain::momentum, grid::Set::periodic(2.0 * kPi));

  grid::A3Options a3opts;
  a3opts.tol = opts.tol;
  a3opts.max_iterations = opts.max_iterations;
  try {
    grid::A3Estimate est = grid::a3_norm_grid(a1, a2, a3opts);
    out.a3_norm = est.value;
    out.iterations = est.iterations;
  } catch (const IterationError& e) {
    // Rayleigh quotients of a positive operator approach the norm from
    // below, so the last estimate is still a valid lower value
    out.a3_norm = e.last_estimate;
    out.iterations = opts.max_iterations;
  }
  return out;
}

JumpBound jump_lower_bound(double eps, int max_n) {
  if (!(eps > 0.0 && eps < 0.5)) throw DomainError("ε must lie in (0, 1/2)");
  SquareWaveSpectrum sw = square_wave_coeffs(max_n);
  JumpBound jb;
  jb.partial_sum = sw.partial_sum(1.0 / (2.0 * eps));
  jb.commutator_bound = std::sqrt(jb.partial_sum);
  double a3_lower = 0.5 * jb.commutator_bound;
  jb.bell_value = 2.0 * std::sqrt(1.0 + a3_lower * a3_lower);
  return jb;
}

TestVector test_vector_construction(double eps, const grid::GridSpec& spec) {
  if (!(eps > 0.0 && eps < 0.5)) throw DomainError("ε must lie in (0, 1/2)");
  double m_real = 1.0 / spec.dx();
  if (std::abs(m_real - std::lround(m_real)) > 1e-9)
    throw ConfigError("dx must be 1/integer so e^{inP} is an exact shift");
  double length = spec.x_max - spec.x_min;
  int periods = static_cast<int>(std::lround(length / (1.0 + eps)));
  if (periods < 1) throw ConfigError("grid too short for the period 1+ε");
  double u_eff = length / periods;
  double eps_eff = u_eff - 1.0;
  if (!(eps_eff > 0.0) || std::abs(eps_eff - eps) > 0.1 * eps)
    throw ConfigError("grid cannot represent 1+ε commensurately; nearest ε is " +
                      std::to_string(eps_eff));

  TestVector tv;
  tv.spec = spec;
  tv.eps = eps_eff;
  tv.psi = Vector::Zero(spec.n);
  int count = 0;
  for (int j = 0; j < spec.n; ++j) {
    double x = spec.x(j);
    if (x >= 0.0 && x < eps_eff) {
      double s = std::sin(kPi * x / eps_eff);
      tv.psi[j] = s * s;
      ++count;
    }
  }
  if (count < 8)
    throw ResolutionError("support [0, ε) holds " + std::to_string(count) +
                          " samples; need at least 8");
  tv.psi /= grid::norm(spec, tv.psi);

  // the defining property: g_{1+ε}(Q)ψ = ψ exactly on the grid
  grid::GridOperator g1e = grid::dichotomic_from_set(
      spec, grid::Domain::position, grid::Set::periodic(1.0 + eps_eff));
  Vector check = grid::apply(g1e, tv.psi);
  if ((check - tv.psi).norm() != 0.0)
    throw ValidationError("test vector is not fixed by g_{1+ε}(Q)");
  return tv;
}

int shift_sign(const TestVector& tv, int n) {
  const int size = tv.spec.n;
  const int m = static_cast<int>(std::lround(1.0 / tv.spec.dx()));
  Vector shifted(size);
  long shift = static_cast<long>(n) * m;
  for (int j = 0; j < size; ++j) {
    long src = (j + shift) % size;
    if (src < 0) src += size;
    shifted[j] = tv.psi[src];
  }
  grid::GridOperator g1e = grid::dichotomic_from_set(
      tv.spec, grid::Domain::position, grid::Set::periodic(1.0 + tv.eps));
  Vector masked = grid::apply(g1e, shifted);
  if ((masked - shifted).norm() == 0.0) return 1;
  if ((masked + shifted).norm() == 0.0) return -1;
  throw ValidationError("shifted copy n=" + std::to_string(n) +
                        " is not a sign eigenvector of g_{1+ε}(Q)");
}

double commutator_norm_sq_on_test_vector(const TestVector& tv) {
  grid::GridOperator a1 = grid::dichotomic_from_set(
      tv.spec, grid::Domain::position, grid::Set::periodic(1.0 + tv.eps));
  grid::GridOperator a2 = grid::dichotomic_from_set(
      tv.spec, grid::Domain::momentum, grid::Set::periodic(2.0 * kPi));
  Vector w = grid::apply(a2, grid::apply(a1, tv.psi)) -
             grid::apply(a1, grid::apply(a2, tv.psi));
  double nr = grid::norm(tv.spec, w);
  return nr * nr;
}

}  // namespace bellpos::periodic
