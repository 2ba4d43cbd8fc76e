#include "bellpos/chsh.hpp"

#include <cmath>
#include <string>

namespace bellpos::chsh {
namespace {

const Complex kQuarterPhase = std::exp(Complex(0.0, -kPi / 4.0));

// One-particle axis samples of the half-line state: √(ε/|q|)·f(ε ln|q|),
// zero at the origin sample.
Vector halfline_axis(double eps, const Profile& f, const grid::GridSpec& spec) {
  Vector v(spec.n);
  for (int j = 0; j < spec.n; ++j) {
    double q = spec.x(j);
    double aq = std::abs(q);
    if (aq == 0.0) {
      v[j] = 0.0;
      continue;
    }
    v[j] = std::sqrt(eps / aq) * f(eps * std::log(aq));
  }
  return v;
}

}  // namespace

double beta_surface(double h_a, double h_b) {
  if (h_a < 0.0 || h_a > 1.0 || h_b < 0.0 || h_b > 1.0)
    throw DomainError("central parameters must lie in [0,1]");
  return 2.0 * std::sqrt(1.0 + 4.0 * std::sqrt(h_a * (1.0 - h_a)) *
                                   std::sqrt(h_b * (1.0 - h_b)));
}

grid::GridSpec aligned_interval_grid(int n, double x_max_request, double u) {
  if (!(x_max_request > 1.0))
    throw ValidationError("grid must extend beyond the unit interval");
  // dx = 2/m with odd m puts the mask cut ±1 halfway between samples; among
  // those, prefer the m whose band edge ±u also lands nearest mid-cell.
  int best_m = 0;
  double best_score = 2.0;
  for (int m = 3; m <= 4 * n; m += 2) {
    double x_max = static_cast<double>(n) / m;
    if (x_max > 1.6 * x_max_request) continue;
    if (x_max < 0.6 * x_max_request || x_max <= 1.5) break;
    double cells = u * n / (kPi * m);  // u / dk
    double frac = cells - std::floor(cells);
    double score = std::abs(frac - 0.5);
    if (score < best_score) {
      best_score = score;
      best_m = m;
    }
  }
  if (best_m == 0)
    throw ValidationError("no aligned grid near x_max=" +
                          std::to_string(x_max_request));
  return grid::symmetric_grid(n, static_cast<double>(n) / best_m);
}

IntervalState build_interval_state(const IntervalSetup& setup) {
  if (!(setup.u > 0)) throw DomainError("u must be positive");
  for (const auto* spec : {&setup.grid_a, &setup.grid_b}) {
    if (spec->dx() > 1.0 / 8.0)
      throw ResolutionError("fewer than 8 samples per unit length; the "
                            "state is discontinuous at q = ±1");
    if (spec->x_min > -1.0 || spec->x_max < 1.0)
      throw ValidationError("grid must contain the measurement interval");
  }

  auto op = prolate::build_hu(setup.u, setup.nystrom_nodes);
  auto mode = prolate::eigenvector(op, setup.mode);
  IntervalState out;
  out.lambda = mode.lambda;
  out.lambda_residual = std::abs(mode.lambda - 0.5);
  out.at_critical = out.lambda_residual <= setup.critical_warn_tol;

  // e^±(q) = (∓-phase pattern)·√2(P₂ψ)(q); the band-limited extension is
  // the sinc transform of the mode, evaluated anywhere on the line.
  auto axis_pair = [&](const grid::GridSpec& spec) {
    std::pair<Vector, Vector> ep(Vector(spec.n), Vector(spec.n));
    for (int j = 0; j < spec.n; ++j) {
      double q = spec.x(j);
      double e = std::sqrt(2.0) * prolate::nystrom_extend(mode, q);
      bool in = std::abs(q) <= 1.0;  // samples on the cut take the inside value
      ep.first[j] = in ? Complex(0.0, -e) : Complex(e, 0.0);
      ep.second[j] = in ? Complex(0.0, -e) : Complex(-e, 0.0);
    }
    return ep;
  };
  auto [eap, eam] = axis_pair(setup.grid_a);
  auto [ebp, ebm] = axis_pair(setup.grid_b);

  out.psi.spec_a = setup.grid_a;
  out.psi.spec_b = setup.grid_b;
  out.psi.amplitudes.resize(setup.grid_a.n, setup.grid_b.n);
  const double c = setup.phase_coeff();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < setup.grid_a.n; ++i) {
    double qa = setup.grid_a.x(i);
    for (int j = 0; j < setup.grid_b.n; ++j) {
      double qb = setup.grid_b.x(j);
      Complex amp =
          inv_sqrt2 * (kQuarterPhase * eap[i] * ebp[j] + eam[i] * ebm[j]);
      // two-time representation: undo the free-evolution phase per particle
      amp *= std::exp(Complex(0.0, -c * (qa * qa + qb * qb)));
      out.psi.amplitudes(i, j) = amp;
    }
  }
  double nr = out.psi.norm();
  out.captured_mass = nr * nr;
  out.psi.amplitudes /= nr;
  return out;
}

ChshReport evaluate_interval_chsh(const IntervalSetup& setup) {
  IntervalState state = build_interval_state(setup);

  auto settings = [&](const grid::GridSpec& spec) {
    grid::GridOperator a1 = grid::dichotomic_from_set(
        spec, grid::Domain::position, grid::Set::interval(-1.0, 1.0));
    // second setting: band mask conjugated by the free-evolution phase
    double c = setup.phase_coeff();
    grid::GridOperator a2 = grid::GridOperator::compose(
        {grid::GridOperator::quadratic_phase(spec, -c),
         grid::dichotomic_from_set(spec, grid::Domain::momentum,
                                   grid::Set::interval(-setup.u, setup.u)),
         grid::GridOperator::quadratic_phase(spec, c)});
    return std::make_pair(a1, a2);
  };
  auto [a1, a2] = settings(setup.grid_a);
  auto [b1, b2] = settings(setup.grid_b);

  grid::ChshValue val = grid::chsh_expectation(state.psi, a1, a2, b1, b2);
  ChshReport report;
  report.expectation = val.value;
  report.bound = kTsirelson;
  report.deficit = kTsirelson - val.value;
  report.imag_residual = val.imag_residual;
  report.lambda = state.lambda;
  report.lambda_residual = state.lambda_residual;
  report.captured_mass = state.captured_mass;
  return report;
}

HalflineState halfline_state(double eps, const Profile& f,
                             const grid::GridSpec& spec_a,
                             const grid::GridSpec& spec_b,
                             const HalflineOptions& opts) {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("ε must lie in (0,1)");
  Vector fa = halfline_axis(eps, f, spec_a);
  Vector fb = halfline_axis(eps, f, spec_b);

  HalflineState out;
  out.psi.spec_a = spec_a;
  out.psi.spec_b = spec_b;
  out.psi.amplitudes.resize(spec_a.n, spec_b.n);
  const double pref = 1.0 / (2.0 * std::sqrt(2.0));
  for (int i = 0; i < spec_a.n; ++i) {
    double sa = spec_a.x(i) >= 0 ? 1.0 : -1.0;
    for (int j = 0; j < spec_b.n; ++j) {
      double sb = spec_b.x(j) >= 0 ? 1.0 : -1.0;
      Complex amp = pref * (kQuarterPhase + sa * sb) * fa[i] * fb[j];
      out.psi.amplitudes(i, j) = amp;
    }
  }
  if (opts.quadratic_phase_coeff != 0.0) {
    double c = opts.quadratic_phase_coeff;
    for (int i = 0; i < spec_a.n; ++i)
      for (int j = 0; j < spec_b.n; ++j) {
        double qa = spec_a.x(i), qb = spec_b.x(j);
        out.psi.amplitudes(i, j) *=
            std::exp(Complex(0.0, -c * (qa * qa + qb * qb)));
      }
  }
  double nr = out.psi.norm();
  out.captured_mass = nr * nr;  // the continuum state is unit-normalized
  if (out.captured_mass < opts.min_captured_mass) {
    double lam_hi = f.quantile(0.9975);
    double needed = std::exp(std::max(lam_hi, 1e-3) / eps);
    throw TruncationError(
        "grid holds only " + std::to_string(out.captured_mass) +
            " of the state mass; support spreads like exp(±O(1/ε))",
        needed);
  }
  out.psi.amplitudes /= nr;
  return out;
}

double weight_at_origin(const Profile& f) {
  double total = f.mass_below(std::numeric_limits<double>::infinity());
  if (std::abs(total - 1.0) > 1e-6)
    throw ValidationError("profile is not unit-normalized: ∫|f|² = " +
                          std::to_string(total));
  double below = f.mass_below(0.0);
  return below * below;
}

WeightReport weight_at_origin_report(const Profile& f, double eps,
                                     const grid::GridSpec& spec,
                                     const std::vector<double>& a_values) {
  WeightReport rep;
  rep.closed_form = weight_at_origin(f);
  // Box expectations of the product state factorize through the one-axis
  // radial mass, so the grid estimate reduces to a ratio of axis sums.
  Vector axis = halfline_axis(eps, f, spec);
  double total = 0.0;
  std::vector<double> density(spec.n);
  for (int j = 0; j < spec.n; ++j) {
    density[j] = std::norm(axis[j]);
    total += density[j];
  }
  if (total <= 0.0)
    throw ValidationError("state mass vanished on this grid");
  for (double a : a_values) {
    if (!(a > 0)) throw DomainError("box size must be positive");
    double inside = 0.0;
    for (int j = 0; j < spec.n; ++j)
      if (std::abs(spec.x(j)) <= a) inside += density[j];
    double ratio = inside / total;
    rep.grid_estimates.emplace_back(a, ratio * ratio);
  }
  return rep;
}

}  // namespace bellpos::chsh
