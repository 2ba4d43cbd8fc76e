#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bellpos/grid.hpp"
#include "bellpos/projpair.hpp"
#include "bellpos/prolate.hpp"
#include "test_support.hpp"

using namespace bellpos;
using namespace bellpos::grid;

namespace {

Vector random_state(const GridSpec& spec, unsigned salt = 0) {
  auto rng = test_support::seeded_rng(salt);
  Vector v = random_unit_vector(spec.n, rng);
  return v / norm(spec, v);
}

Vector gaussian_state(const GridSpec& spec, double sigma, double center = 0.0) {
  Vector v(spec.n);
  for (int j = 0; j < spec.n; ++j) {
    double t = (spec.x(j) - center) / sigma;
    v[j] = std::exp(-0.25 * t * t);
  }
  return v / norm(spec, v);
}

}  // namespace

TEST_CASE("grid spec validation") {
  CHECK_THROWS_AS(GridSpec(100, -1.0, 1.0), ValidationError);  // not 2^k
  CHECK_THROWS_AS(GridSpec(64, 1.0, -1.0), ValidationError);
  GridSpec spec = symmetric_grid(64, 8.0);
  CHECK(spec.dx() == doctest::Approx(0.25));
  CHECK(spec.dk() == doctest::Approx(2.0 * kPi / 16.0));
  CHECK(spec.x(32) == 0.0);
  CHECK(spec.k(32) == 0.0);
}

TEST_CASE("fourier round trip is unitary") {
  GridSpec spec = symmetric_grid(256, 12.0);
  Vector v = random_state(spec, 1);
  Vector k = to_momentum(spec, v);
  CHECK(std::abs(k.norm() * std::sqrt(spec.dk()) - 1.0) < 1e-12);
  Vector back = to_position(spec, k);
  CHECK((back - v).norm() * std::sqrt(spec.dx()) < 1e-12);
}

TEST_CASE("momentum representation of a gaussian matches the closed form") {
  GridSpec spec = symmetric_grid(512, 24.0);
  double sigma = 1.7;
  Vector v = gaussian_state(spec, sigma);
  Vector k = to_momentum(spec, v);
  // position density ∝ exp(-x²/(2σ²)) ⇒ momentum density ∝ exp(-2σ²k²)
  for (int m = 200; m < 312; m += 8) {
    double kk = spec.k(m);
    double expect = std::pow(2.0 * sigma * sigma / kPi, 0.25) *
                    std::exp(-sigma * sigma * kk * kk);
    CHECK(std::abs(std::abs(k[m]) - expect) < 1e-10);
  }
}

TEST_CASE("masks: identity cases and disjoint supports") {
  GridSpec spec = symmetric_grid(128, 10.0);
  Vector v = random_state(spec, 2);

  auto full_pos = GridOperator::position_mask(spec, Set::full_line());
  CHECK((apply(full_pos, v) - v).norm() == 0.0);

  auto full_mom = GridOperator::momentum_mask(spec, Set::full_line());
  CHECK((apply(full_mom, v) - v).norm() * std::sqrt(spec.dx()) < 1e-12);

  // grid chosen without a sample at exactly 0, so the two closed
  // half-lines overlap only on a set the grid does not see
  GridSpec offset(128, -10.0 + 0.03, 10.0 + 0.03);
  Vector w = random_state(offset, 3);
  auto right = GridOperator::position_mask(offset, Set::half_line(0.0));
  auto left = GridOperator::position_mask(
      offset, Set::interval(-std::numeric_limits<double>::infinity(), 0.0));
  CHECK(apply(right, apply(left, w)).norm() == 0.0);
}

TEST_CASE("dichotomic masks square to the identity") {
  GridSpec spec = symmetric_grid(128, 10.0);
  Vector v = random_state(spec, 4);

  auto a_pos = dichotomic_from_set(spec, Domain::position, Set::interval(-2.0, 1.0));
  CHECK((apply(a_pos, apply(a_pos, v)) - v).norm() == 0.0);  // exact

  auto a_mom = dichotomic_from_set(spec, Domain::momentum, Set::half_line(0.0));
  CHECK((apply(a_mom, apply(a_mom, v)) - v).norm() * std::sqrt(spec.dx()) < 1e-13);

  auto a_per = dichotomic_from_set(spec, Domain::position, Set::periodic(2.5));
  CHECK((apply(a_per, apply(a_per, v)) - v).norm() == 0.0);

  // degenerate sets are allowed
  auto a_full = dichotomic_from_set(spec, Domain::position, Set::full_line());
  CHECK((apply(a_full, v) - v).norm() == 0.0);
  auto a_empty = dichotomic_from_set(spec, Domain::position, Set::empty_set());
  CHECK((apply(a_empty, v) + v).norm() == 0.0);
}

TEST_CASE("sign mask has zero expectation in an odd state") {
  GridSpec spec = symmetric_grid(256, 14.0);
  Vector v(spec.n);
  for (int j = 0; j < spec.n; ++j) {
    double x = spec.x(j);
    v[j] = x * std::exp(-0.5 * x * x);
  }
  v /= norm(spec, v);
  auto sign_q = dichotomic_from_set(spec, Domain::position, Set::half_line(0.0));
  Complex val = inner(spec, v, apply(sign_q, v));
  CHECK(std::abs(val) < 1e-12);
}

TEST_CASE("interval expectation matches the erf-mass oracle to 1e-6") {
  // dx = 2/41 puts the cut points ±1 exactly halfway between samples
  const int n = 4096;
  const double dx = 2.0 / 41.0;
  GridSpec spec(n, -n * dx / 2.0, n * dx / 2.0);
  Vector v(spec.n);
  const double sigma = 10.0;
  for (int j = 0; j < n; ++j)
    v[j] = std::exp(-spec.x(j) * spec.x(j) / (4.0 * sigma * sigma));
  v /= norm(spec, v);
  auto a = dichotomic_from_set(spec, Domain::position, Set::interval(-1.0, 1.0));
  double grid_value = std::real(inner(spec, v, apply(a, v)));
  double mass = std::erf(1.0 / (sigma * std::sqrt(2.0)));
  CHECK(std::abs(grid_value - (2.0 * mass - 1.0)) < 1e-6);
}

TEST_CASE("quadratic phase is unitary and composes right to left") {
  GridSpec spec = symmetric_grid(128, 9.0);
  Vector v = random_state(spec, 5);
  auto phase = GridOperator::quadratic_phase(spec, 0.37);
  CHECK(std::abs(norm(spec, apply(phase, v)) - 1.0) < 1e-12);

  auto mask = GridOperator::position_mask(spec, Set::half_line(0.3));
  auto composed = GridOperator::compose({phase, mask});
  Vector lhs = apply(composed, v);
  Vector rhs = apply(phase, apply(mask, v));
  CHECK((lhs - rhs).norm() == 0.0);
}

TEST_CASE("spec mismatch raises a shape error") {
  GridSpec a = symmetric_grid(64, 8.0), b = symmetric_grid(128, 8.0);
  Vector v = random_state(b, 6);
  auto op = GridOperator::position_mask(a, Set::full_line());
  CHECK_THROWS_AS(apply(op, v), ShapeError);
  auto op_a = dichotomic_from_set(a, Domain::position, Set::half_line(0.0));
  auto op_b = dichotomic_from_set(b, Domain::position, Set::half_line(0.0));
  CHECK_THROWS_AS(a3_norm_grid(op_a, op_b), ShapeError);
}

TEST_CASE("a3 norm: commuting masks give zero immediately") {
  GridSpec spec = symmetric_grid(256, 10.0);
  auto a1 = dichotomic_from_set(spec, Domain::position, Set::interval(-1.0, 1.0));
  auto a2 = dichotomic_from_set(spec, Domain::position, Set::half_line(0.0));
  auto est = a3_norm_grid(a1, a2);
  CHECK(est.converged);
  CHECK(est.value == 0.0);
}

TEST_CASE("a3 norm: sign pair approaches total noncommutativity as n grows") {
  double prev = 0.0;
  for (int log_n : {12, 14, 17}) {
    GridSpec spec = symmetric_grid(1 << log_n, 400.0);
    auto a1 = dichotomic_from_set(spec, Domain::position, Set::half_line(0.0));
    auto a2 = dichotomic_from_set(spec, Domain::momentum, Set::half_line(0.0));
    auto est = a3_norm_grid(a1, a2, {1e-9, 20000, 7});
    CHECK(est.converged);
    CHECK(est.value < 1.0 + 1e-9);
    CHECK(est.value > prev);
    prev = est.value;
  }
  // sign/sign is fully noncommutative in the continuum; the discrete pair
  // closes the gap to ‖A₃‖ = 1 like 1/log n
  CHECK(prev > 0.98);
}

TEST_CASE("a3 norm: band mask against the interval mask hits the crossing") {
  auto crit = prolate::critical_u(0, 1e-8);
  GridSpec spec = symmetric_grid(4096, std::sqrt(4096.0 * kPi / 2.0));
  auto a1 = dichotomic_from_set(spec, Domain::position, Set::interval(-1.0, 1.0));
  auto a2 = dichotomic_from_set(spec, Domain::momentum,
                                Set::interval(-crit.u, crit.u));
  auto est = a3_norm_grid(a1, a2, {1e-10, 40000, 11});
  CHECK(est.value == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("a3 norm agrees with the dense oracle on a small grid") {
  GridSpec spec = symmetric_grid(64, 9.0);
  auto a1 = dichotomic_from_set(spec, Domain::position, Set::interval(-1.5, 2.0));
  auto a2 = dichotomic_from_set(spec, Domain::momentum, Set::interval(-1.0, 1.0));
  Matrix m1 = to_matrix(a1), m2 = to_matrix(a2);
  Matrix a3 = Complex(0, -0.5) * (m1 * m2 - m2 * m1);
  double dense = hermitian_norm(a3);
  auto est = a3_norm_grid(a1, a2, {1e-12, 40000, 3});
  CHECK(est.value == doctest::Approx(dense).epsilon(1e-8));
}

TEST_CASE("iteration error carries the running estimate") {
  GridSpec spec = symmetric_grid(1024, 60.0);
  auto a1 = dichotomic_from_set(spec, Domain::position, Set::half_line(0.0));
  auto a2 = dichotomic_from_set(spec, Domain::momentum, Set::half_line(0.0));
  try {
    a3_norm_grid(a1, a2, {1e-15, 3, 7});
    FAIL("expected IterationError");
  } catch (const IterationError& e) {
    CHECK(e.last_estimate > 0.5);  // already a sensible lower value
    CHECK(e.last_estimate < 1.0);
  }
}

TEST_CASE("two-point grid embeds the qubit pair exactly") {
  GridSpec spec = symmetric_grid(2, 1.0);
  auto a1 = dichotomic_from_set(spec, Domain::position, Set::half_line(0.0));
  auto a2 = dichotomic_from_set(spec, Domain::momentum, Set::half_line(0.0));
  Matrix m1 = to_matrix(a1), m2 = to_matrix(a2);
  Matrix expect1(2, 2), expect2(2, 2);
  expect1 << -1, 0, 0, 1;
  expect2 << 0, 1, 1, 0;
  CHECK(operator_norm(m1 - expect1) < 1e-14);
  CHECK(operator_norm(m2 - expect2) < 1e-14);
}

TEST_CASE("qubit-embedded maximal state reaches Tsirelson on the grid") {
  GridSpec spec = symmetric_grid(2, 1.0);
  auto a1 = dichotomic_from_set(spec, Domain::position, Set::half_line(0.0));
  auto a2 = dichotomic_from_set(spec, Domain::momentum, Set::half_line(0.0));
  Matrix m1 = to_matrix(a1), m2 = to_matrix(a2);
  Matrix id = Matrix::Identity(2, 2);
  projpair::ProjectionPair pair(0.5 * (id + m1), 0.5 * (id + m2));
  auto d = projpair::halmos_decompose(pair);
  Vector f(1);
  f << 1.0;
  auto ms = projpair::build_max_state(d, d, f, f);

  WaveFunction2D psi;
  psi.spec_a = spec;
  psi.spec_b = spec;
  psi.amplitudes.resize(2, 2);
  double cell = std::sqrt(spec.dx() * spec.dx());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) psi.amplitudes(i, j) = ms.psi[i * 2 + j] / cell;

  auto val = chsh_expectation(psi, a1, a2, a1, a2);
  CHECK(val.value == doctest::Approx(kTsirelson).epsilon(1e-10));
  CHECK(val.imag_residual < 1e-10);
}

TEST_CASE("product states respect the classical bound") {
  GridSpec spec = symmetric_grid(64, 10.0);
  auto a1 = dichotomic_from_set(spec, Domain::position, Set::interval(-1.0, 1.0));
  auto a2 = dichotomic_from_set(spec, Domain::momentum, Set::interval(-0.8, 0.8));
  for (unsigned salt = 0; salt < 10; ++salt) {
    Vector u = random_state(spec, 100 + salt), w = random_state(spec, 200 + salt);
    WaveFunction2D psi;
    psi.spec_a = psi.spec_b = spec;
    psi.amplitudes = u * w.transpose();
    auto val = chsh_expectation(psi, a1, a2, a1, a2);
    CHECK(std::abs(val.value) <= 2.0 + 1e-9);
    CHECK(val.value <= kTsirelson + 1e-9);
  }
}

TEST_CASE("wavefunction validation catches norm and shape violations") {
  GridSpec spec = symmetric_grid(16, 4.0);
  WaveFunction2D psi;
  psi.spec_a = psi.spec_b = spec;
  psi.amplitudes = Matrix::Ones(16, 16);
  CHECK_THROWS_AS(psi.validate(), ValidationError);
  psi.amplitudes = Matrix::Ones(16, 8);
  CHECK_THROWS_AS(psi.validate(), ShapeError);
}
