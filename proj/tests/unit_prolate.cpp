#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "bellpos/prolate.hpp"

using namespace bellpos;
using namespace bellpos::prolate;

TEST_CASE("gauss-legendre integrates low polynomials and is symmetric") {
  auto q = gauss_legendre(24);
  double m0 = 0.0, m2 = 0.0, mc = 0.0;
  for (int i = 0; i < 24; ++i) {
    m0 += q.weights[i];
    m2 += q.weights[i] * q.nodes[i] * q.nodes[i];
    mc += q.weights[i] * std::cos(q.nodes[i]);
  }
  CHECK(m0 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(m2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(mc == doctest::Approx(2.0 * std::sin(1.0)).epsilon(1e-14));
  for (int i = 0; i < 12; ++i) {
    CHECK(q.nodes[i] == doctest::Approx(-q.nodes[23 - i]).epsilon(1e-14));
    CHECK(q.weights[i] == doctest::Approx(q.weights[23 - i]).epsilon(1e-14));
  }
}

TEST_CASE("kernel matrix: domain guard and spectral range") {
  CHECK_THROWS_AS(build_hu(-1.0, 64), DomainError);
  CHECK_THROWS_AS(build_hu(0.0, 64), DomainError);

  auto op = build_hu(2.0, 64);
  CHECK(op.matrix.isApprox(op.matrix.transpose(), 1e-14));
  RealVector top = spectrum(op, 64);
  CHECK(top.maxCoeff() < 1.0 + 1e-10);
  CHECK(top.minCoeff() > -1e-10);
}

TEST_CASE("vanishing-bandwidth limit: all eigenvalues collapse") {
  auto top = spectrum(build_hu(0.01, 64), 5);
  // kernel magnitude bounds the norm by 2u/π
  CHECK(top.maxCoeff() < 0.01);
}

TEST_CASE("the half-crossing sits near u = 0.849 for the ground mode") {
  auto top = spectrum(build_hu(0.849, 64), 2);
  CHECK(std::abs(top[0] - 0.5) < 5e-3);
  CHECK(top[1] < 0.1);
}

TEST_CASE("the second crossing sits near u = 2.381") {
  auto top = spectrum(build_hu(2.381, 64), 2);
  CHECK(std::abs(top[1] - 0.5) < 5e-3);
}

TEST_CASE("wide-band limit: ground eigenvalue approaches 1") {
  auto top = spectrum(build_hu(20.0, 128), 1);
  CHECK(top[0] > 0.999);
}

TEST_CASE("quadrature convergence: doubling nodes is inert below u = 10") {
  for (double u : {2.0, 5.0, 10.0}) {
    RealVector a = spectrum(build_hu(u, 64), 5);
    RealVector b = spectrum(build_hu(u, 128), 5);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("critical parameters reproduce 0.849 and 2.381 and increase") {
  auto c0 = critical_u(0, 1e-6);
  auto c1 = critical_u(1, 1e-6);
  auto c2 = critical_u(2, 1e-6);
  CHECK(std::abs(c0.u - 0.849) < 5e-3);
  CHECK(std::abs(c1.u - 2.381) < 5e-3);
  CHECK(std::abs(c0.lambda_residual) <= 1e-6);
  CHECK(std::abs(c1.lambda_residual) <= 1e-6);
  CHECK(c2.u > c1.u);
  CHECK(c1.u > c0.u);

  auto params = critical_parameters(4, 1e-6);
  params.validate();
}

TEST_CASE("a3 curve: commuting limit, unit peaks, interior dip") {
  auto c0 = critical_u(0, 1e-8);
  auto c1 = critical_u(1, 1e-8);
  CHECK(a3_norm_at(c0.u) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(a3_norm_at(c1.u) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(a3_norm_at(0.02) < 0.05);

  double dip = 1.0;
  for (double u = c0.u; u <= c1.u; u += (c1.u - c0.u) / 40.0)
    dip = std::min(dip, a3_norm_at(u));
  CHECK(dip > 0.5);
  CHECK(dip < 1.0 - 1e-3);
}

TEST_CASE("spectral curve invariants hold across a sweep") {
  std::vector<double> us;
  for (double u = 0.2; u <= 4.0; u += 0.2) us.push_back(u);
  auto curve = spectral_curve(us, 64, 4);
  curve.validate();
  // strict ordering where the values are meaningfully sized
  for (size_t s = 0; s < us.size(); ++s)
    for (int j = 0; j + 1 < 4; ++j)
      if (curve.rows(s, j) > 1e-8)
        CHECK(curve.rows(s, j) > curve.rows(s, j + 1) - 1e-10);
}

TEST_CASE("eigenfunctions: node counts, parity, endpoint sign") {
  auto op = build_hu(2.5, 64);
  for (int n = 0; n < 3; ++n) {
    auto mode = eigenvector(op, n);
    CHECK(mode.sign_changes() == n);
    double parity = (n % 2 == 0) ? 1.0 : -1.0;
    double worst = 0.0;
    for (int i = 0; i < op.n_nodes; ++i)
      worst = std::max(worst, std::abs(mode.values[i] -
                                       parity * mode.values[op.n_nodes - 1 - i]));
    CHECK(worst < 1e-8);
    CHECK(mode.values[op.n_nodes - 1] > 0.0);
  }
  auto ground = eigenvector(op, 0);
  CHECK(ground.values.minCoeff() > 0.0);  // nodeless
}

TEST_CASE("nystrom extension reproduces λψ inside the interval") {
  auto op = build_hu(1.3, 64);
  auto mode = eigenvector(op, 0);
  for (int i = 0; i < op.n_nodes; i += 7) {
    double x = op.quad.nodes[i];
    CHECK(nystrom_extend(mode, x) ==
          doctest::Approx(mode.lambda * mode.values[i]).epsilon(1e-10));
  }
  // decays off the interval
  CHECK(std::abs(nystrom_extend(mode, 40.0)) < 0.02);
}
