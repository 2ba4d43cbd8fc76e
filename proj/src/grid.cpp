#include "bellpos/grid.hpp"

#include <cmath>
#include <string>

#include "bellpos/fft.hpp"

namespace bellpos::grid {
namespace {

bool power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

void require_same_spec(const GridSpec& a, const GridSpec& b) {
  if (!(a == b))
    throw ShapeError("grid specs differ: n=" + std::to_string(a.n) + " vs " +
                     std::to_string(b.n));
}

// Mask application in the momentum representation. The boundary phases of
// the centered transform commute with the (diagonal) mask, so only the
// (−1)^j checkerboard survives; forward·backward = n·identity supplies the
// normalization.
template <typename MaskFn>
void momentum_pointwise(const GridSpec& spec, Vector& psi, MaskFn&& mask) {
  const int n = spec.n;
  for (int j = 1; j < n; j += 2) psi[j] = -psi[j];
  fft::forward(psi.data(), n);
  const double inv_n = 1.0 / n;
  for (int m = 0; m < n; ++m) psi[m] *= mask(spec.k(m)) * inv_n;
  fft::backward(psi.data(), n);
  for (int j = 1; j < n; j += 2) psi[j] = -psi[j];
}

}  // namespace

GridSpec::GridSpec(int n_points, double xmin, double xmax)
    : n(n_points), x_min(xmin), x_max(xmax) {
  if (!(x_min < x_max)) throw ValidationError("x_min must be below x_max");
  if (!power_of_two(n) || n < 2)
    throw ValidationError("n_points must be a power of two ≥ 2, got " +
                          std::to_string(n));
}

GridSpec symmetric_grid(int n, double x_max) {
  return GridSpec(n, -x_max, x_max);
}

bool Set::contains(double x) const {
  switch (kind) {
    case Kind::full: return true;
    case Kind::empty: return false;
    case Kind::periodic_halves: {
      double y = x / period - std::floor(x / period);
      return y < 0.5;
    }
    case Kind::intervals:
      for (const auto& [a, b] : pieces)
        if (x >= a && x <= b) return true;
      return false;
  }
  return false;
}

Set Set::interval(double a, double b) {
  if (!(a < b)) throw ValidationError("interval needs a < b");
  Set s;
  s.kind = Kind::intervals;
  s.pieces = {{a, b}};
  return s;
}

Set Set::intervals(std::vector<std::pair<double, double>> ps) {
  Set s;
  s.kind = Kind::intervals;
  s.pieces = std::move(ps);
  for (const auto& [a, b] : s.pieces)
    if (!(a < b)) throw ValidationError("interval needs a < b");
  return s;
}

Set Set::half_line(double a) {
  Set s;
  s.kind = Kind::intervals;
  s.pieces = {{a, std::numeric_limits<double>::infinity()}};
  return s;
}

Set Set::periodic(double v) {
  if (!(v > 0)) throw ValidationError("period must be positive");
  Set s;
  s.kind = Kind::periodic_halves;
  s.period = v;
  return s;
}

Set Set::full_line() {
  Set s;
  s.kind = Kind::full;
  return s;
}

Set Set::empty_set() {
  Set s;
  s.kind = Kind::empty;
  return s;
}

GridOperator GridOperator::position_mask(const GridSpec& s, const Set& set,
                                         bool dichotomic) {
  GridOperator op;
  op.kind = Kind::position_mask;
  op.spec = s;
  op.set = set;
  op.inside = 1.0;
  op.outside = dichotomic ? -1.0 : 0.0;
  return op;
}

GridOperator GridOperator::momentum_mask(const GridSpec& s, const Set& set,
                                         bool dichotomic) {
  GridOperator op = position_mask(s, set, dichotomic);
  op.kind = Kind::momentum_mask;
  return op;
}

GridOperator GridOperator::quadratic_phase(const GridSpec& s, double coeff) {
  GridOperator op;
  op.kind = Kind::quadratic_phase;
  op.spec = s;
  op.phase_coeff = coeff;
  return op;
}

GridOperator GridOperator::compose(std::vector<GridOperator> ops) {
  if (ops.empty()) throw ValidationError("composition needs at least one operator");
  for (const auto& o : ops) require_same_spec(o.spec, ops.front().spec);
  GridOperator op;
  op.kind = Kind::composed;
  op.spec = ops.front().spec;
  op.children = std::move(ops);
  return op;
}

GridOperator dichotomic_from_set(const GridSpec& spec, Domain domain,
                                 const Set& set) {
  return domain == Domain::position
             ? GridOperator::position_mask(spec, set, true)
             : GridOperator::momentum_mask(spec, set, true);
}

void apply_in_place(const GridOperator& op, Vector& psi) {
  if (psi.size() != op.spec.n)
    throw ShapeError("vector length " + std::to_string(psi.size()) +
                     " does not match grid n=" + std::to_string(op.spec.n));
  switch (op.kind) {
    case GridOperator::Kind::position_mask:
      for (int j = 0; j < op.spec.n; ++j)
        psi[j] *= op.set.contains(op.spec.x(j)) ? op.inside : op.outside;
      return;
    case GridOperator::Kind::momentum_mask:
      momentum_pointwise(op.spec, psi, [&](double k) {
        return op.set.contains(k) ? op.inside : op.outside;
      });
      return;
    case GridOperator::Kind::quadratic_phase:
      for (int j = 0; j < op.spec.n; ++j) {
        double x = op.spec.x(j);
        psi[j] *= std::exp(Complex(0.0, op.phase_coeff * x * x));
      }
      return;
    case GridOperator::Kind::composed:
      for (auto it = op.children.rbegin(); it != op.children.rend(); ++it)
        apply_in_place(*it, psi);
      return;
  }
}

Vector apply(const GridOperator& op, const Vector& psi) {
  Vector out = psi;
  apply_in_place(op, out);
  return out;
}

Matrix to_matrix(const GridOperator& op, int max_n) {
  if (op.spec.n > max_n)
    throw SizeError("to_matrix limited to n ≤ " + std::to_string(max_n));
  Matrix m(op.spec.n, op.spec.n);
  for (int j = 0; j < op.spec.n; ++j) {
    Vector e = Vector::Zero(op.spec.n);
    e[j] = 1.0;
    apply_in_place(op, e);
    m.col(j) = e;
  }
  return m;
}

Vector to_momentum(const GridSpec& spec, const Vector& psi) {
  const int n = spec.n;
  if (psi.size() != n) throw ShapeError("vector/grid size mismatch");
  Vector out = psi;
  for (int j = 1; j < n; j += 2) out[j] = -out[j];
  fft::forward(out.data(), n);
  const double scale = spec.dx() / std::sqrt(2.0 * kPi);
  for (int m = 0; m < n; ++m)
    out[m] *= scale * std::exp(Complex(0.0, -spec.k(m) * spec.x_min));
  return out;
}

Vector to_position(const GridSpec& spec, const Vector& psi_k) {
  const int n = spec.n;
  if (psi_k.size() != n) throw ShapeError("vector/grid size mismatch");
  Vector out = psi_k;
  const double scale = spec.dk() / std::sqrt(2.0 * kPi);
  for (int m = 0; m < n; ++m)
    out[m] *= scale * std::exp(Complex(0.0, spec.k(m) * spec.x_min));
  fft::backward(out.data(), n);
  for (int j = 1; j < n; j += 2) out[j] = -out[j];
  return out;
}

double norm(const GridSpec& spec, const Vector& psi) {
  return psi.norm() * std::sqrt(spec.dx());
}

Complex inner(const GridSpec& spec, const Vector& a, const Vector& b) {
  return a.dot(b) * spec.dx();
}

A3Estimate a3_norm_grid(const GridOperator& a1, const GridOperator& a2,
                        const A3Options& opts) {
  require_same_spec(a1.spec, a2.spec);
  if (!(opts.tol > 0)) throw ValidationError("tolerance must be positive");
  const int n = a1.spec.n;
  std::mt19937 rng(opts.seed);
  Vector v = random_unit_vector(n, rng);
  Vector t1(n), t2(n);

  auto commutator = [&](const Vector& w, Vector& out) {
    t1 = w;
    apply_in_place(a2, t1);
    apply_in_place(a1, t1);  // A1 A2 w
    out = w;
    apply_in_place(a1, out);
    apply_in_place(a2, out);  // A2 A1 w
    out = t1 - out;
  };

  double mu_prev = -1.0;
  for (int it = 0; it < opts.max_iterations; ++it) {
    commutator(v, t2);
    Vector g(n);
    commutator(t2, g);
    g *= -0.25;  // -[A1,A2]²/4 is positive with ‖A3‖² on top
    double mu = std::real(v.dot(g));
    if (it > 0 && std::abs(mu - mu_prev) < opts.tol * std::max(1.0, std::abs(mu)))
      return {std::sqrt(std::max(mu, 0.0)), it, true};
    mu_prev = mu;
    double gn = g.norm();
    if (gn == 0.0) return {0.0, it, true};  // commuting pair
    v = g / gn;
  }
  throw IterationError("power iteration did not converge within " +
                           std::to_string(opts.max_iterations) + " iterations",
                       std::sqrt(std::max(mu_prev, 0.0)));
}

double WaveFunction2D::norm() const {
  return amplitudes.norm() * std::sqrt(spec_a.dx() * spec_b.dx());
}

void WaveFunction2D::validate() const {
  if (amplitudes.rows() != spec_a.n || amplitudes.cols() != spec_b.n)
    throw ShapeError("amplitude array does not match the grid specs");
  double nr = norm();
  if (std::abs(nr * nr - 1.0) > norm_tolerance)
    throw ValidationError("state norm² = " + std::to_string(nr * nr) +
                          " violates the tolerance " +
                          std::to_string(norm_tolerance));
}

void apply_alice(const GridOperator& op, Matrix& amp) {
  // Alice index runs down a column (column-major: contiguous)
  Vector buf(amp.rows());
  for (Eigen::Index j = 0; j < amp.cols(); ++j) {
    buf = amp.col(j);
    apply_in_place(op, buf);
    amp.col(j) = buf;
  }
}

void apply_bob(const GridOperator& op, Matrix& amp) {
  Vector buf(amp.cols());
  for (Eigen::Index i = 0; i < amp.rows(); ++i) {
    buf = amp.row(i).transpose();
    apply_in_place(op, buf);
    amp.row(i) = buf.transpose();
  }
}

ChshValue chsh_expectation(const WaveFunction2D& psi, const GridOperator& a1,
                           const GridOperator& a2, const GridOperator& b1,
                           const GridOperator& b2) {
  require_same_spec(a1.spec, psi.spec_a);
  require_same_spec(a2.spec, psi.spec_a);
  require_same_spec(b1.spec, psi.spec_b);
  require_same_spec(b2.spec, psi.spec_b);
  psi.validate();

  const double cell = psi.spec_a.dx() * psi.spec_b.dx();
  const double norm_sq = psi.amplitudes.squaredNorm() * cell;

  // ⟨M|A_i B_j M⟩ term by term keeps only one work buffer alive, which
  // matters for large product grids.
  Matrix work;
  Complex acc = 0.0;
  const struct {
    const GridOperator* a;
    const GridOperator* b;
    double sign;
  } terms[] = {{&a1, &b1, 1.0}, {&a1, &b2, 1.0}, {&a2, &b1, 1.0}, {&a2, &b2, -1.0}};
  for (const auto& t : terms) {
    work = psi.amplitudes;
    apply_bob(*t.b, work);
    apply_alice(*t.a, work);
    acc += t.sign * (psi.amplitudes.conjugate().cwiseProduct(work)).sum() * cell;
  }
  acc /= norm_sq;
  return {acc.real(), std::abs(acc.imag())};
}

}  // namespace bellpos::grid
