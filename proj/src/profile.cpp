#include "bellpos/profile.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "bellpos/errors.hpp"

namespace bellpos {
namespace {

using boost::math::quadrature::gauss_kronrod;

double lower_edge(const Profile& p) {
  return p.support_halfwidth > 0 ? p.center - p.support_halfwidth
                                 : p.center - 40.0 * p.width;
}

double upper_edge(const Profile& p) {
  return p.support_halfwidth > 0 ? p.center + p.support_halfwidth
                                 : p.center + 40.0 * p.width;
}

}  // namespace

Profile Profile::gaussian(double center, double sigma) {
  if (!(sigma > 0)) throw ValidationError("gaussian profile needs σ > 0");
  Profile p;
  p.name = "gaussian";
  p.center = center;
  p.width = sigma;
  double amp = std::pow(kPi * sigma * sigma, -0.25);
  p.eval = [center, sigma, amp](double x) -> Complex {
    double t = (x - center) / sigma;
    return amp * std::exp(-0.5 * t * t);
  };
  return p;
}

Profile Profile::bump(double center, double half_width) {
  if (!(half_width > 0)) throw ValidationError("bump profile needs positive width");
  Profile p;
  p.name = "bump";
  p.center = center;
  p.width = half_width;
  p.support_halfwidth = half_width;
  // ∫ cos⁴(πt/2) dt over [-1,1] = 3/4, so normalize by √(3h/4)
  double amp = 1.0 / std::sqrt(0.75 * half_width);
  p.eval = [center, half_width, amp](double x) -> Complex {
    double t = (x - center) / half_width;
    if (std::abs(t) >= 1.0) return 0.0;
    double c = std::cos(0.5 * kPi * t);
    return amp * c * c;
  };
  return p;
}

Profile Profile::modulated(double omega) const {
  Profile p = *this;
  p.modulation += omega;
  p.name = name + "*phase";
  auto base = eval;
  double total = p.modulation;
  p.eval = [base, total](double x) {
    return base(x) * std::exp(Complex(0.0, total * x));
  };
  return p;
}

double Profile::mass_below(double b) const {
  double lo = lower_edge(*this);
  double hi = std::min(b, upper_edge(*this));
  if (hi <= lo) return 0.0;
  auto density = [this](double x) { return std::norm(eval(x)); };
  return gauss_kronrod<double, 61>::integrate(density, lo, hi, 12, 1e-12);
}

double Profile::quantile(double q) const {
  double lo = lower_edge(*this), hi = upper_edge(*this);
  for (int i = 0; i < 80; ++i) {
    double mid = 0.5 * (lo + hi);
    if (mass_below(mid) < q)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace bellpos
