#include "ftwave/oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ftwave/error.hpp"

namespace ftwave {
namespace {

double checked_eval(const RealFunction& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << "integrand is not finite at x = " << x;
    throw Error(ErrorKind::NonFinite, msg.str());
  }
  return v;
}

struct Panel {
  double a, b, m;
  double fa, fb, fm;
  double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const RealFunction& f, const Panel& p, double tol, int depth, int max_depth) {
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = checked_eval(f, lm);
  const double frm = checked_eval(f, rm);
  const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
  const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
  const double delta = left + right - p.whole;
  // Rounding floor of the panel sum.
  const double floor = 32.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
  if (std::abs(delta) <= 15.0 * std::max(tol, floor) || !(lm > p.a && rm < p.b)) {
    return left + right + delta / 15.0;
  }
  if (depth >= max_depth) {
    std::ostringstream msg;
    msg << "adaptive Simpson did not converge on [" << p.a << ", " << p.b << "] after "
        << max_depth << " splits";
    throw Error(ErrorKind::DepthExceeded, msg.str());
  }
  return adapt(f, {p.a, p.m, lm, p.fa, p.fm, flm, left}, 0.5 * tol, depth + 1, max_depth) +
         adapt(f, {p.m, p.b, rm, p.fm, p.fb, frm, right}, 0.5 * tol, depth + 1, max_depth);
}

// \int_0^c sin^p(s) ds for c in [0, pi/2]. For p < 3 the substitution
// s = r^m with m = 2/(p+1) turns the integrand into m r sinc(r^m)^p, which
// is smooth enough at r = 0 for Simpson to converge at its nominal rate.
double sine_power_integral(double p, double c, const Quadrature& q) {
  if (c <= 0.0) return 0.0;
  if (p >= 3.0) {
    return integrate([p](double s) { return std::pow(std::sin(s), p); }, 0.0, c, q);
  }
  const double m = 2.0 / (p + 1.0);
  const auto integrand = [p, m](double r) {
    const double s = std::pow(r, m);
    const double sinc = s == 0.0 ? 1.0 : std::sin(s) / s;
    return m * r * std::pow(sinc, p);
  };
  return integrate(integrand, 0.0, std::pow(c, 1.0 / m), q);
}

}  // namespace

double integrate(const RealFunction& f, double a, double b, const Quadrature& q) {
  if (!(q.abs_tol > 0.0) || q.max_depth < 1) {
    throw Error(ErrorKind::DomainError, "quadrature needs abs_tol > 0 and max_depth >= 1");
  }
  if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
    throw Error(ErrorKind::DomainError, "integration bounds must be finite with a <= b");
  }
  if (a == b) return 0.0;

  // Four starting panels.
  constexpr int kPanels = 4;
  const double width = (b - a) / kPanels;
  double total = 0.0;
  double xa = a;
  double fa = checked_eval(f, a);
  for (int i = 0; i < kPanels; ++i) {
    const double xb = i + 1 == kPanels ? b : a + (i + 1) * width;
    const double xm = 0.5 * (xa + xb);
    const double fm = checked_eval(f, xm);
    const double fb = checked_eval(f, xb);
    total += adapt(f, {xa, xb, xm, fa, fb, fm, simpson(xa, xb, fa, fm, fb)}, q.abs_tol / kPanels, 0,
                   q.max_depth);
    xa = xb;
    fa = fb;
  }
  return total;
}

double profile_integral(double sigma, double a, double b) {
  if (!(sigma > 0.0 && sigma <= 2.0)) {
    throw Error(ErrorKind::DomainError, "profile_integral requires 0 < sigma <= 2");
  }
  if (!(a >= -1.0 && a <= 1.0 && b >= -1.0 && b <= 1.0)) {
    throw Error(ErrorKind::DomainError, "profile_integral bounds must lie in [-1, 1]");
  }
  if (a > b) {
    throw Error(ErrorKind::DomainError, "profile_integral requires a <= b");
  }
  if (a == b) return 0.0;

  const Quadrature q{1e-14, 60};
  const double p = 2.0 / sigma - 1.0;
  constexpr double half_pi = std::numbers::pi / 2.0;
  const double quarter = sine_power_integral(p, half_pi, q);

  // Antiderivative of cos^p on [-pi/2, pi/2], odd in theta.
  const auto antiderivative = [&](double t) {
    const double theta = std::asin(std::abs(t));
    const double value = quarter - sine_power_integral(p, half_pi - theta, q);
    return t < 0.0 ? -value : value;
  };
  return antiderivative(b) - antiderivative(a);
}

double fd_derivative(const RealFunction& f, double x, double h) {
  if (!(h > 0.0)) {
    throw Error(ErrorKind::DomainError, "fd_derivative requires h > 0");
  }
  const double forward = f(x + h);
  const double backward = f(x - h);
  if (!std::isfinite(forward) || !std::isfinite(backward)) {
    throw Error(ErrorKind::NonFinite, "function is not finite on [x - h, x + h]");
  }
  return (forward - backward) / (2.0 * h);
}

}  // namespace ftwave
