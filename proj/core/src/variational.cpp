#include "ftwave/variational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "ftwave/critical.hpp"
#include "ftwave/error.hpp"
#include "ftwave/oracle.hpp"

namespace ftwave {
namespace {

double abs_pow(double v, double p) {
  const double a = std::abs(v);
  if (p == 2.0) return a * a;
  if (p == 4.0) return (a * a) * (a * a);
  if (p == 6.0) return (a * a) * (a * a) * (a * a);
  return std::pow(a, p);
}

// |v|^{p-2} v
double signed_pow(double v, double p) {
  const double a = abs_pow(v, p - 1.0);
  return v < 0.0 ? -a : a;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Raw samples with the pinned ends and the jump condition.
struct Samples {
  std::vector<double> left;
  std::vector<double> right;
  double h;
  double tau;

  int n() const { return static_cast<int>(left.size()) - 1; }

  static Samples of(const GridFunction& u) {
    return {u.left(), u.right(), u.h(), u.params().tau};
  }

  std::vector<double> gather() const {
    const int m = n();
    std::vector<double> v(2 * m - 1);
    for (int i = 1; i <= m; ++i) v[i - 1] = left[i];
    for (int j = 1; j < m; ++j) v[m + j - 1] = right[j];
    return v;
  }

  void scatter(const std::vector<double>& v) {
    const int m = n();
    for (int i = 1; i <= m; ++i) left[i] = v[i - 1];
    right[0] = tau * left[m];
    for (int j = 1; j < m; ++j) right[j] = v[m + j - 1];
  }

  double lp(double p) const {
    const int m = n();
    double s = 0.5 * (abs_pow(left[0], p) + abs_pow(left[m], p) + abs_pow(right[0], p) +
                      abs_pow(right[m], p));
    for (int i = 1; i < m; ++i) s += abs_pow(left[i], p) + abs_pow(right[i], p);
    return s * h;
  }

  double kinetic() const {
    double s = 0.0;
    for (int i = 0; i < n(); ++i) {
      const double dl = left[i + 1] - left[i];
      const double dr = right[i + 1] - right[i];
      s += dl * dl + dr * dr;
    }
    return s / h;
  }

  double energy(double p, double alpha) const {
    const double o = left.back();
    return 0.5 * kinetic() - lp(p) / p - 0.5 * alpha * o * o;
  }

  void scale(double f) {
    for (double& x : left) x *= f;
    for (double& x : right) x *= f;
  }

  // Gradient of 1/2 kinetic with respect to the free samples.
  std::vector<double> kinetic_gradient() const {
    const int m = n();
    std::vector<double> g(2 * m - 1);
    for (int i = 1; i < m; ++i) g[i - 1] = (2.0 * left[i] - left[i - 1] - left[i + 1]) / h;
    g[m - 1] = ((left[m] - left[m - 1]) - tau * (right[1] - right[0])) / h;
    for (int j = 1; j < m; ++j) {
      g[m + j - 1] = (2.0 * right[j] - right[j - 1] - right[j + 1]) / h;
    }
    return g;
  }

  // u/2 + x u', the generator of L2-preserving dilations, on the free samples.
  std::vector<double> dilation() const {
    const int m = n();
    std::vector<double> v(2 * m - 1);
    for (int i = 1; i < m; ++i) {
      v[i - 1] = 0.5 * left[i] + (i - m) * 0.5 * (left[i + 1] - left[i - 1]);
    }
    v[m - 1] = 0.5 * left[m];
    for (int j = 1; j < m; ++j) {
      v[m + j - 1] = 0.5 * right[j] + j * 0.5 * (right[j + 1] - right[j - 1]);
    }
    return v;
  }

  // Gradient of lp(p)/p.
  std::vector<double> potential_gradient(double p) const {
    const int m = n();
    std::vector<double> g(2 * m - 1);
    for (int i = 1; i < m; ++i) g[i - 1] = h * signed_pow(left[i], p);
    g[m - 1] = 0.5 * h * (1.0 + abs_pow(tau, p)) * signed_pow(left[m], p);
    for (int j = 1; j < m; ++j) g[m + j - 1] = h * signed_pow(right[j], p);
    return g;
  }

  std::vector<double> energy_gradient(double p, double alpha) const {
    auto g = kinetic_gradient();
    const auto pot = potential_gradient(p);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] -= pot[i];
    g[n() - 1] -= alpha * left.back();
    return g;
  }

  // Trapezoid mass weights of the free samples.
  std::vector<double> mass_weights() const {
    const int m = n();
    std::vector<double> w(2 * m - 1, h);
    w[m - 1] = 0.5 * h * (1.0 + tau * tau);
    return w;
  }
};

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> upper;
};

// Matrix of the kinetic quadratic form on the free samples, plus shift * W.
Tridiagonal preconditioner(int n, double h, double tau, double kin_scale, double shift,
                           const std::vector<double>& weights) {
  Tridiagonal t;
  t.diag.assign(2 * n - 1, 2.0 / h * kin_scale);
  t.upper.assign(2 * n - 2, -1.0 / h * kin_scale);
  t.diag[n - 1] = (1.0 + tau * tau) / h * kin_scale;
  if (n >= 2) t.upper[n - 1] = -tau / h * kin_scale;
  for (std::size_t i = 0; i < t.diag.size(); ++i) t.diag[i] += shift * weights[i];
  return t;
}

std::vector<double> solve(const Tridiagonal& t, std::vector<double> rhs) {
  const std::size_t n = t.diag.size();
  std::vector<double> c(n);
  double denom = t.diag[0];
  rhs[0] /= denom;
  for (std::size_t i = 1; i < n; ++i) {
    c[i - 1] = t.upper[i - 1] / denom;
    denom = t.diag[i] - t.upper[i - 1] * c[i - 1];
    rhs[i] = (rhs[i] - t.upper[i - 1] * rhs[i - 1]) / denom;
  }
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= c[i] * rhs[i + 1];
  return rhs;
}

GridFunction to_grid(const ModelParams& params, double half_extent, const Samples& s) {
  return GridFunction(params, half_extent, s.left, s.right);
}

constexpr int kWindow = 50;

bool stalled_history(const std::vector<double>& hist, double rel_tol) {
  if (hist.size() <= kWindow) return false;
  const double now = hist.back();
  const double then = hist[hist.size() - 1 - kWindow];
  return std::abs(then - now) <= rel_tol * std::max(std::abs(now), 1e-300);
}

double default_omega(const ModelParams& p, double mu) {
  const Thresholds th = thresholds(p);
  if (!p.is_critical()) return std::max(th.omega_lin, soliton_by_mass(p.sigma, mu).omega);
  return th.omega_lin;
}

}  // namespace

std::vector<double> to_dofs(const GridFunction& u) { return Samples::of(u).gather(); }

GridFunction from_dofs(const GridFunction& shape, const std::vector<double>& dofs) {
  Samples s = Samples::of(shape);
  if (dofs.size() != static_cast<std::size_t>(2 * s.n() - 1)) {
    throw Error(ErrorKind::DomainError, "dof vector has the wrong size");
  }
  s.scatter(dofs);
  return to_grid(shape.params(), shape.half_extent(), s);
}

std::vector<double> energy_gradient(const GridFunction& u) {
  return Samples::of(u).energy_gradient(u.params().power(), u.params().alpha);
}

double lagrange_multiplier(const GridFunction& u) {
  const Samples s = Samples::of(u);
  const auto v = s.gather();
  const auto g = s.energy_gradient(u.params().power(), u.params().alpha);
  const auto w = s.mass_weights();
  double wvv = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) wvv += w[i] * v[i] * v[i];
  return -dot(g, v) / wvv;
}

GridFunction sample_state(const StationaryState& s, double half_extent, int intervals) {
  return GridFunction::sample(s.params, half_extent, intervals,
                              [&](double x, Side side) { return s.value(x, side); });
}

MinimizationReport minimize_energy(const ModelParams& params, double mu,
                                   const MinimizeOptions& options) {
  params.validate();
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorKind::DomainError, "mass must be positive");
  }
  if (params.is_critical()) {
    const CriticalData cd = critical_data(params.tau);
    if (params.alpha == 0.0) {
      if (mu > cd.mu_star) throw Error(ErrorKind::Unbounded, "energy unbounded below for mu > mu*");
      throw Error(ErrorKind::DomainError,
                  "sigma = 2, alpha = 0: no unique minimizer for mu <= mu*");
    }
    if (mu >= cd.mu_star) {
      throw Error(ErrorKind::Unbounded, "energy unbounded below for mu >= mu*");
    }
  }

  GridFunction init = [&] {
    if (options.init) return options.init->with_params(params);
    const double omega = default_omega(params, mu);
    const double x = options.half_extent > 0.0 ? options.half_extent
                     : omega > 0.0             ? 20.0 / std::sqrt(omega)
                                               : 30.0;
    const double k = omega > 0.0 ? std::sqrt(omega) : 1.0;
    return GridFunction::sample(params, x, options.intervals, [&](double y, Side side) {
      const double base = 1.0 / std::cosh(k * y);
      return side == Side::Left ? base : params.tau * base;
    });
  }();
  if (init.intervals() < 2) throw Error(ErrorKind::DomainError, "grid too coarse");
  if (!(init.mass() > 0.0)) throw Error(ErrorKind::ZeroFunction, "initial guess vanishes");

  const double p = params.power();
  const double x_ext = init.half_extent();
  Samples s = Samples::of(init);
  s.scale(std::sqrt(mu / s.lp(2.0)));
  const int n = s.n();
  const auto weights = s.mass_weights();

  std::vector<double> history{s.energy(p, params.alpha)};
  double step = 1.0;
  bool converged = false;
  int it = 0;
  for (; it < options.max_iters; ++it) {
    const auto v = s.gather();
    const auto g = s.energy_gradient(p, params.alpha);
    std::vector<double> wv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) wv[i] = weights[i] * v[i];
    const double omega = -dot(g, v) / dot(wv, v);
    const double shift = std::max(omega, 1.0 / (x_ext * x_ext));
    const Tridiagonal pc = preconditioner(n, s.h, s.tau, 1.0, shift, weights);
    auto d = solve(pc, g);
    const auto q = solve(pc, wv);
    const double coef = dot(wv, d) / dot(wv, q);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= coef * q[i];

    bool accepted = false;
    Samples trial = s;
    std::vector<double> moved(v.size());
    while (step > 1e-14) {
      for (std::size_t i = 0; i < v.size(); ++i) moved[i] = v[i] - step * d[i];
      trial.scatter(moved);
      trial.scale(std::sqrt(mu / trial.lp(2.0)));
      const double e = trial.energy(p, params.alpha);
      if (e < history.back()) {
        accepted = true;
        history.push_back(e);
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      converged = true;
      break;
    }
    s = std::move(trial);
    step = std::min(2.0 * step, 1.0);
    if (stalled_history(history, 1e-12)) {
      converged = true;
      break;
    }
  }
  if (!converged && options.require_convergence) {
    throw Error(ErrorKind::NotConverged,
                "minimization did not converge in " + std::to_string(options.max_iters) +
                    " iterations");
  }

  GridFunction final = to_grid(params, x_ext, s);
  MinimizationReport report{final, std::move(history), converged, it,
                            lagrange_multiplier(final), std::nullopt};
  if (options.reference) {
    const GridFunction ref = sample_state(*options.reference, x_ext, final.intervals());
    report.profile_error_l2 = l2_distance(final, ref);
  }
  return report;
}

double gn_quotient(const GridFunction& u) {
  const double m = u.mass();
  const double k = u.kinetic();
  if (!(m > 0.0) || !(k > 0.0)) throw Error(ErrorKind::ZeroFunction, "quotient of a zero function");
  return u.lp(6.0) / (k * m * m);
}

double gn_ratio(const GridFunction& u, double sigma) {
  const double m = u.mass();
  const double k = u.kinetic();
  if (!(m > 0.0) || !(k > 0.0)) throw Error(ErrorKind::ZeroFunction, "ratio of a zero function");
  return u.lp(2.0 * sigma + 2.0) / (std::pow(k, 0.5 * sigma) * std::pow(m, 0.5 * sigma + 1.0));
}

double gn_line_constant(double sigma) {
  const SolitonProfile phi{sigma, 1.0, 0.0};
  phi.validate();
  const double r = truncation_radius(sigma, 1.0);
  const Quadrature q{1e-13, 50};
  const double p = 2.0 * sigma + 2.0;
  const auto lp = [&](double x) { return std::pow(phi.value(x), p); };
  const auto kin = [&](double x) {
    const double d = phi.slope(x);
    return d * d;
  };
  const double lp_norm = 2.0 * integrate(lp, 0.0, r, q);
  const double kin_norm = 2.0 * integrate(kin, 0.0, r, q);
  const double mass = soliton_mass(sigma, 1.0);
  return lp_norm / (std::pow(kin_norm, 0.5 * sigma) * std::pow(mass, 0.5 * sigma + 1.0));
}

double gn_jump_constant(double sigma) {
  return std::pow(2.0, 0.5 * sigma + 1.0) * gn_line_constant(sigma);
}

ModifiedGnSides modified_gn_sides(const GridFunction& u) {
  const double t = u.params().tau;
  const double t4 = t * t * t * t;
  const double weighted_mass = u.mass() + (t4 - 1.0) * u.mass_left();
  ModifiedGnSides sides;
  sides.lhs = u.lp(6.0) + (t4 * t4 - 1.0) * u.lp_left(6.0);
  sides.rhs = 4.0 / (std::numbers::pi * std::numbers::pi) * weighted_mass * weighted_mass *
              u.kinetic();
  return sides;
}

GnMaximum maximize_gn_quotient(double tau, std::optional<GridFunction> init) {
  const ModelParams params{2.0, tau, 0.0};
  params.validate();
  GridFunction start = init ? init->with_params(params)
                            : GridFunction::sample(params, 30.0, 4000, [&](double x, Side side) {
                                const double base = 1.0 / std::cosh(x);
                                return side == Side::Left ? base : tau * base;
                              });
  Samples s = Samples::of(start);
  s.scale(1.0 / std::sqrt(s.lp(2.0)));
  const int n = s.n();
  const auto weights = s.mass_weights();
  const auto log_q = [](const Samples& u) {
    const double m = u.lp(2.0);
    return std::log(u.lp(6.0)) - std::log(u.kinetic()) - 2.0 * std::log(m);
  };

  std::vector<double> history{log_q(s)};
  double step = 1.0;
  bool converged = false;
  int it = 0;
  constexpr int kMaxIters = 20000;
  for (; it < kMaxIters; ++it) {
    const auto v = s.gather();
    const double lp6 = s.lp(6.0);
    const double kin = s.kinetic();
    const double m = s.lp(2.0);
    const auto kin_grad = s.kinetic_gradient();
    const auto pot_grad = s.potential_gradient(6.0);
    std::vector<double> g(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      g[i] = 6.0 * pot_grad[i] / lp6 - 2.0 * kin_grad[i] / kin - 4.0 * weights[i] * v[i] / m;
    }
    const Tridiagonal pc = preconditioner(n, s.h, s.tau, 2.0 / kin, 2.0 / m, weights);
    auto d = solve(pc, g);
    // Drop the dilation component of the step.
    const auto dil = s.dilation();
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      num += weights[i] * d[i] * dil[i];
      den += weights[i] * dil[i] * dil[i];
    }
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= num / den * dil[i];

    bool accepted = false;
    Samples trial = s;
    std::vector<double> moved(v.size());
    while (step > 1e-14) {
      for (std::size_t i = 0; i < v.size(); ++i) moved[i] = v[i] + step * d[i];
      trial.scatter(moved);
      trial.scale(1.0 / std::sqrt(trial.lp(2.0)));
      const double val = log_q(trial);
      if (val > history.back()) {
        accepted = true;
        history.push_back(val);
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      converged = true;
      break;
    }
    s = std::move(trial);
    step = std::min(2.0 * step, 1.0);
    if (history.size() > kWindow &&
        history.back() - history[history.size() - 1 - kWindow] <= 1e-9) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw Error(ErrorKind::NotConverged, "quotient ascent did not converge");
  }
  GridFunction argmax = to_grid(params, start.half_extent(), s);
  return {gn_quotient(argmax), argmax, it, converged};
}

Competitor subcritical_competitor(double sigma, double tau, double mu) {
  if (!(sigma > 0.0 && sigma < 2.0)) {
    throw Error(ErrorKind::DomainError, "competitor requires 0 < sigma < 2");
  }
  const ModelParams params{sigma, tau, 0.0};
  params.validate();
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorKind::DomainError, "mass must be positive");
  }
  const double ratio = std::pow(tau, 2.0 - sigma);
  const double nu = ratio * mu / (1.0 + ratio);
  const SolitonProfile right = soliton_by_mass(sigma, 2.0 * nu);
  const SolitonProfile left = soliton_by_mass(sigma, 2.0 * (mu - nu));

  Competitor c{GridFunction::sample(params, 20.0 / std::sqrt(left.omega), 4000,
                                    [&](double x, Side side) {
                                      return side == Side::Left ? left.value(x) : right.value(x);
                                    })};
  c.nu = nu;
  c.soliton_energy = nls_energy(soliton_by_mass(sigma, mu));
  c.competitor_energy = nls_energy(left, Side::Left) + nls_energy(right, Side::Right);
  c.energy_gap = c.soliton_energy - c.competitor_energy;
  c.jump_residual = std::abs(right.value(0.0) - tau * left.value(0.0));
  return c;
}

}  // namespace ftwave
