#include "ftwave/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ftwave/critical.hpp"
#include "ftwave/error.hpp"
#include "ftwave/oracle.hpp"

namespace ftwave {
namespace {

constexpr double kTanhGuard = 1.0 - 1e-15;
constexpr Quadrature kStateQuadrature{1e-12, 50};

double guarded_atanh(double t) {
  if (!(std::abs(t) < kTanhGuard)) {
    throw Error(ErrorKind::NumericalOverflow,
                "tanh variable " + std::to_string(t) + " too close to +-1");
  }
  return 0.5 * std::log((1.0 + t) / (1.0 - t));
}

struct Roots {
  double t_minus;
  double t_plus;
};

Roots tanh_roots(const ModelParams& p, double omega, Branch branch) {
  const double t2s = std::pow(p.tau, 2.0 * p.sigma);
  const double d = t2s * p.tau * p.tau * p.tau * p.tau - 1.0;
  const double sw = std::sqrt(omega);
  const double a = p.alpha * p.alpha * t2s / omega + d * (t2s - 1.0);
  const double root = p.tau * p.tau * std::sqrt(a);
  const double t_minus = (branch == Branch::L ? p.alpha / sw - root : p.alpha / sw + root) / d;
  const double t_plus = (t_minus * sw + p.alpha) / (p.tau * p.tau * sw);
  return {t_minus, t_plus};
}

// Signed excluded window: I(-1, T-) + I(T+, 1).
double window_integral(double sigma, double t_minus, double t_plus) {
  return profile_integral(sigma, -1.0, t_minus) + profile_integral(sigma, t_plus, 1.0);
}

void require_branch(const ModelParams& p, double omega, Branch branch) {
  if (!branch_exists(p, omega, branch)) {
    const Thresholds th = thresholds(p);
    const double need = branch == Branch::L ? th.omega_lin : th.omega_res;
    throw Error(ErrorKind::BranchAbsent, std::string("branch ") + to_string(branch) +
                                             " requires omega > " + std::to_string(need));
  }
}

// Absolute tolerance relative to the size of the integral.
Quadrature scaled(Quadrature q, double scale) {
  q.abs_tol *= std::max(1.0, std::abs(scale));
  return q;
}

// Energy density of phi_omega integrated over [a, b], split at the peak.
double soliton_energy_on(const SolitonProfile& phi, double a, double b) {
  const double power = 2.0 * phi.sigma + 2.0;
  const auto density = [&](double y) {
    const double d = phi.slope(y);
    return 0.5 * d * d - std::pow(phi.value(y), power) / power;
  };
  const Quadrature q = scaled(kStateQuadrature, phi.omega * soliton_mass(phi.sigma, phi.omega));
  if (a < 0.0 && 0.0 < b) {
    return integrate(density, a, 0.0, q) + integrate(density, 0.0, b, q);
  }
  return integrate(density, a, b, q);
}

double soliton_mass_on(const SolitonProfile& phi, double a, double b) {
  const auto density = [&](double y) {
    const double v = phi.value(y);
    return v * v;
  };
  const Quadrature q = scaled(kStateQuadrature, soliton_mass(phi.sigma, phi.omega));
  if (a < 0.0 && 0.0 < b) {
    return integrate(density, a, 0.0, q) + integrate(density, 0.0, b, q);
  }
  return integrate(density, a, b, q);
}

}  // namespace

const char* to_string(Branch b) { return b == Branch::L ? "L" : "R"; }

const char* to_string(Infimum i) {
  switch (i) {
    case Infimum::Zero: return "zero";
    case Infimum::FiniteNegative: return "finite-negative";
    case Infimum::MinusInfinity: return "minus-infinity";
  }
  return "unknown";
}

SolitonProfile StationaryState::left_piece() const {
  return {params.sigma, omega, -x_minus};
}

SolitonProfile StationaryState::right_piece() const {
  return {params.sigma, omega, -x_plus};
}

double StationaryState::value(double x, Side side) const {
  return side == Side::Left ? left_piece().value(x) : right_piece().value(x);
}

double StationaryState::slope(double x, Side side) const {
  return side == Side::Left ? left_piece().slope(x) : right_piece().slope(x);
}

double StationaryState::curvature(double x, Side side) const {
  return side == Side::Left ? left_piece().curvature(x) : right_piece().curvature(x);
}

double StationaryState::value(double x) const {
  return value(x, x < 0.0 ? Side::Left : Side::Right);
}

double StationaryState::jump_residual() const {
  return std::abs(value(0.0, Side::Right) - params.tau * value(0.0, Side::Left));
}

double StationaryState::flux_residual() const {
  return std::abs(slope(0.0, Side::Left) - params.tau * slope(0.0, Side::Right) -
                  params.alpha * value(0.0, Side::Left));
}

double StationaryState::euler_lagrange_residual(double x) const {
  const Side side = x < 0.0 ? Side::Left : Side::Right;
  const double u = value(x, side);
  return std::abs(curvature(x, side) + std::pow(u, 2.0 * params.sigma + 1.0) - omega * u);
}

Thresholds thresholds(const ModelParams& params) {
  params.validate();
  const double t2 = params.tau * params.tau;
  Thresholds th;
  th.omega_lin = params.alpha * params.alpha / ((t2 + 1.0) * (t2 + 1.0));
  th.omega_res = params.alpha * params.alpha / ((t2 - 1.0) * (t2 - 1.0));
  if (params.sigma < 2.0) {
    th.mu_alpha = params.alpha > 0.0 ? soliton_mass(params.sigma, th.omega_res) : 0.0;
  }
  return th;
}

double mu_alpha_formula(const ModelParams& params) {
  params.validate();
  if (params.is_critical()) {
    throw Error(ErrorKind::CriticalSigma, "mu_alpha is defined for sigma < 2 only");
  }
  const double s = params.sigma;
  return mass_prefactor(s) *
         std::pow(params.alpha / (params.tau * params.tau - 1.0), (2.0 - s) / s) *
         profile_integral(s, -1.0, 1.0);
}

int multiplicity(const ModelParams& params, double omega) {
  const Thresholds th = thresholds(params);
  if (!(omega > 0.0) || omega <= th.omega_lin) return 0;
  if (omega <= th.omega_res) return 1;
  return 2;
}

bool branch_exists(const ModelParams& params, double omega, Branch branch) {
  const int m = multiplicity(params, omega);
  return branch == Branch::L ? m >= 1 : m == 2;
}

StationaryState solve_branch(const ModelParams& params, double omega, Branch branch) {
  require_branch(params, omega, branch);
  const Roots r = tanh_roots(params, omega, branch);
  const double k = params.sigma * std::sqrt(omega);
  StationaryState s;
  s.params = params;
  s.branch = branch;
  s.omega = omega;
  s.t_minus = r.t_minus;
  s.t_plus = r.t_plus;
  s.x_minus = guarded_atanh(r.t_minus) / k;
  s.x_plus = guarded_atanh(r.t_plus) / k;
  s.mass = mass_prefactor(params.sigma) * std::pow(omega, 1.0 / params.sigma - 0.5) *
           window_integral(params.sigma, r.t_minus, r.t_plus);
  s.energy = energy_of_state(s);
  return s;
}

double branch_mass(const ModelParams& params, double omega, Branch branch) {
  require_branch(params, omega, branch);
  const Roots r = tanh_roots(params, omega, branch);
  if (!(std::abs(r.t_minus) < kTanhGuard && std::abs(r.t_plus) < kTanhGuard)) {
    throw Error(ErrorKind::NumericalOverflow, "tanh variable too close to +-1");
  }
  return mass_prefactor(params.sigma) * std::pow(omega, 1.0 / params.sigma - 0.5) *
         window_integral(params.sigma, r.t_minus, r.t_plus);
}

double branch_mass_derivative(const ModelParams& params, double omega, Branch branch) {
  require_branch(params, omega, branch);
  const double s = params.sigma;
  const double t2 = params.tau * params.tau;
  const double t2s = std::pow(params.tau, 2.0 * s);
  const double d = t2s * t2 * t2 - 1.0;
  const Roots r = tanh_roots(params, omega, branch);

  const double sign = branch == Branch::L ? -1.0 : 1.0;
  const double w32 = omega * std::sqrt(omega);
  const double disc =
      std::sqrt(params.alpha * params.alpha * t2s + d * (t2s - 1.0) * omega);
  const double dt_minus =
      -params.alpha / (2.0 * w32 * d) * (1.0 + sign * params.alpha * t2s * t2 / disc);

  const double c = mass_prefactor(s);
  const double a = 1.0 / s - 0.5;
  const double weight = std::pow(1.0 - r.t_minus * r.t_minus, 1.0 / s - 1.0);
  const double window = window_integral(s, r.t_minus, r.t_plus);
  const double boundary =
      weight * (t2s - 1.0) / t2s * (dt_minus + params.alpha / (2.0 * w32 * (t2s - 1.0)));
  return c * a * std::pow(omega, a - 1.0) * window + c * std::pow(omega, a) * boundary;
}

MassRange attainable_masses(const ModelParams& params, Branch branch) {
  params.validate();
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (!params.is_critical()) {
    if (branch == Branch::L) return {0.0, inf};
    return {*thresholds(params).mu_alpha, inf};
  }
  const CriticalData cd = critical_data(params.tau);
  if (branch == Branch::L) return {0.0, cd.mu_star};
  return {cd.mu_line, cd.mu_tilde};
}

StationaryState state_by_mass(const ModelParams& params, double mu, Branch branch) {
  params.validate();
  if (params.is_critical() && params.alpha == 0.0) {
    throw Error(ErrorKind::DegenerateMap,
                "for sigma = 2, alpha = 0 the mass does not depend on omega");
  }
  const MassRange range = attainable_masses(params, branch);
  if (!(mu > range.lo && mu < range.hi)) {
    throw Error(ErrorKind::MassOutOfRange,
                std::string("branch ") + to_string(branch) + " attains masses in (" +
                    std::to_string(range.lo) + ", " + std::to_string(range.hi) + ")");
  }
  const Thresholds th = thresholds(params);
  const double threshold = branch == Branch::L ? th.omega_lin : th.omega_res;

  const auto mass_at = [&](double w) { return branch_mass(params, w, branch); };
  double lo;
  double hi;
  if (threshold == 0.0) {
    // alpha = 0: both branches start at omega = 0.
    hi = 1.0;
    while (mass_at(hi) < mu) hi *= 2.0;
    lo = hi;
    while (mass_at(lo) > mu) lo *= 0.5;
  } else {
    lo = threshold * (1.0 + 1e-12);
    hi = threshold * 2.0;
    while (mass_at(hi) < mu) {
      lo = hi;
      hi *= 2.0;
      if (hi > 1e300) throw Error(ErrorKind::MassOutOfRange, "mass not bracketed");
    }
  }

  for (int i = 0; i < 400 && (hi - lo) > 1e-13 * hi; ++i) {
    const double mid = hi / lo > 4.0 ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
    double m;
    try {
      m = mass_at(mid);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NumericalOverflow) throw;
      lo = mid;
      continue;
    }
    (m < mu ? lo : hi) = mid;
  }
  double omega = 0.5 * (lo + hi);
  const double slope = branch_mass_derivative(params, omega, branch);
  if (slope > 0.0 && std::isfinite(slope)) {
    const double polished = omega - (mass_at(omega) - mu) / slope;
    if (polished > lo - 1e-13 * hi && polished < hi + 1e-13 * hi &&
        branch_exists(params, polished, branch)) {
      omega = polished;
    }
  }
  return solve_branch(params, omega, branch);
}

GroundStateLookup identify_ground_state(const ModelParams& params, double mu) {
  params.validate();
  GroundStateLookup out;
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorKind::DomainError, "mass must be positive");
  }
  if (!params.is_critical()) {
    out.infimum = Infimum::FiniteNegative;
    out.state = state_by_mass(params, mu, Branch::L);
    out.reason = "unique ground state on the L branch";
    return out;
  }
  const CriticalData cd = critical_data(params.tau);
  if (params.alpha == 0.0) {
    if (std::abs(mu - cd.mu_star) <= 1e-9) {
      out.infimum = Infimum::Zero;
      out.state = solve_branch(params, 1.0, Branch::L);
      out.reason = "mu equals mu*: the dipole state u1 (any omega; omega = 1 returned)";
    } else if (mu < cd.mu_star) {
      out.infimum = Infimum::Zero;
      out.reason = "infimum 0 is not attained for mu < mu*";
    } else {
      out.infimum = Infimum::MinusInfinity;
      out.reason = "infimum is -infinity for mu > mu*";
    }
    return out;
  }
  if (mu < cd.mu_star) {
    out.infimum = Infimum::FiniteNegative;
    out.state = state_by_mass(params, mu, Branch::L);
    out.reason = "ground state on the L branch";
  } else {
    out.infimum = Infimum::MinusInfinity;
    out.reason = "infimum is -infinity for mu >= mu*";
  }
  return out;
}

double energy_of_state(const StationaryState& s) {
  const SolitonProfile phi{s.params.sigma, s.omega, 0.0};
  const double radius = truncation_radius(s.params.sigma, s.omega);
  const double left = soliton_energy_on(phi, std::min(s.x_minus, 0.0) - radius, s.x_minus);
  const double right = soliton_energy_on(phi, s.x_plus, std::max(s.x_plus, 0.0) + radius);
  const double u0 = phi.value(s.x_minus);
  return left + right - 0.5 * s.params.alpha * u0 * u0;
}

double quadrature_mass(const StationaryState& s) {
  const SolitonProfile phi{s.params.sigma, s.omega, 0.0};
  const double radius = truncation_radius(s.params.sigma, s.omega);
  return soliton_mass_on(phi, std::min(s.x_minus, 0.0) - radius, s.x_minus) +
         soliton_mass_on(phi, s.x_plus, std::max(s.x_plus, 0.0) + radius);
}

double LinearMode::value(double x, Side side) const {
  const double k = std::sqrt(omega);
  return side == Side::Left ? std::exp(left_sign * k * x) : tau * std::exp(-k * x);
}

double LinearMode::slope(double x, Side side) const {
  const double k = std::sqrt(omega);
  return side == Side::Left ? left_sign * k * std::exp(left_sign * k * x)
                            : -k * tau * std::exp(-k * x);
}

double LinearMode::jump_residual() const {
  return std::abs(value(0.0, Side::Right) - tau * value(0.0, Side::Left));
}

double LinearMode::flux_residual() const {
  return std::abs(slope(0.0, Side::Left) - tau * slope(0.0, Side::Right) -
                  alpha * value(0.0, Side::Left));
}

LinearMode linear_eigenpair(const ModelParams& params) {
  params.validate();
  if (params.alpha == 0.0) {
    throw Error(ErrorKind::NoEigenvalue, "the linear operator has no eigenvalue for alpha = 0");
  }
  return {thresholds(params).omega_lin, params.tau, params.alpha, 1.0};
}

LinearMode resonance_mode(const ModelParams& params) {
  params.validate();
  if (params.alpha == 0.0) {
    throw Error(ErrorKind::NoEigenvalue, "no resonance for alpha = 0");
  }
  return {thresholds(params).omega_res, params.tau, params.alpha, -1.0};
}

}  // namespace ftwave
