#include "ftwave/critical.hpp"

#include <cmath>
#include <numbers>

#include "ftwave/error.hpp"

namespace ftwave {
namespace {

constexpr double kMassMatch = 1e-9;

}  // namespace

CriticalData critical_data(double tau) {
  if (!(tau >= 1.0) || !std::isfinite(tau)) {
    throw Error(ErrorKind::DomainError, "critical data requires tau >= 1");
  }
  constexpr double pi = std::numbers::pi;
  const double half_root3 = 0.5 * std::sqrt(3.0);
  // 1/sqrt(1 + tau^4) without overflow for very large tau.
  const double t2 = tau * tau;
  const double inv = 1.0 / (t2 * std::sqrt(1.0 + 1.0 / (t2 * t2)));
  const double angle = 2.0 * std::asin(inv);
  CriticalData cd;
  cd.tau = tau;
  cd.mu_star = half_root3 * (0.5 * pi + angle);
  cd.mu_tilde = half_root3 * (1.5 * pi - angle);
  cd.k_tau = 3.0 / (cd.mu_star * cd.mu_star);
  cd.mu_line = half_root3 * pi;
  return cd;
}

std::pair<StationaryState, StationaryState> dipole_critical_states(double tau, double omega) {
  const ModelParams p{2.0, tau, 0.0};
  p.validate();
  if (!(tau > 1.0)) {
    throw Error(ErrorKind::DomainError, "the dipole critical states need tau > 1");
  }
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw Error(ErrorKind::DomainError, "omega must be positive");
  }
  return {solve_branch(p, omega, Branch::L), solve_branch(p, omega, Branch::R)};
}

RegimeReport classify_mass_regime(const ModelParams& params, double mu) {
  if (params.sigma != 2.0) {
    throw Error(ErrorKind::WrongSigma, "the mass regimes are classified for sigma = 2 only");
  }
  params.validate();
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorKind::DomainError, "mass must be positive");
  }
  const CriticalData cd = critical_data(params.tau);
  RegimeReport r;
  if (params.alpha == 0.0) {
    r.infimum = mu <= cd.mu_star + kMassMatch ? Infimum::Zero : Infimum::MinusInfinity;
    r.ground_state_exists = std::abs(mu - cd.mu_star) <= kMassMatch;
    r.excited_state_exists = std::abs(mu - cd.mu_tilde) <= kMassMatch;
    r.excited_lo = r.excited_hi = cd.mu_tilde;
    r.no_stationary_state = !r.ground_state_exists && !r.excited_state_exists;
    return r;
  }
  r.infimum = mu < cd.mu_star ? Infimum::FiniteNegative : Infimum::MinusInfinity;
  r.ground_state_exists = mu < cd.mu_star;
  r.excited_lo = cd.mu_line;
  r.excited_hi = cd.mu_tilde;
  r.excited_state_exists = mu > cd.mu_line && mu < cd.mu_tilde;
  r.no_stationary_state = !r.ground_state_exists && !r.excited_state_exists;
  return r;
}

}  // namespace ftwave
