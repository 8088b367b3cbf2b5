#include "ftwave/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "ftwave/error.hpp"
#include "ftwave/oracle.hpp"

namespace ftwave {
namespace {

// sech(z) without overflow for large |z|.
double sech(double z) {
  const double e = std::exp(-std::abs(z));
  return 2.0 * e / (1.0 + e * e);
}

constexpr Quadrature kEnergyQuadrature{1e-12, 50};

// Tolerance relative to the energy scale omega * mass.
Quadrature energy_quadrature(const SolitonProfile& p) {
  Quadrature q = kEnergyQuadrature;
  q.abs_tol *= std::max(1.0, p.omega * soliton_mass(p.sigma, p.omega));
  return q;
}

}  // namespace

void ModelParams::validate() const {
  if (!(sigma > 0.0 && sigma <= 2.0)) {
    throw Error(ErrorKind::DomainError, "sigma must satisfy 0 < sigma <= 2");
  }
  if (!(tau > 1.0) || !std::isfinite(tau)) {
    throw Error(ErrorKind::DomainError,
                "tau must be > 1 (map 0 < tau < 1 by x -> -x and tau < 0 by a sign flip first)");
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorKind::DomainError, "alpha must be >= 0");
  }
}

void SolitonProfile::validate() const {
  if (!(sigma > 0.0 && sigma <= 2.0)) {
    throw Error(ErrorKind::DomainError, "soliton sigma must satisfy 0 < sigma <= 2");
  }
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw Error(ErrorKind::DomainError, "soliton frequency must be positive");
  }
}

double SolitonProfile::amplitude() const {
  return std::pow(omega * (sigma + 1.0), 1.0 / (2.0 * sigma));
}

double SolitonProfile::value(double x) const {
  const double z = sigma * std::sqrt(omega) * (x - shift);
  return amplitude() * std::pow(sech(z), 1.0 / sigma);
}

double SolitonProfile::slope(double x) const {
  const double z = sigma * std::sqrt(omega) * (x - shift);
  return -std::sqrt(omega) * std::tanh(z) * value(x);
}

double SolitonProfile::curvature(double x) const {
  const double z = sigma * std::sqrt(omega) * (x - shift);
  const double t = std::tanh(z);
  const double s = sech(z);
  return omega * (t * t - sigma * s * s) * value(x);
}

double soliton_value(const SolitonProfile& p, double x) { return p.value(x); }

double mass_prefactor(double sigma) { return std::pow(sigma + 1.0, 1.0 / sigma) / sigma; }

double soliton_mass(double sigma, double omega) {
  SolitonProfile{sigma, omega, 0.0}.validate();
  return mass_prefactor(sigma) * std::pow(omega, 1.0 / sigma - 0.5) *
         profile_integral(sigma, -1.0, 1.0);
}

SolitonProfile soliton_by_mass(double sigma, double mu) {
  if (sigma == 2.0) {
    throw Error(ErrorKind::CriticalSigma,
                "the critical soliton mass is independent of omega; mass cannot be inverted");
  }
  if (!(sigma > 0.0 && sigma < 2.0)) {
    throw Error(ErrorKind::DomainError, "soliton_by_mass requires 0 < sigma < 2");
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(ErrorKind::DomainError, "mass must be positive");
  }
  const double unit = mass_prefactor(sigma) * profile_integral(sigma, -1.0, 1.0);
  const double omega = std::pow(mu / unit, 2.0 * sigma / (2.0 - sigma));
  return {sigma, omega, 0.0};
}

double truncation_radius(double sigma, double omega) {
  return 40.0 / (sigma * std::sqrt(omega));
}

double nls_energy(const SolitonProfile& p, Side side) {
  p.validate();
  const double power = 2.0 * p.sigma + 2.0;
  const auto density = [&](double x) {
    const double d = p.slope(x);
    return 0.5 * d * d - std::pow(p.value(x), power) / power;
  };
  const double radius = truncation_radius(p.sigma, p.omega);
  const Quadrature q = energy_quadrature(p);
  // Split at the peak when it falls inside the half-line.
  double total = 0.0;
  if (side == Side::Left) {
    const double lo = std::min(0.0, p.shift) - radius;
    if (p.shift < 0.0) {
      total += integrate(density, lo, p.shift, q);
      total += integrate(density, p.shift, 0.0, q);
    } else {
      total += integrate(density, lo, 0.0, q);
    }
  } else {
    const double hi = std::max(0.0, p.shift) + radius;
    if (p.shift > 0.0) {
      total += integrate(density, 0.0, p.shift, q);
      total += integrate(density, p.shift, hi, q);
    } else {
      total += integrate(density, 0.0, hi, q);
    }
  }
  return total;
}

double nls_energy(const SolitonProfile& p) {
  p.validate();
  const double power = 2.0 * p.sigma + 2.0;
  const auto density = [&](double x) {
    const double d = p.slope(x);
    return 0.5 * d * d - std::pow(p.value(x), power) / power;
  };
  const double radius = truncation_radius(p.sigma, p.omega);
  const Quadrature q = energy_quadrature(p);
  return integrate(density, p.shift - radius, p.shift, q) +
         integrate(density, p.shift, p.shift + radius, q);
}

double theta_sigma(double sigma) {
  static std::mutex mutex;
  static std::map<double, double> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(sigma); it != cache.end()) return it->second;
  }
  const double theta = -nls_energy(soliton_by_mass(sigma, 1.0));
  std::lock_guard lock(mutex);
  cache.emplace(sigma, theta);
  return theta;
}

}  // namespace ftwave
