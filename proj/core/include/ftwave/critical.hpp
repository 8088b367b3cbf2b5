#pragma once

#include <utility>

#include "ftwave/stationary.hpp"

namespace ftwave {

/// Threshold masses and the optimal L6 Gagliardo-Nirenberg constant on the jump space.
struct CriticalData {
  double tau = 1.0;
  double mu_star = 0.0;
  double mu_tilde = 0.0;
  double k_tau = 0.0;
  double mu_line = 0.0;
};

CriticalData critical_data(double tau);

/// u1 (L branch) and u2 (R branch) for sigma = 2, alpha = 0.
std::pair<StationaryState, StationaryState> dipole_critical_states(double tau, double omega);

struct RegimeReport {
  Infimum infimum = Infimum::Zero;
  bool ground_state_exists = false;
  bool excited_state_exists = false;
  /// No positive stationary state at this mass; for alpha > 0 this covers the gap
  /// [mu*, sqrt(3) pi / 2] and every mass from mu_tilde on.
  bool no_stationary_state = false;
  /// Excited masses: (lo, hi), degenerate lo == hi == mu_tilde when alpha = 0.
  double excited_lo = 0.0;
  double excited_hi = 0.0;
};

RegimeReport classify_mass_regime(const ModelParams& params, double mu);

}  // namespace ftwave
