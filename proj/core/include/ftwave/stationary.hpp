#pragma once

#include <optional>
#include <string>

#include "ftwave/profiles.hpp"

namespace ftwave {

/// Left (u^L) and right (u^R) root of the quadratic for T_-.
enum class Branch { L, R };

const char* to_string(Branch b);

/// Qualitative value of the constrained energy infimum.
enum class Infimum { Zero, FiniteNegative, MinusInfinity };

const char* to_string(Infimum i);

/// Positive solution u(x) = phi_omega(x + x_-) on x < 0 and phi_omega(x + x_+) on x > 0.
struct StationaryState {
  ModelParams params;
  Branch branch = Branch::L;
  double omega = 0.0;
  double t_minus = 0.0;
  double t_plus = 0.0;
  double x_minus = 0.0;
  double x_plus = 0.0;
  double mass = 0.0;
  double energy = 0.0;

  /// Soliton pieces as translated profiles (shift = -x_-, -x_+).
  SolitonProfile left_piece() const;
  SolitonProfile right_piece() const;

  /// Evaluation on one side; the side decides the trace at x = 0.
  double value(double x, Side side) const;
  double slope(double x, Side side) const;
  double curvature(double x, Side side) const;
  /// Evaluation away from the origin, side taken from the sign of x.
  double value(double x) const;

  /// |u(0+) - tau u(0-)|
  double jump_residual() const;
  /// |u'(0-) - tau u'(0+) - alpha u(0-)|
  double flux_residual() const;
  /// |u'' + u^{2 sigma + 1} - omega u| at x != 0.
  double euler_lagrange_residual(double x) const;
};

struct Thresholds {
  double omega_lin = 0.0;
  double omega_res = 0.0;
  /// Mass at which the R branch is born; only for sigma < 2.
  std::optional<double> mu_alpha;
};

Thresholds thresholds(const ModelParams& params);

/// Closed form of mu_alpha from the integral formula (sigma < 2).
double mu_alpha_formula(const ModelParams& params);

/// Number of positive stationary states at frequency omega.
int multiplicity(const ModelParams& params, double omega);

bool branch_exists(const ModelParams& params, double omega, Branch branch);

StationaryState solve_branch(const ModelParams& params, double omega, Branch branch);

double branch_mass(const ModelParams& params, double omega, Branch branch);
double branch_mass_derivative(const ModelParams& params, double omega, Branch branch);

/// Open interval of masses attained by a branch.
struct MassRange {
  double lo = 0.0;
  double hi = 0.0;
};

MassRange attainable_masses(const ModelParams& params, Branch branch);

StationaryState state_by_mass(const ModelParams& params, double mu, Branch branch);

struct GroundStateLookup {
  std::optional<StationaryState> state;
  Infimum infimum = Infimum::FiniteNegative;
  std::string reason;
};

GroundStateLookup identify_ground_state(const ModelParams& params, double mu);

/// E_alpha of a closed-form state by quadrature plus the point term.
double energy_of_state(const StationaryState& s);

/// Squared L2 norm by quadrature of the profile (independent of the mass identity).
double quadrature_mass(const StationaryState& s);

/// Eigenfunction e^{k x} (x<0), tau e^{-k x} (x>0) with k = sqrt(omega).
struct LinearMode {
  double omega = 0.0;
  double tau = 1.0;
  double alpha = 0.0;
  /// Left-side exponent sign: +1 decays at -inf, -1 grows there.
  double left_sign = 1.0;

  double value(double x, Side side) const;
  double slope(double x, Side side) const;
  double jump_residual() const;
  double flux_residual() const;
  bool square_integrable() const { return left_sign > 0.0; }
};

/// Lowest eigenvalue -omega_lin of the linear operator and its eigenfunction.
LinearMode linear_eigenpair(const ModelParams& params);

/// Non-L2 solution of the linear system at omega_res.
LinearMode resonance_mode(const ModelParams& params);

}  // namespace ftwave
