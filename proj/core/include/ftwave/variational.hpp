#pragma once

#include <optional>
#include <vector>

#include "ftwave/grid.hpp"
#include "ftwave/stationary.hpp"

namespace ftwave {

/// Free samples of u: left[1..n] (u(0-) last) followed by right[1..n-1].
/// u(0+) is eliminated by the jump condition; the outer ends stay pinned.
std::vector<double> to_dofs(const GridFunction& u);
GridFunction from_dofs(const GridFunction& shape, const std::vector<double>& dofs);

/// Gradient of discrete_energy with respect to to_dofs(u).
std::vector<double> energy_gradient(const GridFunction& u);

/// Multiplier omega of the discrete Euler-Lagrange system grad E = -omega grad(mass)/2.
double lagrange_multiplier(const GridFunction& u);

struct MinimizeOptions {
  std::optional<GridFunction> init;
  /// Zero selects 20 / sqrt(omega estimate).
  double half_extent = 0.0;
  int intervals = 4000;
  int max_iters = 20000;
  bool require_convergence = true;
  std::optional<StationaryState> reference;
};

struct MinimizationReport {
  GridFunction final;
  std::vector<double> energy_history;
  bool converged = false;
  int iterations = 0;
  double lagrange_omega = 0.0;
  std::optional<double> profile_error_l2;
};

/// Constrained descent of discrete_energy on the sphere of mass mu.
MinimizationReport minimize_energy(const ModelParams& params, double mu,
                                   const MinimizeOptions& options = {});

/// Samples a closed-form state on a grid.
GridFunction sample_state(const StationaryState& s, double half_extent, int intervals);

/// Nonnegative rearrangement: increasing on x < 0, one maximum on x >= 0.
GridFunction rearrange(const GridFunction& u);

/// |u|_6^6 / (|u'|_2^2 |u|_2^4).
double gn_quotient(const GridFunction& u);

/// |u|_p^p / (|u'|_2^sigma |u|_2^{sigma+2}) with p = 2 sigma + 2.
double gn_ratio(const GridFunction& u, double sigma);

/// Optimal constant of the same inequality on the line, attained by the soliton.
double gn_line_constant(double sigma);

/// Constant 2^{sigma/2+1} C_line(sigma) valid on the jump space.
double gn_jump_constant(double sigma);

/// Both sides of |u|_6^6 + (tau^8-1)|u|_{6,-}^6 <= 4/pi^2 (|u|_2^2 + (tau^4-1)|u|_{2,-}^2)^2 |u'|_2^2.
struct ModifiedGnSides {
  double lhs = 0.0;
  double rhs = 0.0;
};

ModifiedGnSides modified_gn_sides(const GridFunction& u);

struct GnMaximum {
  double quotient = 0.0;
  GridFunction argmax;
  int iterations = 0;
  bool converged = false;
};

GnMaximum maximize_gn_quotient(double tau, std::optional<GridFunction> init = std::nullopt);

struct Competitor {
  GridFunction v;
  double nu = 0.0;
  double soliton_energy = 0.0;
  double competitor_energy = 0.0;
  double energy_gap = 0.0;
  double jump_residual = 0.0;
};

/// Half-solitons of masses 2 nu (x > 0) and 2 (mu - nu) (x < 0) glued under the jump condition.
Competitor subcritical_competitor(double sigma, double tau, double mu);

}  // namespace ftwave
