#pragma once

namespace ftwave {

/// Nonlinearity power sigma, jump ratio tau and delta strength alpha.
/// Valid parameters satisfy 0 < sigma <= 2, tau > 1, alpha >= 0.
struct ModelParams {
  double sigma = 1.0;
  double tau = 2.0;
  double alpha = 0.0;

  /// Throws Error(DomainError) when the triple is outside the admissible range.
  void validate() const;
  bool is_critical() const { return sigma == 2.0; }
  /// Exponent 2 sigma + 2 of the nonlinear term.
  double power() const { return 2.0 * sigma + 2.0; }
};

/// Which half-line a point or a sample belongs to.
enum class Side { Left, Right };

/// phi(x) = (omega (sigma+1))^{1/(2 sigma)} cosh^{-1/sigma}(sigma sqrt(omega) (x - shift)).
struct SolitonProfile {
  double sigma = 1.0;
  double omega = 1.0;
  double shift = 0.0;

  void validate() const;
  double amplitude() const;
  double value(double x) const;
  double slope(double x) const;
  double curvature(double x) const;
};

double soliton_value(const SolitonProfile& p, double x);

/// (sigma+1)^{1/sigma}/sigma, the prefactor shared by every mass identity.
double mass_prefactor(double sigma);

/// Squared L2 norm of the soliton of frequency omega on the whole line.
double soliton_mass(double sigma, double omega);

/// Soliton with the given mass, centred at the origin. Only defined for
/// sigma < 2; the critical soliton mass does not depend on omega.
SolitonProfile soliton_by_mass(double sigma, double mu);

/// Half-width beyond which the soliton tail is below 1e-17 of its peak.
double truncation_radius(double sigma, double omega);

/// E_NLS(u) = 1/2 |u'|^2 - 1/(2 sigma + 2) |u|^{2 sigma + 2}, by quadrature.
double nls_energy(const SolitonProfile& p);

/// The same functional restricted to one half-line (x < 0 or x > 0).
double nls_energy(const SolitonProfile& p, Side side);

/// theta_sigma in E_NLS(phi_mu) = -theta_sigma mu^{(sigma+2)/(2-sigma)}.
/// Computed once per sigma and cached.
double theta_sigma(double sigma);

}  // namespace ftwave
