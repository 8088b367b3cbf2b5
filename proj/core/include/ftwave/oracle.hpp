#pragma once

#include <functional>

namespace ftwave {

/// Settings for adaptive Simpson integration.
struct Quadrature {
  double abs_tol = 1e-10;
  int max_depth = 40;
};

using RealFunction = std::function<double(double)>;

/// Adaptive Simpson on [a, b]. The tolerance is halved on every split and a
/// Richardson correction is applied to accepted panels.
///
/// Throws Error(NonFinite) if f returns NaN/inf at a node and
/// Error(DepthExceeded) if a panel cannot meet its tolerance within
/// q.max_depth splits.
double integrate(const RealFunction& f, double a, double b, const Quadrature& q = {});

/// I(a, b) = \int_a^b (1 - t^2)^{1/sigma - 1} dt for 0 < sigma <= 2 and
/// -1 <= a <= b <= 1. The endpoint singularity at t = +-1 (sigma > 1) is
/// removed by t = sin(theta) followed by a power substitution near theta = pi/2.
double profile_integral(double sigma, double a, double b);

/// Central difference (f(x + h) - f(x - h)) / (2h).
double fd_derivative(const RealFunction& f, double x, double h);

}  // namespace ftwave
