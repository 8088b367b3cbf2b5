#pragma once

#include <functional>
#include <vector>

#include "ftwave/profiles.hpp"

namespace ftwave {

/// Samples of u on [-X, 0] (left, u(0-) last) and [0, X] (right, u(0+) first),
/// both with n intervals of width h = X / n. The jump condition
/// right[0] = tau * left[n] is checked on construction.
class GridFunction {
 public:
  GridFunction(ModelParams params, double half_extent, std::vector<double> left,
               std::vector<double> right);

  /// Samples f(x, side) on the grid; the origin value on the right is set to tau * f(0, Left).
  static GridFunction sample(const ModelParams& params, double half_extent, int intervals,
                             const std::function<double(double, Side)>& f);

  const ModelParams& params() const { return params_; }
  double half_extent() const { return half_extent_; }
  int intervals() const { return static_cast<int>(left_.size()) - 1; }
  double h() const { return half_extent_ / intervals(); }
  const std::vector<double>& left() const { return left_; }
  const std::vector<double>& right() const { return right_; }
  /// Abscissa of left[i] and right[i].
  double left_x(int i) const { return -half_extent_ + i * h(); }
  double right_x(int i) const { return i * h(); }

  /// Same samples with a different interaction (tau must match).
  GridFunction with_params(const ModelParams& params) const;
  GridFunction scaled(double factor) const;

  double mass() const;
  double mass_left() const;
  /// Sum of squared one-sided difference quotients times h; nothing spans the origin.
  double kinetic() const;
  /// Trapezoid integral of |u|^p over the whole line and over x < 0.
  double lp(double p) const;
  double lp_left(double p) const;
  double jump_residual() const;
  bool nonnegative() const;

 private:
  ModelParams params_;
  double half_extent_;
  std::vector<double> left_;
  std::vector<double> right_;
};

/// 1/2 kinetic - lp(2 sigma + 2)/(2 sigma + 2) - alpha/2 u(0-)^2.
double discrete_energy(const GridFunction& u);

/// E_NLS of the samples, without the point term.
double nls_energy(const GridFunction& u);

/// L2 distance between two grids of equal shape.
double l2_distance(const GridFunction& a, const GridFunction& b);

}  // namespace ftwave
