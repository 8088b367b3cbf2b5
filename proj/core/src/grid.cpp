#include "ftwave/grid.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ftwave/error.hpp"

namespace ftwave {
namespace {

double trapezoid(const std::vector<double>& v, double h, double p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double w = (i == 0 || i + 1 == v.size()) ? 0.5 : 1.0;
    sum += w * std::pow(std::abs(v[i]), p);
  }
  return sum * h;
}

double squared_differences(const std::vector<double>& v) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const double d = v[i + 1] - v[i];
    sum += d * d;
  }
  return sum;
}

}  // namespace

GridFunction::GridFunction(ModelParams params, double half_extent, std::vector<double> left,
                           std::vector<double> right)
    : params_(params), half_extent_(half_extent), left_(std::move(left)), right_(std::move(right)) {
  params_.validate();
  if (!(half_extent_ > 0.0) || !std::isfinite(half_extent_)) {
    throw Error(ErrorKind::DomainError, "grid half extent must be positive");
  }
  if (left_.size() < 2 || left_.size() != right_.size()) {
    throw Error(ErrorKind::DomainError, "grid sides need equal sizes of at least 2 samples");
  }
  for (const auto* side : {&left_, &right_}) {
    for (double v : *side) {
      if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "grid sample is not finite");
    }
  }
  const double scale = std::max(1.0, std::abs(right_.front()));
  if (jump_residual() > 1e-12 * scale) {
    throw Error(ErrorKind::DomainError, "grid violates u(0+) = tau u(0-)");
  }
}

GridFunction GridFunction::sample(const ModelParams& params, double half_extent, int intervals,
                                  const std::function<double(double, Side)>& f) {
  if (intervals < 1) throw Error(ErrorKind::DomainError, "grid needs at least one interval");
  const double h = half_extent / intervals;
  std::vector<double> left(intervals + 1);
  std::vector<double> right(intervals + 1);
  for (int i = 0; i <= intervals; ++i) {
    left[i] = f(-half_extent + i * h, Side::Left);
    right[i] = f(i * h, Side::Right);
  }
  left[intervals] = f(0.0, Side::Left);
  right[0] = params.tau * left[intervals];
  return GridFunction(params, half_extent, std::move(left), std::move(right));
}

GridFunction GridFunction::with_params(const ModelParams& params) const {
  return GridFunction(params, half_extent_, left_, right_);
}

GridFunction GridFunction::scaled(double factor) const {
  auto l = left_;
  auto r = right_;
  for (double& v : l) v *= factor;
  for (double& v : r) v *= factor;
  r.front() = params_.tau * l.back();
  return GridFunction(params_, half_extent_, std::move(l), std::move(r));
}

double GridFunction::mass() const { return lp(2.0); }

double GridFunction::mass_left() const { return lp_left(2.0); }

double GridFunction::kinetic() const {
  return (squared_differences(left_) + squared_differences(right_)) / h();
}

double GridFunction::lp(double p) const {
  return trapezoid(left_, h(), p) + trapezoid(right_, h(), p);
}

double GridFunction::lp_left(double p) const { return trapezoid(left_, h(), p); }

double GridFunction::jump_residual() const {
  return std::abs(right_.front() - params_.tau * left_.back());
}

bool GridFunction::nonnegative() const {
  return std::all_of(left_.begin(), left_.end(), [](double v) { return v >= 0.0; }) &&
         std::all_of(right_.begin(), right_.end(), [](double v) { return v >= 0.0; });
}

double nls_energy(const GridFunction& u) {
  const double p = u.params().power();
  return 0.5 * u.kinetic() - u.lp(p) / p;
}

double discrete_energy(const GridFunction& u) {
  const double origin = u.left().back();
  return nls_energy(u) - 0.5 * u.params().alpha * origin * origin;
}

double l2_distance(const GridFunction& a, const GridFunction& b) {
  if (a.intervals() != b.intervals() || a.half_extent() != b.half_extent()) {
    throw Error(ErrorKind::DomainError, "grids differ in shape");
  }
  std::vector<double> dl(a.left().size());
  std::vector<double> dr(a.right().size());
  for (std::size_t i = 0; i < dl.size(); ++i) {
    dl[i] = a.left()[i] - b.left()[i];
    dr[i] = a.right()[i] - b.right()[i];
  }
  return std::sqrt(trapezoid(dl, a.h(), 2.0) + trapezoid(dr, a.h(), 2.0));
}

}  // namespace ftwave
