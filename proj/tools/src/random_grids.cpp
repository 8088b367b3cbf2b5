#include "random_grids.hpp"

#include <cmath>
#include <vector>

namespace ftwave::verify {
namespace {

struct Bump {
  double amplitude;
  double center;
  double width;
};

std::vector<Bump> draw_bumps(std::mt19937_64& rng, double extent, bool nonnegative) {
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_real_distribution<double> amp(nonnegative ? 0.1 : -2.0, 2.0);
  std::uniform_real_distribution<double> center(0.0, 0.5 * extent);
  std::uniform_real_distribution<double> width(0.5, 3.0);
  std::vector<Bump> bumps(count(rng));
  for (auto& b : bumps) b = {amp(rng), center(rng), width(rng)};
  return bumps;
}

double evaluate(const std::vector<Bump>& bumps, double distance) {
  double s = 0.0;
  for (const auto& b : bumps) {
    const double z = (distance - b.center) / b.width;
    s += b.amplitude * std::exp(-z * z);
  }
  return s;
}

}  // namespace

GridFunction random_grid(const ModelParams& params, std::mt19937_64& rng,
                         const RandomGridOptions& options) {
  const auto left = draw_bumps(rng, options.half_extent, options.nonnegative);
  const auto right = draw_bumps(rng, options.half_extent, options.nonnegative);
  std::uniform_real_distribution<double> origin_level(0.0, 1.5);
  const double target_left = options.vanish_at_origin ? 0.0 : origin_level(rng);
  const double target_right = params.tau * target_left;
  const double left0 = evaluate(left, 0.0);
  const double right0 = evaluate(right, 0.0);

  // Additive corrections pin the origin traces; the cutoff forces zero ends.
  const auto profile = [&](double x, Side side) {
    const double d = std::abs(x);
    const double cutoff = 1.0 - std::exp(-std::pow(options.half_extent - d, 2));
    const double corr = std::exp(-d * d);
    double v = side == Side::Left ? evaluate(left, d) + (target_left - left0) * corr
                                  : evaluate(right, d) + (target_right - right0) * corr;
    v *= cutoff;
    if (options.vanish_at_origin) v *= 1.0 - std::exp(-d * d);
    return options.nonnegative ? std::abs(v) : v;
  };
  return GridFunction::sample(params, options.half_extent, options.intervals, profile);
}

}  // namespace ftwave::verify
