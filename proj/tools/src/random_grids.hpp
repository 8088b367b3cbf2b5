#pragma once

#include <random>

#include "ftwave/grid.hpp"

namespace ftwave::verify {

struct RandomGridOptions {
  double half_extent = 20.0;
  int intervals = 2000;
  bool vanish_at_origin = false;
  bool nonnegative = false;
};

/// Sum of a few Gaussian bumps per side, corrected to satisfy the jump condition.
GridFunction random_grid(const ModelParams& params, std::mt19937_64& rng,
                         const RandomGridOptions& options = {});

}  // namespace ftwave::verify
