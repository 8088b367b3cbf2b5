#include <algorithm>
#include <vector>

#include "ftwave/error.hpp"
#include "ftwave/variational.hpp"

namespace ftwave {
namespace {

// Stable descending order; equal values keep their original index order.
std::vector<double> sorted_descending(std::vector<double> v) {
  std::stable_sort(v.begin(), v.end(), [](double a, double b) { return a > b; });
  return v;
}

// Single symmetric bump from a descending list: largest in the middle.
std::vector<double> organ_pipe(const std::vector<double>& descending) {
  std::vector<double> rising;
  std::vector<double> falling;
  for (std::size_t i = 0; i < descending.size(); ++i) {
    (i % 2 == 0 ? falling : rising).push_back(descending[i]);
  }
  std::vector<double> bump(rising.rbegin(), rising.rend());
  bump.insert(bump.end(), falling.begin(), falling.end());
  return bump;
}

}  // namespace

GridFunction rearrange(const GridFunction& u) {
  if (!u.nonnegative()) throw Error(ErrorKind::NegativeInput, "rearrangement needs u >= 0");
  const auto& left = u.left();
  const auto& right = u.right();
  const std::size_t n = left.size() - 1;
  const double lo = left.back();
  const double hi = right.front();

  // Level windows of the non-origin samples, in index order.
  std::vector<double> upper;
  std::vector<double> middle;
  std::vector<double> lower;
  const auto classify = [&](double v) {
    if (v > hi) {
      upper.push_back(v);
    } else if (v > lo) {
      middle.push_back(v);
    } else {
      lower.push_back(v);
    }
  };
  for (std::size_t i = 0; i < n; ++i) classify(left[i]);
  for (std::size_t i = 1; i <= n; ++i) classify(right[i]);

  const auto bump = organ_pipe(sorted_descending(upper));
  const auto mid = sorted_descending(middle);
  const auto low = sorted_descending(lower);
  std::vector<double> low_right;
  std::vector<double> low_left;
  for (std::size_t i = 0; i < low.size(); ++i) (i % 2 == 0 ? low_right : low_left).push_back(low[i]);

  std::vector<double> new_right{hi};
  new_right.insert(new_right.end(), bump.begin(), bump.end());
  new_right.insert(new_right.end(), mid.begin(), mid.end());
  new_right.insert(new_right.end(), low_right.begin(), low_right.end());
  std::vector<double> new_left(low_left.rbegin(), low_left.rend());
  new_left.push_back(lo);

  // Pad with zeros; both sides keep a zero at the outer end.
  const std::size_t size =
      std::max({n + 1, new_right.size() + 1, new_left.size() + 1});
  new_right.resize(size, 0.0);
  new_left.insert(new_left.begin(), size - new_left.size(), 0.0);
  const double extent = u.h() * static_cast<double>(size - 1);
  return GridFunction(u.params(), extent, std::move(new_left), std::move(new_right));
}

}  // namespace ftwave
