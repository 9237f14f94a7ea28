#include <algorithm>
#include <cstdlib>
#include <vector>

#include "spld/kernels.hpp"

namespace spld::kernels {

namespace detail {

void class_sums_lanes(const std::int32_t* cls, const double* w, std::size_t begin, std::size_t end,
                      double (*lanes)[4]) {
  for (std::size_t j = begin; j < end; ++j) lanes[cls[j]][j % 4] += w[j];
}

}  // namespace detail

namespace {

LandmarkBounds landmark_bounds_scalar(const std::int32_t* a, const std::int32_t* b,
                                      std::size_t len) {
  std::int32_t upper = kRowPad * 2;
  std::int32_t lower = 0;
  for (std::size_t j = 0; j < len; ++j) {
    upper = std::min(upper, a[j] + b[j]);
    lower = std::max(lower, std::abs(a[j] - b[j]));
  }
  return {upper, lower};
}

void class_sums_scalar(const std::int32_t* cls, const double* w, std::size_t count, double* acc,
                       std::size_t classes) {
  std::vector<double> storage(classes * 4, 0.0);
  auto* lanes = reinterpret_cast<double(*)[4]>(storage.data());
  detail::class_sums_lanes(cls, w, 0, count, lanes);
  for (std::size_t c = 0; c < classes; ++c) {
    acc[c] += (lanes[c][0] + lanes[c][1]) + (lanes[c][2] + lanes[c][3]);
  }
}

double ratio_sum_scalar(const double* num, const double* den, std::size_t count) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < count; ++j) lane[j % 4] += num[j] / den[j];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::scalar, "scalar", &landmark_bounds_scalar,
                                 &class_sums_scalar, &ratio_sum_scalar};
  return table;
}

}  // namespace spld::kernels
