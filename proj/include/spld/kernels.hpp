#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Data-parallel inner loops with a portable scalar reference and ISA-specific
// variants selected once at runtime.
//
// The floating-point kernels fix their summation order to four interleaved
// partial sums (element j feeds lane j % 4, lanes combine as
// (l0 + l1) + (l2 + l3)). The scalar reference follows the same order, so all
// variants produce bit-identical results.

namespace spld::kernels {

enum class Isa { scalar, avx2 };

struct LandmarkBounds {
  std::int32_t upper;  // min_j a[j] + b[j]
  std::int32_t lower;  // max_j |a[j] - b[j]|
};

// Landmark rows are padded to a multiple of this many entries with kRowPad.
// Padding never wins the min and contributes |pad - pad| = 0 to the max.
inline constexpr std::size_t kRowLanes = 8;
inline constexpr std::int32_t kRowPad = 1 << 29;

inline constexpr std::size_t padded_row_length(std::size_t d) {
  return (d + kRowLanes - 1) / kRowLanes * kRowLanes;
}

struct KernelTable {
  Isa isa;
  const char* name;
  // `len` is a multiple of kRowLanes.
  LandmarkBounds (*landmark_bounds)(const std::int32_t* a, const std::int32_t* b, std::size_t len);
  // acc[cls[j]] += w[j] for j < count; every cls[j] must be < classes.
  void (*class_sums)(const std::int32_t* cls, const double* w, std::size_t count, double* acc,
                     std::size_t classes);
  // sum_j num[j] / den[j]
  double (*ratio_sum)(const double* num, const double* den, std::size_t count);
};

const KernelTable& scalar_kernels();

// Null when the AVX2 variant is not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// Best available table. Setting SPLD_KERNELS=scalar in the environment pins
// the scalar reference.
const KernelTable& active_kernels();

inline LandmarkBounds landmark_bounds(std::span<const std::int32_t> a,
                                      std::span<const std::int32_t> b) {
  return active_kernels().landmark_bounds(a.data(), b.data(), a.size());
}

inline void class_sums(std::span<const std::int32_t> cls, std::span<const double> w,
                       std::span<double> acc) {
  active_kernels().class_sums(cls.data(), w.data(), cls.size(), acc.data(), acc.size());
}

inline double ratio_sum(std::span<const double> num, std::span<const double> den) {
  return active_kernels().ratio_sum(num.data(), den.data(), num.size());
}

namespace detail {
// Shared by the ISA variants for their remainder handling.
void class_sums_lanes(const std::int32_t* cls, const double* w, std::size_t begin, std::size_t end,
                      double (*lanes)[4]);
}  // namespace detail

}  // namespace spld::kernels
