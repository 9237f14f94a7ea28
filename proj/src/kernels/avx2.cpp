#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "spld/kernels.hpp"

namespace spld::kernels {

namespace {

// Per-class masked accumulation beats a scatter only while the class count
// stays small; above this the lane scatter from the reference is reused.
constexpr std::size_t kMaskedClassLimit = 32;

std::int32_t hmin_epi32(__m256i v) {
  __m128i m = _mm_min_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  m = _mm_min_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_min_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(m);
}

std::int32_t hmax_epi32(__m256i v) {
  __m128i m = _mm_max_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(m);
}

LandmarkBounds landmark_bounds_avx2(const std::int32_t* a, const std::int32_t* b,
                                    std::size_t len) {
  __m256i vmin = _mm256_set1_epi32(kRowPad * 2);
  __m256i vmax = _mm256_setzero_si256();
  for (std::size_t j = 0; j < len; j += kRowLanes) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + j));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + j));
    vmin = _mm256_min_epi32(vmin, _mm256_add_epi32(va, vb));
    vmax = _mm256_max_epi32(vmax, _mm256_abs_epi32(_mm256_sub_epi32(va, vb)));
  }
  return {hmin_epi32(vmin), hmax_epi32(vmax)};
}

void class_sums_avx2(const std::int32_t* cls, const double* w, std::size_t count, double* acc,
                     std::size_t classes) {
  std::vector<double> storage(classes * 4, 0.0);
  auto* lanes = reinterpret_cast<double(*)[4]>(storage.data());
  const std::size_t body = count / 4 * 4;

  if (classes <= kMaskedClassLimit) {
    __m256d sums[kMaskedClassLimit];
    for (std::size_t c = 0; c < classes; ++c) sums[c] = _mm256_setzero_pd();
    for (std::size_t j = 0; j < body; j += 4) {
      const __m128i c4 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cls + j));
      const __m256d w4 = _mm256_loadu_pd(w + j);
      for (std::size_t c = 0; c < classes; ++c) {
        const __m128i eq = _mm_cmpeq_epi32(c4, _mm_set1_epi32(static_cast<int>(c)));
        const __m256d mask = _mm256_castsi256_pd(_mm256_cvtepi32_epi64(eq));
        sums[c] = _mm256_add_pd(sums[c], _mm256_and_pd(mask, w4));
      }
    }
    for (std::size_t c = 0; c < classes; ++c) _mm256_storeu_pd(lanes[c], sums[c]);
  } else {
    detail::class_sums_lanes(cls, w, 0, body, lanes);
  }
  detail::class_sums_lanes(cls, w, body, count, lanes);
  for (std::size_t c = 0; c < classes; ++c) {
    acc[c] += (lanes[c][0] + lanes[c][1]) + (lanes[c][2] + lanes[c][3]);
  }
}

double ratio_sum_avx2(const double* num, const double* den, std::size_t count) {
  __m256d sum = _mm256_setzero_pd();
  const std::size_t body = count / 4 * 4;
  for (std::size_t j = 0; j < body; j += 4) {
    sum = _mm256_add_pd(sum, _mm256_div_pd(_mm256_loadu_pd(num + j), _mm256_loadu_pd(den + j)));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, sum);
  for (std::size_t j = body; j < count; ++j) lane[j % 4] += num[j] / den[j];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

namespace detail {
const KernelTable& avx2_table() {
  static const KernelTable table{Isa::avx2, "avx2", &landmark_bounds_avx2, &class_sums_avx2,
                                 &ratio_sum_avx2};
  return table;
}
}  // namespace detail

}  // namespace spld::kernels
