// Copyright 2026 The rtmdigit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2. Only reached through the dispatcher after a CPUID
// check, so nothing here may run on a CPU without AVX2.

#include <immintrin.h>

#include "kernels_impl.hpp"

namespace rtm::simd {
namespace {

constexpr std::size_t kLanes = 32;

inline __m256i load(const std::uint8_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}
inline void store(std::uint8_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

inline std::size_t horizontal_sum(__m256i sad) {
  // _mm256_sad_epu8 leaves four 64-bit partial sums.
  __m128i lo = _mm256_castsi256_si128(sad);
  __m128i hi = _mm256_extracti128_si256(sad, 1);
  __m128i sum = _mm_add_epi64(lo, hi);
  return static_cast<std::size_t>(_mm_cvtsi128_si64(sum)) +
         static_cast<std::size_t>(_mm_extract_epi64(sum, 1));
}

void binarize_avx2(const std::uint8_t* in, std::uint8_t* out, std::size_t n,
                   std::uint8_t threshold) {
  const __m256i t = _mm256_set1_epi8(static_cast<char>(threshold));
  const __m256i one = _mm256_set1_epi8(1);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i x = load(in + i);
    // unsigned x >= t  <=>  max(x, t) == x
    __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(x, t), x);
    store(out + i, _mm256_and_si256(ge, one));
  }
  detail::binarize_tail(in + i, out + i, n - i, threshold);
}

void invert_avx2(const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
  const __m256i one = _mm256_set1_epi8(1);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    store(out + i, _mm256_xor_si256(load(in + i), one));
  }
  detail::invert_tail(in + i, out + i, n - i);
}

void xor_avx2(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
              std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    store(out + i, _mm256_xor_si256(load(a + i), load(b + i)));
  }
  detail::xor_tail(a + i, b + i, out + i, n - i);
}

void and_avx2(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
              std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    store(out + i, _mm256_and_si256(load(a + i), load(b + i)));
  }
  detail::and_tail(a + i, b + i, out + i, n - i);
}

void or_avx2(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
             std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    store(out + i, _mm256_or_si256(load(a + i), load(b + i)));
  }
  detail::or_tail(a + i, b + i, out + i, n - i);
}

std::size_t count_ones_avx2(const std::uint8_t* in, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(load(in + i), zero));
  }
  return horizontal_sum(acc) + detail::count_ones_tail(in + i, n - i);
}

std::size_t count_mismatch_avx2(const std::uint8_t* a, const std::uint8_t* b,
                                std::size_t n) {
  // Mask bytes are 0/1, so |a - b| is the mismatch indicator.
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(load(a + i), load(b + i)));
  }
  return horizontal_sum(acc) + detail::count_mismatch_tail(a + i, b + i, n - i);
}

void window_and_avx2(const std::uint8_t* padded, std::uint8_t* out,
                     std::size_t n, std::size_t window) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i v = load(padded + i);
    for (std::size_t k = 1; k < window; ++k) {
      v = _mm256_and_si256(v, load(padded + i + k));
    }
    store(out + i, v);
  }
  detail::window_and_tail(padded + i, out + i, n - i, window);
}

void window_or_avx2(const std::uint8_t* padded, std::uint8_t* out,
                    std::size_t n, std::size_t window) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256i v = load(padded + i);
    for (std::size_t k = 1; k < window; ++k) {
      v = _mm256_or_si256(v, load(padded + i + k));
    }
    store(out + i, v);
  }
  detail::window_or_tail(padded + i, out + i, n - i, window);
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{
      Isa::kAvx2,      binarize_avx2,       invert_avx2,
      xor_avx2,        and_avx2,            or_avx2,
      count_ones_avx2, count_mismatch_avx2, window_and_avx2,
      window_or_avx2,
  };
  return table;
}

}  // namespace rtm::simd
