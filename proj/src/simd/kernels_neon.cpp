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

// AdvSIMD is mandatory on AArch64, so this table needs no runtime check.

#include <arm_neon.h>

#include "kernels_impl.hpp"

namespace rtm::simd {
namespace {

constexpr std::size_t kLanes = 16;

void binarize_neon(const std::uint8_t* in, std::uint8_t* out, std::size_t n,
                   std::uint8_t threshold) {
  const uint8x16_t t = vdupq_n_u8(threshold);
  const uint8x16_t one = vdupq_n_u8(1);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    vst1q_u8(out + i, vandq_u8(vcgeq_u8(vld1q_u8(in + i), t), one));
  }
  detail::binarize_tail(in + i, out + i, n - i, threshold);
}

void invert_neon(const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
  const uint8x16_t one = vdupq_n_u8(1);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    vst1q_u8(out + i, veorq_u8(vld1q_u8(in + i), one));
  }
  detail::invert_tail(in + i, out + i, n - i);
}

void xor_neon(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
              std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    vst1q_u8(out + i, veorq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
  }
  detail::xor_tail(a + i, b + i, out + i, n - i);
}

void and_neon(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
              std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    vst1q_u8(out + i, vandq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
  }
  detail::and_tail(a + i, b + i, out + i, n - i);
}

void or_neon(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
             std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    vst1q_u8(out + i, vorrq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
  }
  detail::or_tail(a + i, b + i, out + i, n - i);
}

std::size_t count_ones_neon(const std::uint8_t* in, std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) total += vaddlvq_u8(vld1q_u8(in + i));
  return total + detail::count_ones_tail(in + i, n - i);
}

std::size_t count_mismatch_neon(const std::uint8_t* a, const std::uint8_t* b,
                                std::size_t n) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    total += vaddlvq_u8(vabdq_u8(vld1q_u8(a + i), vld1q_u8(b + i)));
  }
  return total + detail::count_mismatch_tail(a + i, b + i, n - i);
}

void window_and_neon(const std::uint8_t* padded, std::uint8_t* out,
                     std::size_t n, std::size_t window) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    uint8x16_t v = vld1q_u8(padded + i);
    for (std::size_t k = 1; k < window; ++k) {
      v = vandq_u8(v, vld1q_u8(padded + i + k));
    }
    vst1q_u8(out + i, v);
  }
  detail::window_and_tail(padded + i, out + i, n - i, window);
}

void window_or_neon(const std::uint8_t* padded, std::uint8_t* out,
                    std::size_t n, std::size_t window) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    uint8x16_t v = vld1q_u8(padded + i);
    for (std::size_t k = 1; k < window; ++k) {
      v = vorrq_u8(v, vld1q_u8(padded + i + k));
    }
    vst1q_u8(out + i, v);
  }
  detail::window_or_tail(padded + i, out + i, n - i, window);
}

}  // namespace

const KernelTable& neon_kernels() {
  static const KernelTable table{
      Isa::kNeon,      binarize_neon,       invert_neon,
      xor_neon,        and_neon,            or_neon,
      count_ones_neon, count_mismatch_neon, window_and_neon,
      window_or_neon,
  };
  return table;
}

}  // namespace rtm::simd
