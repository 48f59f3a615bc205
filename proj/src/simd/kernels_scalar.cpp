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

#include "kernels_impl.hpp"

namespace rtm::simd {
namespace {

void binarize_scalar(const std::uint8_t* in, std::uint8_t* out, std::size_t n,
                     std::uint8_t threshold) {
  for (std::size_t i = 0; i < n; ++i) out[i] = in[i] >= threshold ? 1 : 0;
}

void invert_scalar(const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = in[i] ^ 1;
}

void xor_scalar(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] ^ b[i];
}

void and_scalar(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
                std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] & b[i];
}

void or_scalar(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
               std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] | b[i];
}

std::size_t count_ones_scalar(const std::uint8_t* in, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += in[i];
  return total;
}

std::size_t count_mismatch_scalar(const std::uint8_t* a, const std::uint8_t* b,
                                  std::size_t n) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += a[i] != b[i];
  return total;
}

void window_and_scalar(const std::uint8_t* padded, std::uint8_t* out,
                       std::size_t n, std::size_t window) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t v = 1;
    for (std::size_t k = 0; k < window; ++k) v &= padded[i + k];
    out[i] = v;
  }
}

void window_or_scalar(const std::uint8_t* padded, std::uint8_t* out,
                      std::size_t n, std::size_t window) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t v = 0;
    for (std::size_t k = 0; k < window; ++k) v |= padded[i + k];
    out[i] = v;
  }
}

}  // namespace

namespace detail {

void binarize_tail(const std::uint8_t* in, std::uint8_t* out, std::size_t n,
                   std::uint8_t threshold) {
  binarize_scalar(in, out, n, threshold);
}
void invert_tail(const std::uint8_t* in, std::uint8_t* out, std::size_t n) {
  invert_scalar(in, out, n);
}
void xor_tail(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
              std::size_t n) {
  xor_scalar(a, b, out, n);
}
void and_tail(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
              std::size_t n) {
  and_scalar(a, b, out, n);
}
void or_tail(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
             std::size_t n) {
  or_scalar(a, b, out, n);
}
std::size_t count_ones_tail(const std::uint8_t* in, std::size_t n) {
  return count_ones_scalar(in, n);
}
std::size_t count_mismatch_tail(const std::uint8_t* a, const std::uint8_t* b,
                                std::size_t n) {
  return count_mismatch_scalar(a, b, n);
}
void window_and_tail(const std::uint8_t* padded, std::uint8_t* out,
                     std::size_t n, std::size_t window) {
  window_and_scalar(padded, out, n, window);
}
void window_or_tail(const std::uint8_t* padded, std::uint8_t* out,
                    std::size_t n, std::size_t window) {
  window_or_scalar(padded, out, n, window);
}

}  // namespace detail

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      Isa::kScalar,      binarize_scalar,       invert_scalar,
      xor_scalar,        and_scalar,            or_scalar,
      count_ones_scalar, count_mismatch_scalar, window_and_scalar,
      window_or_scalar,
  };
  return table;
}

}  // namespace rtm::simd
