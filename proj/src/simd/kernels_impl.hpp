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

#pragma once

// Shared between the ISA translation units. Not part of the public API.

#include "rtm/simd/kernels.hpp"

namespace rtm::simd {
namespace detail {

// Scalar bodies reused for loop remainders.
void binarize_tail(const std::uint8_t* in, std::uint8_t* out, std::size_t n,
                   std::uint8_t threshold);
void invert_tail(const std::uint8_t* in, std::uint8_t* out, std::size_t n);
void xor_tail(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
              std::size_t n);
void and_tail(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
              std::size_t n);
void or_tail(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out,
             std::size_t n);
std::size_t count_ones_tail(const std::uint8_t* in, std::size_t n);
std::size_t count_mismatch_tail(const std::uint8_t* a, const std::uint8_t* b,
                                std::size_t n);
void window_and_tail(const std::uint8_t* padded, std::uint8_t* out,
                     std::size_t n, std::size_t window);
void window_or_tail(const std::uint8_t* padded, std::uint8_t* out,
                    std::size_t n, std::size_t window);

}  // namespace detail

// Defined only in translation units compiled for the matching ISA.
const KernelTable& avx2_kernels();
const KernelTable& neon_kernels();

}  // namespace rtm::simd
