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

// Byte-per-pixel kernels used by the raster operators. Every ISA variant
// must produce bit-identical output to the scalar reference; the scalar
// table is the definition.
//
// Mask inputs hold only 0 or 1 per byte. Kernels do not check this.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace rtm::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  // out[i] = in[i] >= threshold ? 1 : 0
  void (*binarize)(const std::uint8_t* in, std::uint8_t* out, std::size_t n,
                   std::uint8_t threshold);
  // out[i] = in[i] ^ 1
  void (*invert_bits)(const std::uint8_t* in, std::uint8_t* out, std::size_t n);
  void (*xor_bits)(const std::uint8_t* a, const std::uint8_t* b,
                   std::uint8_t* out, std::size_t n);
  void (*and_bits)(const std::uint8_t* a, const std::uint8_t* b,
                   std::uint8_t* out, std::size_t n);
  void (*or_bits)(const std::uint8_t* a, const std::uint8_t* b,
                  std::uint8_t* out, std::size_t n);
  std::size_t (*count_ones)(const std::uint8_t* in, std::size_t n);
  // Number of positions where a and b differ.
  std::size_t (*count_mismatch)(const std::uint8_t* a, const std::uint8_t* b,
                                std::size_t n);
  // out[i] = AND (resp. OR) of padded[i .. i+window). `padded` holds
  // n + window - 1 readable bytes.
  void (*window_and)(const std::uint8_t* padded, std::uint8_t* out,
                     std::size_t n, std::size_t window);
  void (*window_or)(const std::uint8_t* padded, std::uint8_t* out,
                    std::size_t n, std::size_t window);
};

const KernelTable& scalar_kernels();

// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

// nullptr when !isa_available(isa).
const KernelTable* kernels_for(Isa isa);

// Best available table, chosen once on first use. The RTM_SIMD environment
// variable (scalar | avx2 | neon) forces a variant when it is available.
const KernelTable& active_kernels();

}  // namespace rtm::simd
