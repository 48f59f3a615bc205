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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "rtm/simd/kernels.hpp"

using namespace rtm::simd;

namespace {

std::vector<std::uint8_t> random_bytes(std::mt19937_64& rng, std::size_t n, bool bits) {
  std::vector<std::uint8_t> v(n);
  for (auto& b : v) b = static_cast<std::uint8_t>(bits ? rng() & 1 : rng() & 0xff);
  return v;
}

// Lengths around every vector width plus some long ones.
std::vector<std::size_t> lengths() {
  std::vector<std::size_t> n;
  for (std::size_t i = 0; i <= 70; ++i) n.push_back(i);
  for (std::size_t i : {95, 96, 97, 127, 128, 129, 1000, 4500, 4501}) n.push_back(i);
  return n;
}

std::vector<const KernelTable*> variants() {
  std::vector<const KernelTable*> out;
  for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
    if (const KernelTable* k = kernels_for(isa)) out.push_back(k);
  }
  return out;
}

}  // namespace

TEST_CASE("scalar table is always available") {
  CHECK(isa_available(Isa::kScalar));
  CHECK(kernels_for(Isa::kScalar) == &scalar_kernels());
  CHECK(isa_name(active_kernels().isa).size() > 0);
  MESSAGE("active kernels: " << isa_name(active_kernels().isa));
}

TEST_CASE("scalar reference semantics") {
  const KernelTable& s = scalar_kernels();
  const std::uint8_t in[5] = {0, 127, 128, 200, 255};
  std::uint8_t out[5];
  s.binarize(in, out, 5, 128);
  CHECK(std::vector<std::uint8_t>(out, out + 5) == std::vector<std::uint8_t>{0, 0, 1, 1, 1});
  const std::uint8_t padded[7] = {1, 1, 1, 0, 1, 1, 1};
  std::uint8_t w[5];
  s.window_and(padded, w, 5, 3);
  CHECK(std::vector<std::uint8_t>(w, w + 5) == std::vector<std::uint8_t>{1, 0, 0, 0, 1});
  s.window_or(padded, w, 5, 3);
  CHECK(std::vector<std::uint8_t>(w, w + 5) == std::vector<std::uint8_t>{1, 1, 1, 1, 1});
  const std::uint8_t a[4] = {1, 0, 1, 1};
  const std::uint8_t b[4] = {1, 1, 0, 1};
  CHECK(s.count_ones(a, 4) == 3);
  CHECK(s.count_mismatch(a, b, 4) == 2);
}

TEST_CASE("vector variants equal scalar") {
  const KernelTable& s = scalar_kernels();
  const auto tables = variants();
  if (tables.empty()) MESSAGE("no vector variant on this CPU; only scalar checked");
  std::mt19937_64 rng(11);
  for (const KernelTable* v : tables) {
    CAPTURE(isa_name(v->isa));
    for (std::size_t n : lengths()) {
      CAPTURE(n);
      const auto gray = random_bytes(rng, n, false);
      const auto a = random_bytes(rng, n, true);
      const auto b = random_bytes(rng, n, true);
      std::vector<std::uint8_t> x(n), y(n);

      for (int t : {0, 1, 128, 255}) {
        s.binarize(gray.data(), x.data(), n, static_cast<std::uint8_t>(t));
        v->binarize(gray.data(), y.data(), n, static_cast<std::uint8_t>(t));
        REQUIRE(x == y);
      }
      s.invert_bits(a.data(), x.data(), n);
      v->invert_bits(a.data(), y.data(), n);
      REQUIRE(x == y);
      s.xor_bits(a.data(), b.data(), x.data(), n);
      v->xor_bits(a.data(), b.data(), y.data(), n);
      REQUIRE(x == y);
      s.and_bits(a.data(), b.data(), x.data(), n);
      v->and_bits(a.data(), b.data(), y.data(), n);
      REQUIRE(x == y);
      s.or_bits(a.data(), b.data(), x.data(), n);
      v->or_bits(a.data(), b.data(), y.data(), n);
      REQUIRE(x == y);
      REQUIRE(s.count_ones(a.data(), n) == v->count_ones(a.data(), n));
      REQUIRE(s.count_mismatch(a.data(), b.data(), n) ==
              v->count_mismatch(a.data(), b.data(), n));

      for (std::size_t window : {1, 3, 5, 7}) {
        // Mostly-set input so AND windows are not trivially zero.
        auto padded = random_bytes(rng, n + window - 1, true);
        for (auto& p : padded) p = (rng() % 8) ? 1 : 0;
        s.window_and(padded.data(), x.data(), n, window);
        v->window_and(padded.data(), y.data(), n, window);
        REQUIRE(x == y);
        s.window_or(padded.data(), x.data(), n, window);
        v->window_or(padded.data(), y.data(), n, window);
        REQUIRE(x == y);
      }
    }
  }
}
