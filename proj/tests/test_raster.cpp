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

#include "rtm/errors.hpp"
#include "rtm/raster.hpp"
#include "test_support.hpp"

using namespace rtm;
using rtm::testing::brute_dilate;
using rtm::testing::brute_erode;
using rtm::testing::random_mask;

TEST_CASE("binarize") {
  CHECK(binarize(Raster(4, 3, 255), 128) == BinaryMask(4, 3, true));
  CHECK(binarize(Raster(4, 3, 0), 128) == BinaryMask(4, 3, false));
  const Raster r(3, 1, std::vector<std::uint8_t>{0, 128, 255});
  CHECK(binarize(r, 128) == BinaryMask(3, 1, std::vector<std::uint8_t>{0, 1, 1}));
  CHECK(binarize(r, 0) == BinaryMask(3, 1, true));
  CHECK_THROWS_AS(binarize(r, 256), InvalidArgument);
}

TEST_CASE("binarize matches per-pixel comparison") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> px(0, 255);
  for (int t : {0, 1, 127, 128, 200, 255}) {
    std::vector<std::uint8_t> v(37 * 11);
    for (auto& p : v) p = static_cast<std::uint8_t>(px(rng));
    const Raster r(37, 11, v);
    const BinaryMask m = binarize(r, t);
    for (int y = 0; y < 11; ++y)
      for (int x = 0; x < 37; ++x) REQUIRE(m.at(x, y) == (r.at(x, y) >= t));
  }
}

TEST_CASE("mask rejects values other than 0 and 1") {
  CHECK_THROWS_AS(BinaryMask(2, 1, std::vector<std::uint8_t>{0, 2}), InvalidArgument);
  CHECK_THROWS_AS(BinaryMask(2, 2, std::vector<std::uint8_t>{0, 1}), InvalidArgument);
}

TEST_CASE("invert") {
  CHECK(invert(BinaryMask(3, 3, true)) == BinaryMask(3, 3, false));
  CHECK(invert(BinaryMask(3, 1, std::vector<std::uint8_t>{0, 1, 0})) ==
        BinaryMask(3, 1, std::vector<std::uint8_t>{1, 0, 1}));
  std::mt19937_64 rng(1);
  const auto m = random_mask(rng, 19, 7, 0.4);
  CHECK(invert(invert(m)) == m);
}

TEST_CASE("xor") {
  std::mt19937_64 rng(2);
  const auto m = random_mask(rng, 23, 9, 0.5);
  CHECK(bitwise_xor(m, m) == BinaryMask(23, 9, false));
  CHECK(bitwise_xor(m, BinaryMask(23, 9, false)) == m);
  CHECK(bitwise_xor(BinaryMask(3, 1, std::vector<std::uint8_t>{1, 0, 1}),
                    BinaryMask(3, 1, std::vector<std::uint8_t>{1, 1, 0})) ==
        BinaryMask(3, 1, std::vector<std::uint8_t>{0, 1, 1}));
  CHECK_THROWS_AS(bitwise_xor(BinaryMask(3, 2), BinaryMask(2, 3)), DimensionMismatch);
  const auto a = random_mask(rng, 23, 9, 0.5);
  const auto b = random_mask(rng, 23, 9, 0.5);
  CHECK(bitwise_xor(a, b) == bitwise_xor(b, a));
  CHECK(bitwise_xor(bitwise_xor(a, b), m) == bitwise_xor(a, bitwise_xor(b, m)));
}

TEST_CASE("erode examples") {
  CHECK(erode(BinaryMask(5, 5), 1) == BinaryMask(5, 5));
  BinaryMask dot(5, 5);
  dot.set(2, 2, true);
  CHECK(erode(dot, 1).empty());
  const BinaryMask full(5, 5, true);
  const BinaryMask e = erode(full, 1);
  for (int y = 0; y < 5; ++y)
    for (int x = 0; x < 5; ++x)
      CHECK(e.at(x, y) == (x >= 1 && x <= 3 && y >= 1 && y <= 3));
  CHECK(erode(full, 0) == full);
  CHECK_THROWS_AS(erode(full, -1), InvalidArgument);
}

TEST_CASE("erode and dilate match brute force") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dim(1, 40);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_mask(rng, dim(rng), dim(rng), i % 2 ? 0.85 : 0.3);
    for (int r = 1; r <= 3; ++r) {
      REQUIRE(erode(m, r) == brute_erode(m, r));
      REQUIRE(dilate(m, r) == brute_dilate(m, r));
    }
  }
}

TEST_CASE("erode is anti-extensive and monotone") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_mask(rng, 30, 20, 0.8);
    const auto b = bitwise_and(a, random_mask(rng, 30, 20, 0.9));
    const auto ea = erode(a, 1);
    const auto eb = erode(b, 1);
    REQUIRE(rtm::testing::subset(ea, a));
    REQUIRE(rtm::testing::subset(eb, ea));
  }
}

TEST_CASE("crop") {
  std::vector<std::uint8_t> v(100);
  for (int i = 0; i < 100; ++i) v[i] = static_cast<std::uint8_t>(i);
  const Raster img(10, 10, v);
  CHECK(crop(img, img.bounds()) == img);
  const Raster c = crop(img, {2, 2, 4, 4});
  REQUIRE(c.width() == 3);
  REQUIRE(c.height() == 3);
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) CHECK(c.at(x, y) == (y + 2) * 10 + (x + 2));
  CHECK_THROWS_AS(crop(img, {20, 20, 30, 30}), DegenerateCrop);
  // Partial overlap is clamped.
  const Raster p = crop(img, {8, 8, 12, 15});
  CHECK(p.width() == 2);
  CHECK(p.height() == 2);
  CHECK(p.at(1, 1) == 99);
}

TEST_CASE("nested crops compose") {
  std::mt19937_64 rng(5);
  const auto m = random_mask(rng, 50, 40, 0.5);
  const BinaryMask outer = crop(m, {5, 7, 40, 30});
  CHECK(crop(outer, {3, 2, 10, 9}) == crop(m, {8, 9, 15, 16}));
}

TEST_CASE("checked_box and pad_box") {
  CHECK_THROWS_AS(checked_box(5, 0, 4, 3), InvalidArgument);
  CHECK_THROWS_AS(checked_box(-1, 0, 4, 3), InvalidArgument);
  CHECK(pad_box({2, 2, 5, 5}, 3, 8, 20) == BoundingBox{0, 0, 7, 8});
  CHECK(BoundingBox{0, 0, 9, 9}.area() == 100);
}

TEST_CASE("resize_to") {
  std::mt19937_64 rng(6);
  std::vector<std::uint8_t> v(13 * 7);
  for (auto& p : v) p = static_cast<std::uint8_t>(rng());
  const Raster img(13, 7, v);
  CHECK(resize_to(img, 13, 7) == img);

  const Raster checker(2, 2, std::vector<std::uint8_t>{0, 255, 255, 0});
  const Raster big = resize_to(checker, 4, 4);
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) CHECK(big.at(x, y) == checker.at(x / 2, y / 2));

  const Raster canon = normalize_geometry(Raster(1125, 600));
  CHECK(canon.width() == kCanonicalWidth);
  CHECK(canon.height() == kCanonicalHeight);
  CHECK_THROWS_AS(resize_to(img, 0, 5), InvalidArgument);
}

TEST_CASE("mask rasters") {
  const BinaryMask m(2, 1, std::vector<std::uint8_t>{1, 0});
  CHECK(mask_to_ink_raster(m) == Raster(2, 1, std::vector<std::uint8_t>{0, 255}));
  CHECK(mask_to_raster(m) == Raster(2, 1, std::vector<std::uint8_t>{255, 0}));
  CHECK(invert(binarize(mask_to_ink_raster(m))) == m);
}
