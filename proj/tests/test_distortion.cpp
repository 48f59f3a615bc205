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

#include "rtm/distortion.hpp"
#include "rtm/errors.hpp"
#include "rtm/glyph_atlas.hpp"
#include "rtm/image_io.hpp"
#include "test_support.hpp"

using namespace rtm;
using rtm::testing::ink_raster;
using rtm::testing::interior_components;
using rtm::testing::mask_from_rows;
using rtm::testing::random_mask;
using rtm::testing::subset;

TEST_CASE("border_seeds") {
  CHECK(border_seeds(BinaryMask(4, 4)).coords.empty());
  const auto full = border_seeds(BinaryMask(3, 3, true));
  CHECK(full.coords.size() == 8);
  for (const Point& p : full.coords) CHECK_FALSE((p.x == 1 && p.y == 1));
  BinaryMask centre(3, 3);
  centre.set(1, 1, true);
  CHECK(border_seeds(centre).coords.empty());
  // Degenerate shapes list each pixel once.
  CHECK(border_seeds(BinaryMask(1, 1, true)).coords.size() == 1);
  CHECK(border_seeds(BinaryMask(1, 5, true)).coords.size() == 5);
  CHECK(border_seeds(BinaryMask(6, 1, true)).coords.size() == 6);
}

TEST_CASE("region_grow examples") {
  const BinaryMask m = mask_from_rows({
      ".....",
      "#####",
      ".....",
  });
  CHECK(region_grow(m, {}) == BinaryMask(5, 3));
  CHECK(region_grow(m, SeedSet{{{0, 1}, {4, 1}}}) == m);

  // L-shaped stroke from the border plus an isolated interior blob.
  const BinaryMask l = mask_from_rows({
      "#.........",
      "#.........",
      "#...###...",
      "#...###...",
      "#...###...",
      "#.........",
      "###.......",
  });
  const BinaryMask stroke = mask_from_rows({
      "#.........",
      "#.........",
      "#.........",
      "#.........",
      "#.........",
      "#.........",
      "###.......",
  });
  CHECK(region_grow(l, border_seeds(l)) == stroke);
  CHECK(region_grow(l, border_seeds(l), Connectivity::kFour) == stroke);

  // Once the stroke touches the blob they grow together.
  const BinaryMask joined = mask_from_rows({
      "#.........",
      "#.........",
      "#...###...",
      "#...###...",
      "#...###...",
      "#####.....",
      "..........",
  });
  CHECK(region_grow(joined, border_seeds(joined), Connectivity::kFour) == joined);
}

TEST_CASE("connectivity decides diagonal steps") {
  const BinaryMask m = mask_from_rows({
      "#....",
      ".#...",
      "..#..",
      ".....",
  });
  CHECK(region_grow(m, SeedSet{{{0, 0}}}, Connectivity::kEight) == m);
  BinaryMask only(5, 4);
  only.set(0, 0, true);
  CHECK(region_grow(m, SeedSet{{{0, 0}}}, Connectivity::kFour) == only);
}

TEST_CASE("region_grow rejects bad seeds") {
  const BinaryMask m = mask_from_rows({"#.", ".."});
  CHECK_THROWS_AS(region_grow(m, SeedSet{{{1, 0}}}), InvalidArgument);
  CHECK_THROWS_AS(region_grow(m, SeedSet{{{2, 0}}}), InvalidArgument);
  CHECK_THROWS_AS(region_grow(m, SeedSet{{{0, -1}}}), InvalidArgument);
}

TEST_CASE("region_grow output is a fixed point") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const auto m = random_mask(rng, 1 + static_cast<int>(rng() % 40),
                               1 + static_cast<int>(rng() % 40), 0.5);
    const auto conn = i % 2 ? Connectivity::kFour : Connectivity::kEight;
    const BinaryMask g = region_grow(m, border_seeds(m), conn);
    SeedSet all;
    for (int y = 0; y < g.height(); ++y)
      for (int x = 0; x < g.width(); ++x)
        if (g.at(x, y)) all.coords.push_back({x, y});
    REQUIRE(region_grow(m, all, conn) == g);
    REQUIRE(region_grow(g, border_seeds(g), conn) == g);
  }
}

TEST_CASE("clean_crop examples") {
  const auto blank = clean_crop(Raster(20, 10));
  CHECK(blank.glyphs.empty());
  CHECK(blank.removed_fraction == 0.0);
  CHECK_FALSE(blank.all_ink_removed());

  Raster line(20, 10);
  for (int x = 0; x < 20; ++x) line.set(x, 5, 0);
  const auto cleaned = clean_crop(line);
  CHECK(cleaned.glyphs.empty());
  CHECK(cleaned.removed_fraction == 1.0);
  CHECK(cleaned.all_ink_removed());

  CHECK_THROWS_AS(clean_crop(line, CleanParams{128, 4, Connectivity::kEight}), InvalidArgument);
  CHECK_THROWS_AS(clean_crop(line, CleanParams{128, -1, Connectivity::kEight}), InvalidArgument);
}

TEST_CASE("SW-3 with a border-crossing line keeps exactly the text ink") {
  const GlyphAtlas& atlas = glyph_atlas();
  const BinaryMask text = atlas.render("SW-3");
  const int m = 6;
  const int w = text.width() + 2 * m;
  const int h = text.height() + 2 * m;
  BinaryMask expected(w, h);
  for (int y = 0; y < text.height(); ++y)
    for (int x = 0; x < text.width(); ++x)
      if (text.at(x, y)) expected.set(x + m, y + m, true);

  Raster crop = ink_raster(expected);
  // Line enters at the left, bends down through the margin and leaves at the bottom.
  for (int x = 0; x <= 3; ++x) crop.set(x, 2, 0);
  for (int y = 2; y < h; ++y) crop.set(3, y, 0);
  for (int x = 0; x < w; ++x) crop.set(x, h - 2, 0);

  for (Connectivity conn : {Connectivity::kFour, Connectivity::kEight}) {
    const auto c = clean_crop(crop, CleanParams{128, 1, conn});
    CHECK(c.pre_erosion == expected);
    CHECK(c.glyphs == erode(expected, 1));
    CHECK(c.ink_pixels == expected.count() + c.grown.count());
    CHECK(c.removed_fraction > 0.0);
    CHECK(c.removed_fraction < 1.0);
  }
  const auto raw = clean_crop(crop, CleanParams{128, 0, Connectivity::kEight});
  CHECK(raw.glyphs == expected);
  CHECK(to_ocr_raster(raw) == ink_raster(expected));
}

TEST_CASE("glyph touching the border is removed entirely") {
  const BinaryMask text = glyph_atlas().render("7");
  // Flush against the left edge.
  Raster crop(text.width() + 4, text.height() + 4);
  for (int y = 0; y < text.height(); ++y)
    for (int x = 0; x < text.width(); ++x)
      if (text.at(x, y)) crop.set(x, y + 2, 0);
  const auto c = clean_crop(crop, CleanParams{128, 0, Connectivity::kEight});
  CHECK(c.glyphs.empty());
  CHECK(c.all_ink_removed());
}

TEST_CASE("glyph set equals ink minus border components") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 400; ++i) {
    const int w = 1 + static_cast<int>(rng() % 64);
    const int h = 1 + static_cast<int>(rng() % 64);
    const auto ink = random_mask(rng, w, h, 0.15 + 0.5 * (i % 5) / 4.0);
    const bool eight = i % 2 == 0;
    const auto c = clean_crop(ink_raster(ink), CleanParams{128, 1, eight ? Connectivity::kEight
                                                                        : Connectivity::kFour});
    REQUIRE(c.pre_erosion == interior_components(ink, eight));
    REQUIRE(subset(c.pre_erosion, ink));
    REQUIRE(subset(c.glyphs, c.pre_erosion));
  }
}

TEST_CASE("threshold decides what counts as ink") {
  Raster crop(9, 9);
  crop.set(4, 4, 100);
  CHECK(clean_crop(crop, CleanParams{128, 0, Connectivity::kEight}).glyphs.count() == 1);
  CHECK(clean_crop(crop, CleanParams{100, 0, Connectivity::kEight}).glyphs.count() == 0);
}

TEST_CASE("full-size crop does not exhaust the stack") {
  const Raster all_ink(kCanonicalWidth, kCanonicalHeight, 0);
  const auto c = clean_crop(all_ink);
  CHECK(c.glyphs.empty());
  CHECK(c.removed_fraction == 1.0);
}

TEST_CASE("debug triptych") {
  rtm::testing::TempDir dir("dbg");
  Raster crop(12, 12);
  crop.set(5, 5, 0);
  const auto c = clean_crop(crop, CleanParams{128, 0, Connectivity::kEight});
  write_debug_triptych(dir.path() / "sub", "img_3", crop, c);
  CHECK(load_image(dir.path() / "sub" / "img_3_crop.png") == crop);
  CHECK(load_image(dir.path() / "sub" / "img_3_glyphs.png") == crop);
  CHECK(load_image(dir.path() / "sub" / "img_3_grown.png") == Raster(12, 12));
}
