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

#include "rtm/glyph_atlas.hpp"

#include <array>
#include <string>

#include "rtm/errors.hpp"

namespace rtm {
namespace {

struct GlyphDesign {
  char ch;
  std::array<std::string_view, GlyphAtlas::kDesignHeight> rows;
};

// clang-format off
constexpr GlyphDesign kDesigns[] = {
    {'0', {".###.", "#...#", "#..##", "#.#.#", "##..#", "#...#", ".###."}},
    {'1', {"..#..", ".##..", "..#..", "..#..", "..#..", "..#..", ".###."}},
    {'2', {".###.", "#...#", "....#", "...#.", "..#..", ".#...", "#####"}},
    {'3', {"#####", "...#.", "..#..", "...#.", "....#", "#...#", ".###."}},
    {'4', {"...#.", "..##.", ".#.#.", "#..#.", "#####", "...#.", "...#."}},
    {'5', {"#####", "#....", "####.", "....#", "....#", "#...#", ".###."}},
    {'6', {"..##.", ".#...", "#....", "####.", "#...#", "#...#", ".###."}},
    {'7', {"#####", "....#", "...#.", "..#..", ".#...", ".#...", ".#..."}},
    {'8', {".###.", "#...#", "#...#", ".###.", "#...#", "#...#", ".###."}},
    {'9', {".###.", "#...#", "#...#", ".####", "....#", "...#.", ".##.."}},
    {'.', {".....", ".....", ".....", ".....", ".....", ".##..", ".##.."}},
    {'-', {".....", ".....", ".....", "#####", ".....", ".....", "....."}},
    {'A', {".###.", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"}},
    {'B', {"####.", "#...#", "#...#", "####.", "#...#", "#...#", "####."}},
    {'C', {".###.", "#...#", "#....", "#....", "#....", "#...#", ".###."}},
    {'D', {"####.", "#...#", "#...#", "#...#", "#...#", "#...#", "####."}},
    {'E', {"#####", "#....", "#....", "####.", "#....", "#....", "#####"}},
    {'F', {"#####", "#....", "#....", "####.", "#....", "#....", "#...."}},
    {'G', {".###.", "#...#", "#....", "#.###", "#...#", "#...#", ".####"}},
    {'H', {"#...#", "#...#", "#...#", "#####", "#...#", "#...#", "#...#"}},
    {'I', {".###.", "..#..", "..#..", "..#..", "..#..", "..#..", ".###."}},
    {'J', {"..###", "...#.", "...#.", "...#.", "...#.", "#..#.", ".##.."}},
    {'K', {"#...#", "#..#.", "#.#..", "##...", "#.#..", "#..#.", "#...#"}},
    {'L', {"#....", "#....", "#....", "#....", "#....", "#....", "#####"}},
    {'M', {"#...#", "##.##", "#.#.#", "#.#.#", "#...#", "#...#", "#...#"}},
    {'N', {"#...#", "#...#", "##..#", "#.#.#", "#..##", "#...#", "#...#"}},
    {'O', {".###.", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."}},
    {'P', {"####.", "#...#", "#...#", "####.", "#....", "#....", "#...."}},
    {'Q', {".###.", "#...#", "#...#", "#...#", "#.#.#", "#..#.", ".##.#"}},
    {'R', {"####.", "#...#", "#...#", "####.", "#.#..", "#..#.", "#...#"}},
    {'S', {".####", "#....", "#....", ".###.", "....#", "....#", "####."}},
    {'T', {"#####", "..#..", "..#..", "..#..", "..#..", "..#..", "..#.."}},
    {'U', {"#...#", "#...#", "#...#", "#...#", "#...#", "#...#", ".###."}},
    {'V', {"#...#", "#...#", "#...#", "#...#", "#...#", ".#.#.", "..#.."}},
    {'W', {"#...#", "#...#", "#...#", "#.#.#", "#.#.#", "#.#.#", ".#.#."}},
    {'X', {"#...#", "#...#", ".#.#.", "..#..", ".#.#.", "#...#", "#...#"}},
    {'Y', {"#...#", "#...#", ".#.#.", "..#..", "..#..", "..#..", "..#.."}},
    {'Z', {"#####", "....#", "...#.", "..#..", ".#...", "#....", "#####"}},
    {' ', {".....", ".....", ".....", ".....", ".....", ".....", "....."}},
    {'?', {".###.", "#...#", "....#", "...#.", "..#..", ".....", "..#.."}},
};
// clang-format on

BinaryMask scale_design(const GlyphDesign& d) {
  constexpr int s = GlyphAtlas::kScale;
  BinaryMask m(GlyphAtlas::kCellWidth, GlyphAtlas::kCellHeight);
  for (int r = 0; r < GlyphAtlas::kDesignHeight; ++r) {
    for (int c = 0; c < GlyphAtlas::kDesignWidth; ++c) {
      if (d.rows[r][c] != '#') continue;
      for (int dy = 0; dy < s; ++dy) {
        for (int dx = 0; dx < s; ++dx) m.set(c * s + dx, r * s + dy, true);
      }
    }
  }
  return m;
}

}  // namespace

GlyphAtlas::GlyphAtlas() {
  for (const GlyphDesign& d : kDesigns) {
    chars_.push_back(d.ch);
    glyphs_.push_back(scale_design(d));
  }
}

bool GlyphAtlas::contains(char c) const { return chars_.find(c) != std::string::npos; }

const BinaryMask& GlyphAtlas::glyph(char c) const {
  const auto pos = chars_.find(c);
  if (pos == std::string::npos) {
    throw InvalidArgument(std::string("character '") + c + "' is not in the glyph atlas");
  }
  return glyphs_[pos];
}

int GlyphAtlas::text_width(std::string_view text) {
  if (text.empty()) return 0;
  return static_cast<int>(text.size()) * kPitch - kSpacing;
}

BinaryMask GlyphAtlas::render(std::string_view text) const {
  if (text.empty()) throw InvalidArgument("cannot render empty text");
  BinaryMask out(text_width(text), kCellHeight);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const BinaryMask& g = glyph(text[i]);
    const int x0 = static_cast<int>(i) * kPitch;
    for (int y = 0; y < kCellHeight; ++y) {
      for (int x = 0; x < kCellWidth; ++x) {
        if (g.at(x, y)) out.set(x0 + x, y, true);
      }
    }
  }
  return out;
}

void GlyphAtlas::draw(Raster& img, std::string_view text, int x, int y) const {
  if (text.empty()) return;
  const BinaryMask m = render(text);
  if (x < 0 || y < 0 || x + m.width() > img.width() || y + m.height() > img.height()) {
    throw InvalidArgument("text '" + std::string(text) + "' does not fit the image");
  }
  for (int yy = 0; yy < m.height(); ++yy) {
    for (int xx = 0; xx < m.width(); ++xx) {
      if (m.at(xx, yy)) img.set(x + xx, y + yy, kInk);
    }
  }
}

const GlyphAtlas& glyph_atlas() {
  static const GlyphAtlas atlas;
  return atlas;
}

}  // namespace rtm
