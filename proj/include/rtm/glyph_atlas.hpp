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

// Monospaced bitmap font shared by the synthetic generator and the
// template OCR engine. Each glyph is a 5x7 design scaled by kScale, so every
// ink pixel belongs to a fully inked kScale x kScale block. Opening such a
// glyph with a square of radius <= (kScale-1)/2 returns it unchanged, which
// is what lets the template engine undo the pipeline's erosion exactly.

#include <string>
#include <string_view>
#include <vector>

#include "rtm/raster.hpp"

namespace rtm {

class GlyphAtlas {
 public:
  static constexpr int kDesignWidth = 5;
  static constexpr int kDesignHeight = 7;
  static constexpr int kScale = 3;
  static constexpr int kCellWidth = kDesignWidth * kScale;
  static constexpr int kCellHeight = kDesignHeight * kScale;
  static constexpr int kSpacing = kScale;  // blank columns between cells
  static constexpr int kPitch = kCellWidth + kSpacing;
  static constexpr char kUnknown = '?';

  GlyphAtlas();

  // "0123456789.-ABCDEFGHIJKLMNOPQRSTUVWXYZ ?", atlas order.
  const std::string& characters() const { return chars_; }
  bool contains(char c) const;
  // kCellWidth x kCellHeight, 1 = ink. Throws InvalidArgument for
  // characters outside the atlas.
  const BinaryMask& glyph(char c) const;

  static int text_width(std::string_view text);
  // One line of text; 1 = ink, size text_width x kCellHeight.
  BinaryMask render(std::string_view text) const;
  // Paints ink into `img` with the cell origin of the first character at
  // (x, y). Throws InvalidArgument if the text does not fit.
  void draw(Raster& img, std::string_view text, int x, int y) const;

 private:
  std::string chars_;
  std::vector<BinaryMask> glyphs_;
};

const GlyphAtlas& glyph_atlas();

}  // namespace rtm
