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

// Removal of track strokes and symbol fragments from a detection crop.
//
// Polarity at the boundaries:
//   input crop   : Raster, 0 = ink, 255 = background
//   base_copy    : binarize(crop), 1 = background
//   ink          : invert(base_copy), 1 = ink
//   grown        : ink pixels connected to the crop border, 1 = distortion
//   glyphs       : 1 = retained text ink (white-glyph polarity)
// to_ocr_raster() converts glyphs back to dark text on light background.

#include <filesystem>
#include <string>
#include <vector>

#include "rtm/raster.hpp"

namespace rtm {

enum class Connectivity { kFour = 4, kEight = 8 };

struct Point {
  int x = 0;
  int y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct SeedSet {
  std::vector<Point> coords;
};

// Set pixels on the outermost rows and columns, row-major, each once.
SeedSet border_seeds(const BinaryMask& mask);

// Pixels of `mask` reachable from any seed through set pixels. Iterative;
// safe for full-size images. Throws InvalidArgument if a seed is out of
// bounds or sits on a 0 pixel.
BinaryMask region_grow(const BinaryMask& mask, const SeedSet& seeds,
                       Connectivity connectivity = Connectivity::kEight);

struct CleanParams {
  int threshold = kDefaultThreshold;
  int erode_radius = 1;  // 0 disables the final erosion
  Connectivity connectivity = Connectivity::kEight;
};

struct CleanedCrop {
  BinaryMask glyphs;       // after erosion
  BinaryMask pre_erosion;  // XOR result
  BinaryMask grown;        // border-connected ink
  BoundingBox provenance;
  double removed_fraction = 0.0;
  std::size_t ink_pixels = 0;

  bool all_ink_removed() const { return ink_pixels > 0 && removed_fraction >= 1.0; }
};

// Throws DegenerateCrop for an empty crop, InvalidArgument for params out
// of range.
CleanedCrop clean_crop(const Raster& crop, const CleanParams& params,
                       const BoundingBox& provenance);
inline CleanedCrop clean_crop(const Raster& crop, const CleanParams& params = {}) {
  return clean_crop(crop, params, crop.bounds());
}

// Glyphs as dark-on-light raster for OCR.
Raster to_ocr_raster(const CleanedCrop& cleaned);

// Writes <stem>_crop.png, <stem>_grown.png and <stem>_glyphs.png.
void write_debug_triptych(const std::filesystem::path& dir, const std::string& stem,
                          const Raster& crop, const CleanedCrop& cleaned);

}  // namespace rtm
