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

#include "rtm/distortion.hpp"

#include <span>
#include <string>

#include "rtm/errors.hpp"
#include "rtm/image_io.hpp"

namespace rtm {

SeedSet border_seeds(const BinaryMask& mask) {
  SeedSet seeds;
  const int w = mask.width();
  const int h = mask.height();
  for (int y = 0; y < h; ++y) {
    const bool edge_row = y == 0 || y == h - 1;
    if (edge_row) {
      for (int x = 0; x < w; ++x) {
        if (mask.at(x, y)) seeds.coords.push_back({x, y});
      }
    } else {
      if (mask.at(0, y)) seeds.coords.push_back({0, y});
      if (w > 1 && mask.at(w - 1, y)) seeds.coords.push_back({w - 1, y});
    }
  }
  return seeds;
}

BinaryMask region_grow(const BinaryMask& mask, const SeedSet& seeds,
                       Connectivity connectivity) {
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask out(w, h);
  std::vector<Point> stack;
  stack.reserve(seeds.coords.size());
  for (const Point& s : seeds.coords) {
    if (!mask.in_bounds(s.x, s.y)) {
      throw InvalidArgument("seed (" + std::to_string(s.x) + "," +
                            std::to_string(s.y) + ") is outside the mask");
    }
    if (!mask.at(s.x, s.y)) {
      throw InvalidArgument("seed (" + std::to_string(s.x) + "," +
                            std::to_string(s.y) + ") is not a set pixel");
    }
    if (!out.at(s.x, s.y)) {
      out.set(s.x, s.y, true);
      stack.push_back(s);
    }
  }

  static constexpr Point kNeighbours8[] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                           {1, 0},   {-1, 1}, {0, 1},  {1, 1}};
  static constexpr Point kNeighbours4[] = {{0, -1}, {-1, 0}, {1, 0}, {0, 1}};
  const std::span<const Point> neighbours =
      connectivity == Connectivity::kEight ? std::span<const Point>(kNeighbours8)
                                           : std::span<const Point>(kNeighbours4);

  while (!stack.empty()) {
    const Point p = stack.back();
    stack.pop_back();
    for (const Point& d : neighbours) {
      const int nx = p.x + d.x;
      const int ny = p.y + d.y;
      if (!mask.in_bounds(nx, ny) || !mask.at(nx, ny) || out.at(nx, ny)) continue;
      out.set(nx, ny, true);
      stack.push_back({nx, ny});
    }
  }
  return out;
}

CleanedCrop clean_crop(const Raster& crop, const CleanParams& params,
                       const BoundingBox& provenance) {
  if (crop.size() == 0) throw DegenerateCrop("crop has zero area");
  if (params.erode_radius < 0 || params.erode_radius > 3) {
    throw InvalidArgument("erode radius must be within 0..3");
  }

  const BinaryMask base_copy = binarize(crop, params.threshold);
  const BinaryMask ink = invert(base_copy);
  const SeedSet seeds = border_seeds(ink);
  BinaryMask grown = region_grow(ink, seeds, params.connectivity);
  // 1 on background and interior ink, 0 on border-connected ink.
  const BinaryMask inverted_grown = invert(grown);
  // Background cancels against base_copy, leaving interior ink only.
  BinaryMask final_mask = bitwise_xor(inverted_grown, base_copy);
  BinaryMask glyphs = erode(final_mask, params.erode_radius);

  const std::size_t ink_count = ink.count();
  const std::size_t removed = grown.count();
  CleanedCrop out{std::move(glyphs), std::move(final_mask), std::move(grown),
                  provenance, 0.0, ink_count};
  if (ink_count > 0) {
    out.removed_fraction = static_cast<double>(removed) / static_cast<double>(ink_count);
  }
  return out;
}

Raster to_ocr_raster(const CleanedCrop& cleaned) {
  return mask_to_ink_raster(cleaned.glyphs);
}

void write_debug_triptych(const std::filesystem::path& dir, const std::string& stem,
                          const Raster& crop, const CleanedCrop& cleaned) {
  std::filesystem::create_directories(dir);
  save_png(dir / (stem + "_crop.png"), crop);
  save_png(dir / (stem + "_grown.png"), mask_to_ink_raster(cleaned.grown));
  save_png(dir / (stem + "_glyphs.png"), to_ocr_raster(cleaned));
}

}  // namespace rtm
