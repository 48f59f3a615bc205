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

// Deterministic synthetic map pages with exact ground truth.
//
// Layout: milepost labels sit in a band along the top; component labels
// are stacked in rows below, each close to the milepost it belongs to.
// Every label box keeps an 8 px blank margin around its text. Track lines
// and stroke fragments are drawn only inside that margin (or outside the
// box) and always cross the box border, so cleaning a crop recovers the
// text ink exactly. `hard` mode adds strokes through the text itself.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "rtm/association.hpp"
#include "rtm/detection.hpp"
#include "rtm/evalkit.hpp"
#include "rtm/raster.hpp"

namespace rtm {

inline constexpr int kQuarterWidth = kCanonicalWidth / 4;
inline constexpr int kQuarterHeight = kCanonicalHeight / 4;

struct ComponentSpec {
  ComponentClass cls = ComponentClass::kSignal;
  int milepost_index = 0;  // ignored when the layout has no mileposts
  std::string label;
};

struct LayoutSpec {
  std::uint64_t seed = 0;
  std::string image_id;  // defaults to synth_<seed>
  int image_width = kQuarterWidth;
  int image_height = kQuarterHeight;
  int milepost_count = 0;
  std::vector<std::string> milepost_labels;  // generated when empty
  std::vector<ComponentSpec> components;
  int track_lines = 0;
  double distortion_density = 0.5;  // chance of each extra stroke per box
  bool hard = false;
};

struct GroundTruthBundle {
  Raster image;
  DetectionSet detections;  // mileposts first, then components; score 1
  GroundTruthSet gt;
  std::vector<ComponentRecord> expected_records;
  // Parallel to detections.detections: crop-sized text ink and label text.
  std::vector<BinaryMask> glyph_masks;
  std::vector<std::string> texts;
};

// Throws InvalidArgument for labels outside their class charset and
// UnsatisfiableLayout when the page cannot hold the requested content.
GroundTruthBundle generate(const LayoutSpec& spec);

// 2-4 mileposts, 4-8 components with random labels, 1-3 track lines.
LayoutSpec random_layout(std::uint64_t seed, int image_width = kQuarterWidth,
                         int image_height = kQuarterHeight, bool hard = false);

// <dir>/<id>.png, <dir>/<id>.json, <dir>/gt/<id>.json, <dir>/expected/<id>.csv
void write_bundle(const std::filesystem::path& dir, const GroundTruthBundle& bundle);

}  // namespace rtm
