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

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rtm/raster.hpp"

namespace rtm {

enum class ComponentClass {
  kMilepost,
  kSignal,
  kSwitch,
  kElectSwitch,
  kClearancePoint,
  kCrossing,
  kCrossingLabel,
  kCpName,
};

inline constexpr std::size_t kClassCount = 8;

inline constexpr std::array<ComponentClass, kClassCount> kAllClasses = {
    ComponentClass::kMilepost,       ComponentClass::kSignal,
    ComponentClass::kSwitch,         ComponentClass::kElectSwitch,
    ComponentClass::kClearancePoint, ComponentClass::kCrossing,
    ComponentClass::kCrossingLabel,  ComponentClass::kCpName,
};

inline constexpr std::size_t class_index(ComponentClass c) {
  return static_cast<std::size_t>(c);
}

// Lowercase snake case, as used in sidecar and CSV files.
std::string_view class_label(ComponentClass c);

// Accepts the canonical labels plus the spellings found in the map legend
// ("Electric-Switch", "Control Point Name", "elect-switch", ...). Case,
// hyphens and spaces are normalized first. Throws UnknownLabel.
ComponentClass parse_class(std::string_view label);

struct Detection {
  ComponentClass cls = ComponentClass::kMilepost;
  BoundingBox box;
  double score = 1.0;

  friend bool operator==(const Detection&, const Detection&) = default;
};

struct DetectionSet {
  std::string image_id;
  int image_width = 0;
  int image_height = 0;
  std::vector<Detection> detections;

  friend bool operator==(const DetectionSet&, const DetectionSet&) = default;
};

// Boxes overshooting the image by at most this many pixels are clamped.
inline constexpr int kMaxBoxOvershoot = 2;

// Sidecar (de)serialization. `require_scores` is false for ground-truth
// files, where a missing score reads as 1.0.
DetectionSet parse_detections(std::string_view text, bool require_scores = true);
std::string serialize_detections(const DetectionSet& set, bool with_scores = true);

// Throws IoError or ParseError (UnknownLabel for bad class names).
DetectionSet load_detections(const std::filesystem::path& path,
                             bool require_scores = true);
void save_detections(const std::filesystem::path& path, const DetectionSet& set,
                     bool with_scores = true);

// Keeps score >= min_score. Throws InvalidArgument outside [0,1].
DetectionSet filter_by_score(const DetectionSet& set, double min_score);

/// Attachment point for a live detector. Implementations report failure by
/// throwing DetectorUnavailable; the pipeline then falls back to sidecars.
class Detector {
 public:
  virtual ~Detector() = default;
  virtual DetectionSet detect(const Raster& img, const std::string& image_id) = 0;
  // false: the pipeline serializes calls to this instance.
  virtual bool concurrent_safe() const { return false; }
};

}  // namespace rtm
