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

// Published per-class counts and the fixtures built from them. Shared by
// the unit tests and the acceptance binary.

#include <array>
#include <cstdio>
#include <string>

#include "rtm/detection.hpp"
#include "rtm/evalkit.hpp"

namespace rtm::testing {

struct PublishedRow {
  ComponentClass cls;
  long tp, fp, fn;
  // As printed, 2 dp after padding ("1" -> "1.00").
  const char* ap;
  const char* ar;
  const char* f1;
};

inline constexpr std::array<PublishedRow, kClassCount> kPublishedRows = {{
    {ComponentClass::kMilepost, 77, 11, 0, "0.88", "1.00", "0.93"},
    {ComponentClass::kCrossing, 6, 3, 0, "0.67", "1.00", "0.80"},
    {ComponentClass::kCrossingLabel, 6, 2, 0, "0.75", "1.00", "0.86"},
    {ComponentClass::kSignal, 45, 14, 6, "0.76", "0.88", "0.82"},
    {ComponentClass::kSwitch, 42, 12, 1, "0.78", "0.98", "0.87"},
    {ComponentClass::kClearancePoint, 48, 11, 0, "0.81", "1.00", "0.90"},
    {ComponentClass::kCpName, 6, 1, 0, "0.86", "1.00", "0.90"},
    {ComponentClass::kElectSwitch, 0, 1, 1, "0.00", "0.00", "0.00"},
}};

inline constexpr double kPublishedMap = 0.6878;
inline constexpr double kPublishedMar = 0.8573;
inline constexpr double kPublishedMaf1 = 0.7618;
inline constexpr double kMacroTolerance = 0.005;

inline CountTable published_counts() {
  CountTable t{};
  for (const auto& r : kPublishedRows) t[class_index(r.cls)] = {r.tp, r.fp, r.fn};
  return t;
}

inline std::string two_dp(double v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

// Boxes laid out so each class reproduces its (tp, fp, fn): matched
// predictions copy a ground-truth box, false positives sit on empty ground,
// missed boxes get no prediction. Scores vary so ordering is exercised.
inline void fixture_from_counts(const CountTable& counts, DetectionSet& preds,
                                GroundTruthSet& gt) {
  preds = DetectionSet{"fixture", 4000, 4000, {}};
  gt = GroundTruthSet{"fixture", 4000, 4000, {}};
  int slot = 0;
  auto next_box = [&slot]() {
    const int x = (slot % 100) * 40;
    const int y = (slot / 100) * 40;
    ++slot;
    return BoundingBox{x, y, x + 29, y + 29};
  };
  for (ComponentClass c : kAllClasses) {
    const ClassCounts& cc = counts[class_index(c)];
    for (long i = 0; i < cc.tp; ++i) {
      const BoundingBox b = next_box();
      gt.boxes.emplace_back(c, b);
      preds.detections.push_back({c, b, 0.5 + 0.5 * static_cast<double>(i % 7) / 7});
    }
    for (long i = 0; i < cc.fn; ++i) gt.boxes.emplace_back(c, next_box());
    for (long i = 0; i < cc.fp; ++i) {
      preds.detections.push_back({c, next_box(), 0.5 + 0.5 * static_cast<double>(i % 5) / 5});
    }
  }
}

}  // namespace rtm::testing
