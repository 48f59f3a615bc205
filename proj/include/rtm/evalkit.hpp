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

// Detection quality at a fixed operating point: IoU matching, per-class
// TP/FP/FN, precision ("ap") and recall ("ar") as point values, their F1,
// and unweighted macro means over all eight classes.

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "rtm/detection.hpp"

namespace rtm {

struct GroundTruthSet {
  std::string image_id;
  int image_width = 0;
  int image_height = 0;
  std::vector<std::pair<ComponentClass, BoundingBox>> boxes;
};

// Same sidecar syntax as detections; scores, if present, are ignored.
GroundTruthSet load_ground_truth(const std::filesystem::path& path);
GroundTruthSet ground_truth_from(const DetectionSet& set);

// Inclusive pixel rectangles.
double iou(const BoundingBox& a, const BoundingBox& b);

struct ClassCounts {
  long tp = 0;
  long fp = 0;
  long fn = 0;

  ClassCounts& operator+=(const ClassCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    return *this;
  }
  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

using CountTable = std::array<ClassCounts, kClassCount>;

inline constexpr double kDefaultIouThreshold = 0.5;
inline constexpr double kDefaultEvalMinScore = 0.5;

// Per class: predictions in descending score order each take the unmatched
// ground-truth box of that class with the highest IoU >= threshold (ties to
// the lower index).
CountTable match_detections(const DetectionSet& preds, const GroundTruthSet& gt,
                            double iou_threshold = kDefaultIouThreshold);

struct ClassMetrics {
  ComponentClass cls = ComponentClass::kMilepost;
  long tp = 0;
  long fp = 0;
  long fn = 0;
  double ap = 0.0;
  double ar = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  std::array<ClassMetrics, kClassCount> per_class;  // indexed by class_index
  double map = 0.0;
  double mar = 0.0;
  double maf1 = 0.0;

  const ClassMetrics& metrics(ComponentClass c) const { return per_class[class_index(c)]; }
};

EvalReport compute_report(const CountTable& counts);

// Row order of the published per-class table.
inline constexpr std::array<ComponentClass, kClassCount> kReportOrder = {
    ComponentClass::kMilepost,       ComponentClass::kCrossing,
    ComponentClass::kCrossingLabel,  ComponentClass::kSignal,
    ComponentClass::kSwitch,         ComponentClass::kClearancePoint,
    ComponentClass::kCpName,         ComponentClass::kElectSwitch,
};

// Per-class block (2 dp, rounded) followed by the macro line (4 dp,
// truncated).
std::string format_report_text(const EvalReport& report, double iou_threshold);
std::string format_report_csv(const EvalReport& report);

// Pairs files in both directories by image_id and sums the counts.
// Throws Error listing ids present on only one side.
EvalReport evaluate_dirs(const std::filesystem::path& preds_dir,
                         const std::filesystem::path& gt_dir,
                         double iou_threshold = kDefaultIouThreshold,
                         double min_score = kDefaultEvalMinScore);

}  // namespace rtm
