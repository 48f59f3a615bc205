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

// Component -> milepost association.
//
// Each milepost anchor owns a horizontal strip of the map. Strips split the
// image width at the midpoints between neighbouring anchor centres, so at
// zero tolerance every component falls into exactly one strip (a centre on
// a shared edge goes to the left strip). A positive tolerance widens every
// strip on both sides, letting components near an edge collect the values
// of both neighbours. Vertical position plays no part.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rtm/detection.hpp"

namespace rtm {

struct MilepostZone {
  Detection anchor;
  std::vector<double> values;  // may be empty when OCR failed
  double left = 0.0;
  double right = 0.0;
};

struct AssociationConfig {
  double tolerance_px = 0.0;
};

// Reference tolerance is 50 px at the canonical 4500 px width.
double default_tolerance(int image_width);

struct ComponentRecord {
  std::string image_id;
  ComponentClass cls = ComponentClass::kSignal;
  std::string text;
  std::vector<double> mileposts;
  BoundingBox box;
  double score = 1.0;

  friend bool operator==(const ComponentRecord&, const ComponentRecord&) = default;
};

using MilepostReading = std::pair<Detection, std::vector<double>>;

// Throws InvalidArgument for a non-milepost anchor or image_width < 1.
std::vector<MilepostZone> build_zones(std::span<const MilepostReading> mileposts,
                                      int image_width);

// Deduplicated ascending values of every zone whose widened interval
// holds the component's horizontal centre. Zones must come from
// build_zones.
std::vector<double> associate(const Detection& component,
                              std::span<const MilepostZone> zones,
                              const AssociationConfig& cfg);

struct AssociationResult {
  std::vector<ComponentRecord> records;
  std::vector<std::string> warnings;
};

// texts[i] is the filtered OCR text of set.detections[i]; milepost texts
// are parsed into zone values. One record per non-milepost detection,
// ordered by record_less.
AssociationResult associate_all(const DetectionSet& set,
                                std::span<const std::string> texts,
                                const AssociationConfig& cfg);

// (first milepost, class label, x_min), records without mileposts last.
bool record_less(const ComponentRecord& a, const ComponentRecord& b);
void sort_records(std::vector<ComponentRecord>& records);

}  // namespace rtm
