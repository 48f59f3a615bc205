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

#include "rtm/association.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "rtm/errors.hpp"
#include "rtm/ocr.hpp"

namespace rtm {

double default_tolerance(int image_width) {
  return 50.0 * image_width / kCanonicalWidth;
}

std::vector<MilepostZone> build_zones(std::span<const MilepostReading> mileposts,
                                      int image_width) {
  if (image_width < 1) throw InvalidArgument("image width must be positive");
  std::vector<std::size_t> order(mileposts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return mileposts[a].first.box.center_x() < mileposts[b].first.box.center_x();
  });

  std::vector<MilepostZone> zones;
  zones.reserve(order.size());
  for (std::size_t idx : order) {
    const auto& [det, values] = mileposts[idx];
    if (det.cls != ComponentClass::kMilepost) {
      throw InvalidArgument("zone anchor is not a milepost detection");
    }
    zones.push_back({det, values, 0.0, static_cast<double>(image_width)});
  }
  for (std::size_t i = 0; i + 1 < zones.size(); ++i) {
    const double mid =
        (zones[i].anchor.box.center_x() + zones[i + 1].anchor.box.center_x()) / 2.0;
    zones[i].right = mid;
    zones[i + 1].left = mid;
  }
  return zones;
}

std::vector<double> associate(const Detection& component,
                              std::span<const MilepostZone> zones,
                              const AssociationConfig& cfg) {
  const double cx = component.box.center_x();
  const double tol = cfg.tolerance_px;
  std::vector<double> out;
  for (std::size_t i = 0; i < zones.size(); ++i) {
    // Outer edges are open so every centre lands somewhere; shared edges
    // are (left, right] so a centre on a boundary belongs to the left zone.
    const bool after_left = i == 0 || cx > zones[i].left - tol;
    const bool before_right = i + 1 == zones.size() || cx <= zones[i].right + tol;
    if (after_left && before_right) {
      out.insert(out.end(), zones[i].values.begin(), zones[i].values.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

AssociationResult associate_all(const DetectionSet& set,
                                std::span<const std::string> texts,
                                const AssociationConfig& cfg) {
  if (texts.size() != set.detections.size()) {
    throw InvalidArgument("expected one text per detection");
  }
  AssociationResult result;
  std::vector<MilepostReading> readings;
  for (std::size_t i = 0; i < set.detections.size(); ++i) {
    const Detection& d = set.detections[i];
    if (d.cls != ComponentClass::kMilepost) continue;
    auto values = parse_milepost_numbers(texts[i]);
    if (values.empty()) {
      result.warnings.push_back("milepost at x=" + std::to_string(d.box.x_min) +
                                " has no readable number");
    }
    readings.emplace_back(d, std::move(values));
  }
  const auto zones = build_zones(readings, set.image_width);

  for (std::size_t i = 0; i < set.detections.size(); ++i) {
    const Detection& d = set.detections[i];
    if (d.cls == ComponentClass::kMilepost) continue;
    result.records.push_back(
        {set.image_id, d.cls, texts[i], associate(d, zones, cfg), d.box, d.score});
  }
  if (zones.empty() && !result.records.empty()) {
    result.warnings.push_back("no milepost detected; " +
                              std::to_string(result.records.size()) +
                              " records have no milepost");
  }
  sort_records(result.records);
  return result;
}

bool record_less(const ComponentRecord& a, const ComponentRecord& b) {
  if (a.mileposts.empty() != b.mileposts.empty()) return b.mileposts.empty();
  if (!a.mileposts.empty() && a.mileposts.front() != b.mileposts.front()) {
    return a.mileposts.front() < b.mileposts.front();
  }
  const auto la = class_label(a.cls);
  const auto lb = class_label(b.cls);
  if (la != lb) return la < lb;
  return std::tie(a.box.x_min, a.box.y_min, a.box.x_max, a.box.y_max, a.text, a.score,
                  a.mileposts) < std::tie(b.box.x_min, b.box.y_min, b.box.x_max,
                                          b.box.y_max, b.text, b.score, b.mileposts);
}

void sort_records(std::vector<ComponentRecord>& records) {
  std::stable_sort(records.begin(), records.end(), record_less);
}

}  // namespace rtm
