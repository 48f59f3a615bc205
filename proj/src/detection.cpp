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

#include "rtm/detection.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "rtm/errors.hpp"

namespace rtm {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, kClassCount> kLabels = {
    "milepost", "signal",   "switch",         "elect_switch",
    "clearance_point", "crossing", "crossing_label", "cp_name",
};

// Legend spellings mapped onto canonical labels, after normalization.
constexpr std::array<std::pair<std::string_view, ComponentClass>, 6> kAliases = {{
    {"electric_switch", ComponentClass::kElectSwitch},
    {"control_point_name", ComponentClass::kCpName},
    {"controlpoint_name", ComponentClass::kCpName},
    {"cpname", ComponentClass::kCpName},
    {"clearancepoint", ComponentClass::kClearancePoint},
    {"crossinglabel", ComponentClass::kCrossingLabel},
}};

std::string normalize_label(std::string_view label) {
  std::string out;
  out.reserve(label.size());
  for (char c : label) {
    if (c == '-' || c == ' ') {
      out.push_back('_');
    } else {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

int clamp_coord(int v, int limit, std::size_t index) {
  if (v < -kMaxBoxOvershoot || v > limit - 1 + kMaxBoxOvershoot) {
    throw ParseError("detection " + std::to_string(index) + ": coordinate " +
                     std::to_string(v) + " lies outside the image by more than " +
                     std::to_string(kMaxBoxOvershoot) + " px");
  }
  return std::clamp(v, 0, limit - 1);
}

Detection parse_record(const json& rec, std::size_t index, int width, int height,
                       bool require_scores) {
  const std::string where = "detection " + std::to_string(index);
  if (!rec.is_object()) throw ParseError(where + ": expected an object");
  if (!rec.contains("class") || !rec["class"].is_string()) {
    throw ParseError(where + ": missing string field 'class'");
  }
  Detection d;
  d.cls = parse_class(rec["class"].get<std::string>());

  if (!rec.contains("box") || !rec["box"].is_array() || rec["box"].size() != 4) {
    throw ParseError(where + ": 'box' must be [x_min, y_min, x_max, y_max]");
  }
  std::array<int, 4> c{};
  for (std::size_t i = 0; i < 4; ++i) {
    const json& v = rec["box"][i];
    if (!v.is_number_integer()) throw ParseError(where + ": box coordinates must be integers");
    c[i] = v.get<int>();
  }
  if (c[0] > c[2] || c[1] > c[3]) {
    throw ParseError(where + ": malformed geometry (min exceeds max)");
  }
  d.box = {clamp_coord(c[0], width, index), clamp_coord(c[1], height, index),
           clamp_coord(c[2], width, index), clamp_coord(c[3], height, index)};

  if (rec.contains("score")) {
    if (!rec["score"].is_number()) throw ParseError(where + ": 'score' must be a number");
    d.score = rec["score"].get<double>();
    if (!(d.score >= 0.0 && d.score <= 1.0)) {
      throw ParseError(where + ": score outside [0,1]");
    }
  } else if (require_scores) {
    throw ParseError(where + ": missing 'score'");
  }
  return d;
}

}  // namespace

std::string_view class_label(ComponentClass c) { return kLabels[class_index(c)]; }

ComponentClass parse_class(std::string_view label) {
  const std::string norm = normalize_label(label);
  for (ComponentClass c : kAllClasses) {
    if (norm == class_label(c)) return c;
  }
  for (const auto& [alias, c] : kAliases) {
    if (norm == alias) return c;
  }
  throw UnknownLabel(std::string(label));
}

DetectionSet parse_detections(std::string_view text, bool require_scores) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("sidecar is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("sidecar top level must be an object");
  DetectionSet set;
  try {
    set.image_id = doc.at("image_id").get<std::string>();
    set.image_width = doc.at("image_width").get<int>();
    set.image_height = doc.at("image_height").get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("sidecar header: ") + e.what());
  }
  if (set.image_width < 1 || set.image_height < 1) {
    throw ParseError("sidecar image dimensions must be positive");
  }
  if (!doc.contains("detections") || !doc["detections"].is_array()) {
    throw ParseError("sidecar is missing the 'detections' array");
  }
  const json& recs = doc["detections"];
  set.detections.reserve(recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    set.detections.push_back(
        parse_record(recs[i], i, set.image_width, set.image_height, require_scores));
  }
  return set;
}

std::string serialize_detections(const DetectionSet& set, bool with_scores) {
  json recs = json::array();
  for (const Detection& d : set.detections) {
    json rec = {
        {"class", class_label(d.cls)},
        {"box", {d.box.x_min, d.box.y_min, d.box.x_max, d.box.y_max}},
    };
    if (with_scores) rec["score"] = d.score;
    recs.push_back(std::move(rec));
  }
  json doc = {
      {"image_id", set.image_id},
      {"image_width", set.image_width},
      {"image_height", set.image_height},
      {"detections", std::move(recs)},
  };
  return doc.dump(2) + "\n";
}

DetectionSet load_detections(const std::filesystem::path& path, bool require_scores) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_detections(buf.str(), require_scores);
  } catch (const UnknownLabel&) {
    throw;
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_detections(const std::filesystem::path& path, const DetectionSet& set,
                     bool with_scores) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << serialize_detections(set, with_scores);
  if (!out) throw IoError("failed writing " + path.string());
}

DetectionSet filter_by_score(const DetectionSet& set, double min_score) {
  if (!(min_score >= 0.0 && min_score <= 1.0)) {
    throw InvalidArgument("min_score must be within [0,1]");
  }
  DetectionSet out{set.image_id, set.image_width, set.image_height, {}};
  std::copy_if(set.detections.begin(), set.detections.end(),
               std::back_inserter(out.detections),
               [min_score](const Detection& d) { return d.score >= min_score; });
  return out;
}

}  // namespace rtm
