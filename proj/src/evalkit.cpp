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

#include "rtm/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "rtm/errors.hpp"

namespace rtm {
namespace {

std::string fixed(double v, int decimals) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// Macro values are cut, not rounded, to four places (0.68786 -> "0.6878").
std::string truncated4(double v) {
  return fixed(std::floor(v * 1e4 + 1e-9) / 1e4, 4);
}

std::vector<std::filesystem::path> json_files(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError("not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

GroundTruthSet ground_truth_from(const DetectionSet& set) {
  GroundTruthSet gt{set.image_id, set.image_width, set.image_height, {}};
  for (const Detection& d : set.detections) gt.boxes.emplace_back(d.cls, d.box);
  return gt;
}

GroundTruthSet load_ground_truth(const std::filesystem::path& path) {
  return ground_truth_from(load_detections(path, /*require_scores=*/false));
}

double iou(const BoundingBox& a, const BoundingBox& b) {
  const int ix0 = std::max(a.x_min, b.x_min);
  const int iy0 = std::max(a.y_min, b.y_min);
  const int ix1 = std::min(a.x_max, b.x_max);
  const int iy1 = std::min(a.y_max, b.y_max);
  if (ix0 > ix1 || iy0 > iy1) return 0.0;
  const double inter = static_cast<double>(ix1 - ix0 + 1) * (iy1 - iy0 + 1);
  const double uni = static_cast<double>(a.area()) + static_cast<double>(b.area()) - inter;
  return inter / uni;
}

CountTable match_detections(const DetectionSet& preds, const GroundTruthSet& gt,
                            double iou_threshold) {
  CountTable counts{};
  for (ComponentClass c : kAllClasses) {
    std::vector<const Detection*> p;
    for (const Detection& d : preds.detections) {
      if (d.cls == c) p.push_back(&d);
    }
    std::stable_sort(p.begin(), p.end(), [](const Detection* a, const Detection* b) {
      return a->score > b->score;
    });
    std::vector<const BoundingBox*> g;
    for (const auto& [cls, box] : gt.boxes) {
      if (cls == c) g.push_back(&box);
    }
    std::vector<bool> used(g.size(), false);
    ClassCounts& cc = counts[class_index(c)];
    for (const Detection* d : p) {
      int best = -1;
      double best_iou = -1.0;
      for (std::size_t j = 0; j < g.size(); ++j) {
        if (used[j]) continue;
        const double v = iou(d->box, *g[j]);
        if (v >= iou_threshold && v > best_iou) {
          best_iou = v;
          best = static_cast<int>(j);
        }
      }
      if (best >= 0) {
        used[best] = true;
        ++cc.tp;
      } else {
        ++cc.fp;
      }
    }
    cc.fn = static_cast<long>(std::count(used.begin(), used.end(), false));
  }
  return counts;
}

EvalReport compute_report(const CountTable& counts) {
  EvalReport r;
  for (ComponentClass c : kAllClasses) {
    const ClassCounts& cc = counts[class_index(c)];
    ClassMetrics& m = r.per_class[class_index(c)];
    m.cls = c;
    m.tp = cc.tp;
    m.fp = cc.fp;
    m.fn = cc.fn;
    m.ap = cc.tp + cc.fp > 0 ? static_cast<double>(cc.tp) / (cc.tp + cc.fp) : 0.0;
    m.ar = cc.tp + cc.fn > 0 ? static_cast<double>(cc.tp) / (cc.tp + cc.fn) : 0.0;
    m.f1 = m.ap + m.ar > 0 ? 2.0 * m.ap * m.ar / (m.ap + m.ar) : 0.0;
    r.map += m.ap;
    r.mar += m.ar;
    r.maf1 += m.f1;
  }
  r.map /= kClassCount;
  r.mar /= kClassCount;
  r.maf1 /= kClassCount;
  return r;
}

std::string format_report_text(const EvalReport& report, double iou_threshold) {
  std::ostringstream out;
  char line[160];
  const std::string at = "@IoU_" + fixed(iou_threshold, 2);
  std::snprintf(line, sizeof line, "%-16s %6s %6s %6s %6s %6s %6s\n", at.c_str(), "TP",
                "FP", "FN", "AP", "AR", "F1");
  out << line;
  for (ComponentClass c : kReportOrder) {
    const ClassMetrics& m = report.metrics(c);
    std::snprintf(line, sizeof line, "%-16s %6ld %6ld %6ld %6s %6s %6s\n",
                  std::string(class_label(c)).c_str(), m.tp, m.fp, m.fn,
                  fixed(m.ap, 2).c_str(), fixed(m.ar, 2).c_str(), fixed(m.f1, 2).c_str());
    out << line;
  }
  out << "\n";
  std::snprintf(line, sizeof line, "mAP%s %s  mAR%s %s  mAF1%s %s\n", at.c_str(),
                truncated4(report.map).c_str(), at.c_str(), truncated4(report.mar).c_str(),
                at.c_str(), truncated4(report.maf1).c_str());
  out << line;
  return out.str();
}

std::string format_report_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "class,tp,fp,fn,ap,ar,f1\n";
  for (ComponentClass c : kReportOrder) {
    const ClassMetrics& m = report.metrics(c);
    out << class_label(c) << ',' << m.tp << ',' << m.fp << ',' << m.fn << ','
        << fixed(m.ap, 4) << ',' << fixed(m.ar, 4) << ',' << fixed(m.f1, 4) << '\n';
  }
  out << "macro,,,," << truncated4(report.map) << ',' << truncated4(report.mar) << ','
      << truncated4(report.maf1) << '\n';
  return out.str();
}

EvalReport evaluate_dirs(const std::filesystem::path& preds_dir,
                         const std::filesystem::path& gt_dir, double iou_threshold,
                         double min_score) {
  std::map<std::string, DetectionSet> preds;
  for (const auto& p : json_files(preds_dir)) {
    DetectionSet set = load_detections(p);
    const std::string id = set.image_id;
    if (!preds.emplace(id, std::move(set)).second) {
      throw Error("duplicate image_id '" + id + "' in " + preds_dir.string());
    }
  }
  std::map<std::string, GroundTruthSet> truths;
  for (const auto& p : json_files(gt_dir)) {
    GroundTruthSet g = load_ground_truth(p);
    const std::string id = g.image_id;
    if (!truths.emplace(id, std::move(g)).second) {
      throw Error("duplicate image_id '" + id + "' in " + gt_dir.string());
    }
  }

  std::string only_preds;
  std::string only_gt;
  for (const auto& [id, _] : preds) {
    if (!truths.count(id)) only_preds += " " + id;
  }
  for (const auto& [id, _] : truths) {
    if (!preds.count(id)) only_gt += " " + id;
  }
  if (!only_preds.empty() || !only_gt.empty()) {
    std::string msg = "image_id sets differ.";
    if (!only_preds.empty()) msg += " Only in predictions:" + only_preds + ".";
    if (!only_gt.empty()) msg += " Only in ground truth:" + only_gt + ".";
    throw Error(msg);
  }

  CountTable total{};
  for (const auto& [id, set] : preds) {
    const CountTable c = match_detections(filter_by_score(set, min_score), truths.at(id),
                                          iou_threshold);
    for (std::size_t i = 0; i < kClassCount; ++i) total[i] += c[i];
  }
  return compute_report(total);
}

}  // namespace rtm
