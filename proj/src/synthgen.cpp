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

#include "rtm/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rtm/csv.hpp"
#include "rtm/errors.hpp"
#include "rtm/glyph_atlas.hpp"
#include "rtm/image_io.hpp"
#include "rtm/ocr.hpp"

namespace rtm {
namespace {

constexpr int kBoxMargin = 8;
constexpr int kBoxHeight = GlyphAtlas::kCellHeight + 2 * kBoxMargin;
constexpr int kBandTop = 4;
constexpr int kRowTop = 70;
constexpr int kRowPitch = kBoxHeight + 12;
constexpr int kMinBoxGap = 10;

// Portable across standard libraries, unlike std::uniform_*_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) {  // inclusive
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

void fill_rect(Raster& img, int x0, int y0, int x1, int y1) {
  x0 = std::max(x0, 0);
  y0 = std::max(y0, 0);
  x1 = std::min(x1, img.width() - 1);
  y1 = std::min(y1, img.height() - 1);
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) img.set(x, y, kInk);
  }
}

// 2 px thick line, clipped to the image.
void draw_line(Raster& img, int x0, int y0, int x1, int y1) {
  const int dx = std::abs(x1 - x0);
  const int dy = -std::abs(y1 - y0);
  const int sx = x0 < x1 ? 1 : -1;
  const int sy = y0 < y1 ? 1 : -1;
  int err = dx + dy;
  for (;;) {
    fill_rect(img, x0, y0, x0 + 1, y0 + 1);
    if (x0 == x1 && y0 == y1) break;
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x0 += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y0 += sy;
    }
  }
}

void check_label(ComponentClass cls, const std::string& label, const CharsetPolicy& policy) {
  if (label.empty()) throw InvalidArgument("empty label");
  const std::string& allowed = policy.allowed_for(cls);
  for (char c : label) {
    if (allowed.find(c) == std::string::npos || !glyph_atlas().contains(c)) {
      throw InvalidArgument("label '" + label + "' uses a character outside the " +
                            std::string(class_label(cls)) + " charset");
    }
  }
  if (filter_text(label, cls, policy) != label) {
    throw InvalidArgument("label '" + label + "' is not stable under text filtering");
  }
}

struct Placed {
  BoundingBox box;
  int text_x;
  int text_y;
};

// Index of the anchor nearest to x, ties to the lower index.
int nearest_anchor(double x, const std::vector<double>& centers) {
  int best = 0;
  for (int i = 1; i < static_cast<int>(centers.size()); ++i) {
    if (std::abs(x - centers[i]) < std::abs(x - centers[best])) best = i;
  }
  return best;
}

std::string random_word(Rng& rng, int length, bool letters_first) {
  static const std::string kUpper = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  static const std::string kDigits = "0123456789";
  std::string w;
  for (int i = 0; i < length; ++i) {
    const bool letter = letters_first ? i < (length + 1) / 2 : rng.chance(0.5);
    const std::string& pool = letter ? kUpper : kDigits;
    w.push_back(pool[rng.uniform(0, static_cast<int>(pool.size()) - 1)]);
  }
  return w;
}

std::string random_label(Rng& rng, ComponentClass cls) {
  const bool spaced = cls == ComponentClass::kCrossingLabel || cls == ComponentClass::kCpName;
  const int shape = rng.uniform(0, 3);
  if (shape == 0) return random_word(rng, rng.uniform(2, 4), true);
  if (shape == 1) {
    const char sep = spaced && rng.chance(0.5) ? ' ' : (rng.chance(0.5) ? '-' : '.');
    return random_word(rng, rng.uniform(1, 2), true) + sep + random_word(rng, rng.uniform(1, 2), false);
  }
  if (shape == 2 && spaced) {
    return random_word(rng, 2, true) + " " + random_word(rng, 2, true);
  }
  return random_word(rng, rng.uniform(2, 5), false);
}

std::vector<std::string> generated_milepost_labels(Rng& rng, int count) {
  std::vector<std::string> labels;
  const int base = rng.uniform(1, 80);
  for (int i = 0; i < count; ++i) {
    const int mile = base + i;
    if (rng.chance(0.2)) {
      const int tenth = rng.uniform(0, 8);
      labels.push_back(std::to_string(mile) + "." + std::to_string(tenth) + " " +
                       std::to_string(mile) + "." + std::to_string(tenth + 1));
    } else {
      labels.push_back(std::to_string(mile));
    }
  }
  return labels;
}

}  // namespace

GroundTruthBundle generate(const LayoutSpec& spec) {
  const int W = spec.image_width;
  const int H = spec.image_height;
  if (W < 1 || H < 1) throw InvalidArgument("image dimensions must be positive");
  if (spec.milepost_count < 0 || spec.track_lines < 0) {
    throw InvalidArgument("counts must be non-negative");
  }
  if (H < kRowTop) throw UnsatisfiableLayout("image too short for the milepost band");
  const CharsetPolicy policy = default_charset_policy();
  const GlyphAtlas& atlas = glyph_atlas();
  Rng rng(spec.seed);

  std::vector<std::string> mp_labels = spec.milepost_labels;
  if (mp_labels.empty()) mp_labels = generated_milepost_labels(rng, spec.milepost_count);
  if (static_cast<int>(mp_labels.size()) != spec.milepost_count) {
    throw InvalidArgument("milepost_labels must have milepost_count entries");
  }
  for (const auto& l : mp_labels) check_label(ComponentClass::kMilepost, l, policy);
  for (const auto& c : spec.components) {
    if (c.cls == ComponentClass::kMilepost) {
      throw InvalidArgument("components may not be mileposts; use milepost_count");
    }
    check_label(c.cls, c.label, policy);
    if (spec.milepost_count > 0 &&
        (c.milepost_index < 0 || c.milepost_index >= spec.milepost_count)) {
      throw InvalidArgument("component milepost index out of range");
    }
  }

  GroundTruthBundle b{Raster(W, H), {}, {}, {}, {}, {}};
  b.detections.image_id = spec.image_id.empty() ? "synth_" + std::to_string(spec.seed)
                                                : spec.image_id;
  b.detections.image_width = W;
  b.detections.image_height = H;

  auto add = [&](ComponentClass cls, const Placed& p, const std::string& text) {
    atlas.draw(b.image, text, p.text_x, p.text_y);
    b.detections.detections.push_back({cls, p.box, 1.0});
    BinaryMask glyphs(p.box.width(), p.box.height());
    const BinaryMask ink = atlas.render(text);
    for (int y = 0; y < ink.height(); ++y) {
      for (int x = 0; x < ink.width(); ++x) {
        if (ink.at(x, y)) glyphs.set(x + kBoxMargin, y + kBoxMargin, true);
      }
    }
    b.glyph_masks.push_back(std::move(glyphs));
    b.texts.push_back(text);
  };

  auto place = [&](const std::string& text, double center, int top) -> Placed {
    const int bw = GlyphAtlas::text_width(text) + 2 * kBoxMargin;
    if (bw > W - 2) throw UnsatisfiableLayout("label '" + text + "' is wider than the page");
    int x_min = static_cast<int>(std::lround(center - (bw - 1) / 2.0));
    x_min = std::clamp(x_min, 1, W - 1 - bw);
    return {{x_min, top, x_min + bw - 1, top + kBoxHeight - 1},
            x_min + kBoxMargin,
            top + kBoxMargin};
  };

  // Milepost band.
  std::vector<double> centers;
  std::vector<Placed> mp_boxes;
  const double slot = spec.milepost_count > 0 ? static_cast<double>(W) / spec.milepost_count : 0;
  for (int i = 0; i < spec.milepost_count; ++i) {
    const double jitter = (rng.unit() * 2 - 1) * slot * 0.15;
    Placed p = place(mp_labels[i], (i + 0.5) * slot + jitter, kBandTop);
    for (const Placed& q : mp_boxes) {
      if (p.box.x_min <= q.box.x_max + kMinBoxGap && q.box.x_min <= p.box.x_max + kMinBoxGap) {
        throw UnsatisfiableLayout("milepost labels overlap; page too narrow");
      }
    }
    centers.push_back(p.box.center_x());
    mp_boxes.push_back(p);
  }

  // Component rows.
  const int row_count = std::max(0, (H - kRowTop - 8) / kRowPitch);
  std::vector<std::vector<BoundingBox>> rows(row_count);
  std::vector<Placed> comp_boxes;
  for (const ComponentSpec& c : spec.components) {
    const int k = spec.milepost_count > 0 ? c.milepost_index : -1;
    double want = k >= 0 ? centers[k] + (rng.unit() * 2 - 1) * slot * 0.2
                         : rng.uniform(0, W - 1);
    Placed p = place(c.label, want, 0);
    if (k >= 0 && nearest_anchor(p.box.center_x(), centers) != k) {
      p = place(c.label, centers[k], 0);
      if (nearest_anchor(p.box.center_x(), centers) != k) {
        throw UnsatisfiableLayout("cannot place '" + c.label + "' next to its milepost");
      }
    }
    int row = -1;
    for (int r = 0; r < row_count && row < 0; ++r) {
      const bool free = std::none_of(rows[r].begin(), rows[r].end(), [&](const BoundingBox& o) {
        return p.box.x_min <= o.x_max + kMinBoxGap && o.x_min <= p.box.x_max + kMinBoxGap;
      });
      if (free) row = r;
    }
    if (row < 0) throw UnsatisfiableLayout("too many components for the page");
    const int top = kRowTop + row * kRowPitch;
    p.box.y_min += top;
    p.box.y_max += top;
    p.text_y += top;
    rows[row].push_back(p.box);
    comp_boxes.push_back(p);
  }

  if (spec.track_lines > row_count + 1) {
    throw UnsatisfiableLayout("more track lines than line slots");
  }

  for (int i = 0; i < spec.milepost_count; ++i) add(ComponentClass::kMilepost, mp_boxes[i], mp_labels[i]);
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    add(spec.components[i].cls, comp_boxes[i], spec.components[i].label);
  }

  // Strokes. All stay at least 3 px away from text ink inside a box.
  for (int t = 0; t < spec.track_lines; ++t) {
    const int y = t == 0 ? kBandTop + kBoxHeight - 3
                         : kRowTop + (t - 1) * kRowPitch + kBoxHeight - 4;
    fill_rect(b.image, 0, y, W - 1, y + 1);
  }
  for (const Placed& p : mp_boxes) {
    const int x = static_cast<int>(p.box.center_x());
    fill_rect(b.image, x, p.box.y_max - 3, x + 1, p.box.y_max + 10);
  }
  for (const Placed& p : comp_boxes) {
    const BoundingBox& bx = p.box;
    if (rng.chance(spec.distortion_density)) {
      const int x = rng.uniform(bx.x_min + 2, bx.x_max - 3);
      fill_rect(b.image, x, bx.y_min - 6, x + 1, bx.y_min + kBoxMargin - 4);
    }
    if (rng.chance(spec.distortion_density)) {
      draw_line(b.image, bx.x_min - 6, bx.y_min + 10, bx.x_min + kBoxMargin - 5, bx.y_min + 20);
    }
    if (rng.chance(spec.distortion_density)) {
      const int y = bx.y_max - 2;
      fill_rect(b.image, bx.x_max - 12, y, bx.x_max + 6, y + 1);
    }
    if (spec.hard && rng.chance(spec.distortion_density)) {
      const int y = p.text_y + GlyphAtlas::kCellHeight / 2;
      fill_rect(b.image, bx.x_min - 4, y, bx.x_max + 4, y);
    }
  }

  b.gt = ground_truth_from(b.detections);

  std::vector<std::vector<double>> zone_values;
  for (const auto& l : mp_labels) {
    auto v = parse_milepost_numbers(l);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    zone_values.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const ComponentSpec& c = spec.components[i];
    std::vector<double> mp;
    if (spec.milepost_count > 0) mp = zone_values[c.milepost_index];
    b.expected_records.push_back(
        {b.detections.image_id, c.cls, c.label, std::move(mp), comp_boxes[i].box, 1.0});
  }
  sort_records(b.expected_records);
  return b;
}

LayoutSpec random_layout(std::uint64_t seed, int image_width, int image_height, bool hard) {
  static constexpr ComponentClass kPlaceable[] = {
      ComponentClass::kSignal,   ComponentClass::kSwitch,        ComponentClass::kElectSwitch,
      ComponentClass::kClearancePoint, ComponentClass::kCrossing, ComponentClass::kCrossingLabel,
      ComponentClass::kCpName,
  };
  Rng rng(seed ^ 0x5eed5eed5eedULL);
  LayoutSpec spec;
  spec.seed = seed;
  spec.image_width = image_width;
  spec.image_height = image_height;
  spec.milepost_count = rng.uniform(2, 4);
  spec.track_lines = rng.uniform(1, 3);
  spec.distortion_density = 0.6;
  spec.hard = hard;
  const int n = rng.uniform(4, 8);
  for (int i = 0; i < n; ++i) {
    ComponentSpec c;
    c.cls = kPlaceable[rng.uniform(0, 6)];
    c.milepost_index = rng.uniform(0, spec.milepost_count - 1);
    c.label = random_label(rng, c.cls);
    spec.components.push_back(std::move(c));
  }
  return spec;
}

void write_bundle(const std::filesystem::path& dir, const GroundTruthBundle& bundle) {
  const std::string& id = bundle.detections.image_id;
  std::filesystem::create_directories(dir / "gt");
  std::filesystem::create_directories(dir / "expected");
  save_png(dir / (id + ".png"), bundle.image);
  save_detections(dir / (id + ".json"), bundle.detections);
  save_detections(dir / "gt" / (id + ".json"), bundle.detections, /*with_scores=*/false);
  emit_csv(bundle.expected_records, dir / "expected" / (id + ".csv"));
}

}  // namespace rtm
