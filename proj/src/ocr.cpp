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

#include "rtm/ocr.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "rtm/errors.hpp"
#include "rtm/glyph_atlas.hpp"
#include "rtm/image_io.hpp"
#include "rtm/simd/kernels.hpp"

namespace rtm {
namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

// Smallest box holding every set pixel in columns [x0, x1].
BoundingBox ink_extent(const BinaryMask& m, int x0, int x1) {
  int top = -1;
  int bottom = -1;
  for (int y = 0; y < m.height(); ++y) {
    auto r = m.row(y);
    if (std::any_of(r.begin() + x0, r.begin() + x1 + 1, [](std::uint8_t b) { return b; })) {
      if (top < 0) top = y;
      bottom = y;
    }
  }
  return {x0, top, x1, bottom};
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out.push_back(c);
    }
  }
  return out + "'";
}

}  // namespace

TemplateEngine::TemplateEngine(int restore_radius, int threshold)
    : restore_radius_(restore_radius), threshold_(threshold) {
  if (restore_radius < 0) throw InvalidArgument("restore radius must be >= 0");
  const GlyphAtlas& atlas = glyph_atlas();
  for (char c : atlas.characters()) {
    if (c == ' ') continue;
    const BinaryMask& g = atlas.glyph(c);
    int left = g.width();
    int right = -1;
    for (int x = 0; x < g.width(); ++x) {
      for (int y = 0; y < g.height(); ++y) {
        if (g.at(x, y)) {
          left = std::min(left, x);
          right = std::max(right, x);
        }
      }
    }
    const BoundingBox ext = ink_extent(g, left, right);
    templates_.push_back({c, left, crop(g, ext)});
  }
}

OcrResult TemplateEngine::recognize(const Raster& glyphs) const {
  OcrResult result{"", id()};
  BinaryMask ink = invert(binarize(glyphs, threshold_));
  if (restore_radius_ > 0) ink = dilate(ink, restore_radius_);

  std::vector<bool> column_has_ink(ink.width(), false);
  for (int y = 0; y < ink.height(); ++y) {
    auto r = ink.row(y);
    for (int x = 0; x < ink.width(); ++x) {
      if (r[x]) column_has_ink[x] = true;
    }
  }

  const auto& kernels = simd::active_kernels();
  bool have_previous = false;
  int previous_origin = 0;
  for (int x = 0; x < ink.width();) {
    if (!column_has_ink[x]) {
      ++x;
      continue;
    }
    const int x0 = x;
    while (x < ink.width() && column_has_ink[x]) ++x;
    const int x1 = x - 1;

    const BinaryMask segment = crop(ink, ink_extent(ink, x0, x1));
    const Template* best = nullptr;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (const Template& t : templates_) {
      if (t.ink.width() != segment.width() || t.ink.height() != segment.height()) continue;
      const std::size_t cost =
          kernels.count_mismatch(t.ink.bits().data(), segment.bits().data(), segment.size());
      if (cost < best_cost) {
        best_cost = cost;
        best = &t;
      }
    }
    // Accept near matches only; anything further off is not a glyph.
    if (best != nullptr && best_cost * 4 > best->ink.count()) best = nullptr;

    const int origin = best ? x0 - best->left : x0;
    if (have_previous) {
      const long cells = std::lround(static_cast<double>(origin - previous_origin) /
                                     GlyphAtlas::kPitch);
      for (long i = 1; i < cells; ++i) result.raw_text.push_back(' ');
    }
    result.raw_text.push_back(best ? best->ch : GlyphAtlas::kUnknown);
    previous_origin = origin;
    have_previous = true;
  }
  return result;
}

ExternalProcessEngine::ExternalProcessEngine(std::string command,
                                             std::filesystem::path scratch_dir)
    : command_(std::move(command)), scratch_dir_(std::move(scratch_dir)) {
  if (command_.empty()) throw InvalidArgument("external OCR command is empty");
  if (scratch_dir_.empty()) scratch_dir_ = std::filesystem::temp_directory_path();
}

OcrResult ExternalProcessEngine::recognize(const Raster& glyphs) const {
  static std::atomic<unsigned long> counter{0};
  const auto path = scratch_dir_ / ("rtm_ocr_" + std::to_string(::getpid()) + "_" +
                                    std::to_string(counter++) + ".png");
  save_png(path, glyphs);
  const std::string cmd = command_ + " " + shell_quote(path.string());
  std::FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    std::filesystem::remove(path);
    throw OcrFailure(id(), "could not start process");
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = ::pclose(pipe);
  std::error_code ec;
  std::filesystem::remove(path, ec);
  if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw OcrFailure(id(), "process exited with status " + std::to_string(status));
  }
  while (!out.empty() && (out.back() == '\n' || out.back() == '\r')) out.pop_back();
  return {std::move(out), id()};
}

std::unique_ptr<OcrEngine> make_ocr_engine(std::string_view selection, int restore_radius) {
  if (selection == "template") return std::make_unique<TemplateEngine>(restore_radius);
  if (selection.starts_with("cmd:") && selection.size() > 4) {
    return std::make_unique<ExternalProcessEngine>(std::string(selection.substr(4)));
  }
  throw InvalidArgument("unknown OCR engine '" + std::string(selection) +
                        "' (expected template or cmd:<command>)");
}

CharsetPolicy default_charset_policy() {
  const std::string digits = "0123456789";
  const std::string upper = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
  const std::string symbol_text = upper + digits + "-.";
  const std::string name_text = upper + digits + " -.";

  CharsetPolicy p;
  for (ComponentClass c : kAllClasses) p.allowed[class_index(c)] = symbol_text;
  // Space separates the several numbers a single milepost area may carry.
  p.allowed[class_index(ComponentClass::kMilepost)] = digits + ". ";
  p.allowed[class_index(ComponentClass::kCrossingLabel)] = name_text;
  p.allowed[class_index(ComponentClass::kCpName)] = name_text;
  return p;
}

CharsetPolicy parse_charset_policy(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("charset config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("charset config must be an object");
  CharsetPolicy p = default_charset_policy();
  if (doc.contains("classes")) {
    const json& classes = doc["classes"];
    if (!classes.is_object()) throw ParseError("'classes' must be an object");
    for (const auto& [label, chars] : classes.items()) {
      const ComponentClass c = parse_class(label);
      if (!chars.is_string() || chars.get<std::string>().empty()) {
        throw ParseError("charset for '" + label + "' must be a nonempty string");
      }
      p.allowed[class_index(c)] = chars.get<std::string>();
    }
  }
  auto flag = [&](const char* key, bool& target) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_boolean()) throw ParseError(std::string("'") + key + "' must be boolean");
    target = doc[key].get<bool>();
  };
  flag("uppercase", p.rules.uppercase);
  flag("collapse_whitespace", p.rules.collapse_whitespace);
  flag("trim_punctuation", p.rules.trim_punctuation);
  flag("decimal_comma", p.rules.decimal_comma);
  return p;
}

CharsetPolicy load_charset_policy(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_charset_policy(buf.str());
}

std::string filter_text(std::string_view raw, ComponentClass cls,
                        const CharsetPolicy& policy) {
  const std::string& allowed = policy.allowed_for(cls);
  const NormalizationRules& rules = policy.rules;
  const bool map_comma = rules.decimal_comma &&
                         allowed.find(',') == std::string::npos &&
                         allowed.find('.') != std::string::npos;

  std::string kept;
  kept.reserve(raw.size());
  for (char c : raw) {
    if (rules.uppercase) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (map_comma && c == ',') c = '.';
    if (rules.collapse_whitespace && std::isspace(static_cast<unsigned char>(c))) c = ' ';
    if (allowed.find(c) == std::string::npos) continue;
    if (rules.collapse_whitespace && c == ' ' && !kept.empty() && kept.back() == ' ') continue;
    kept.push_back(c);
  }

  auto strip = [&](char c) {
    if (rules.trim_punctuation) return !is_alnum(c);
    return rules.collapse_whitespace && c == ' ';
  };
  std::size_t begin = 0;
  std::size_t end = kept.size();
  while (begin < end && strip(kept[begin])) ++begin;
  while (end > begin && strip(kept[end - 1])) --end;
  return kept.substr(begin, end - begin);
}

std::vector<double> parse_milepost_numbers(std::string_view text) {
  auto digit = [&](std::size_t i) {
    return i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]));
  };
  std::vector<double> values;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!digit(i)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (digit(i)) ++i;
    if (i < text.size() && text[i] == '.' && digit(i + 1)) {
      ++i;
      while (digit(i)) ++i;
    }
    double v = 0.0;
    std::from_chars(text.data() + start, text.data() + i, v);
    values.push_back(v);
  }
  return values;
}

std::string format_milepost(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

}  // namespace rtm
