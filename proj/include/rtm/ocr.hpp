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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rtm/detection.hpp"
#include "rtm/raster.hpp"

namespace rtm {

struct OcrResult {
  std::string raw_text;
  std::string engine_id;
};

/// Text recognizer. Input is dark text on a light background.
/// Failures are reported by throwing OcrFailure.
class OcrEngine {
 public:
  virtual ~OcrEngine() = default;
  virtual OcrResult recognize(const Raster& glyphs) const = 0;
  virtual std::string id() const = 0;
  virtual bool concurrent_safe() const { return true; }
};

// Matches glyph-atlas renders. Ink columns are split on background gaps,
// each run is compared with every atlas template of the same ink extent,
// and spaces are recovered from the fixed pitch. Runs with no close
// template come out as '?'.
//
// restore_radius dilates the ink before segmentation, undoing an erosion
// of the same radius applied upstream.
class TemplateEngine : public OcrEngine {
 public:
  explicit TemplateEngine(int restore_radius = 0, int threshold = kDefaultThreshold);
  OcrResult recognize(const Raster& glyphs) const override;
  std::string id() const override { return "template"; }

 private:
  struct Template {
    char ch;
    int left;  // ink offset inside the cell
    BinaryMask ink;
  };
  int restore_radius_;
  int threshold_;
  std::vector<Template> templates_;
};

// Runs `<command> <image.png>` and reads UTF-8 text from stdout. A nonzero
// exit status is an OcrFailure.
class ExternalProcessEngine : public OcrEngine {
 public:
  explicit ExternalProcessEngine(std::string command,
                                 std::filesystem::path scratch_dir = {});
  OcrResult recognize(const Raster& glyphs) const override;
  std::string id() const override { return "cmd:" + command_; }

 private:
  std::string command_;
  std::filesystem::path scratch_dir_;
};

// "template" or "cmd:<command>". Throws InvalidArgument otherwise.
std::unique_ptr<OcrEngine> make_ocr_engine(std::string_view selection,
                                           int restore_radius = 0);

struct NormalizationRules {
  bool uppercase = true;
  bool collapse_whitespace = true;
  // Strip leading and trailing characters that are not letters or digits.
  bool trim_punctuation = true;
  // Read ',' as '.' for classes that allow '.' but not ','.
  bool decimal_comma = true;
};

struct CharsetPolicy {
  std::array<std::string, kClassCount> allowed;
  NormalizationRules rules;

  const std::string& allowed_for(ComponentClass c) const {
    return allowed[class_index(c)];
  }
};

CharsetPolicy default_charset_policy();
// JSON: {"classes": {"milepost": "0123456789. ", ...}, "uppercase": true, ...}.
// Entries override the defaults. Throws ParseError.
CharsetPolicy parse_charset_policy(std::string_view text);
CharsetPolicy load_charset_policy(const std::filesystem::path& path);

std::string filter_text(std::string_view raw, ComponentClass cls,
                        const CharsetPolicy& policy);
inline std::string filter_text(const OcrResult& raw, ComponentClass cls,
                               const CharsetPolicy& policy) {
  return filter_text(raw.raw_text, cls, policy);
}

// Every maximal run of digits with at most one interior '.', in order.
std::vector<double> parse_milepost_numbers(std::string_view text);

// Shortest decimal that round-trips ("10", "23.4").
std::string format_milepost(double value);

}  // namespace rtm
