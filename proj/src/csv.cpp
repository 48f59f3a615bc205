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

#include "rtm/csv.hpp"

#include <charconv>
#include <fstream>

#include "rtm/errors.hpp"
#include "rtm/ocr.hpp"

namespace rtm {
namespace {

std::string format_score(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_csv(std::span<const ComponentRecord> records) {
  std::string out(kCsvHeader);
  out.push_back('\n');
  for (const ComponentRecord& r : records) {
    std::string mileposts;
    for (std::size_t i = 0; i < r.mileposts.size(); ++i) {
      if (i) mileposts.push_back(';');
      mileposts += format_milepost(r.mileposts[i]);
    }
    out += csv_escape(r.image_id);
    out += ',' + csv_escape(mileposts);
    out += ',' + csv_escape(class_label(r.cls));
    out += ',' + csv_escape(r.text);
    out += ',' + std::to_string(r.box.x_min);
    out += ',' + std::to_string(r.box.y_min);
    out += ',' + std::to_string(r.box.x_max);
    out += ',' + std::to_string(r.box.y_max);
    out += ',' + format_score(r.score);
    out.push_back('\n');
  }
  return out;
}

void emit_csv(std::span<const ComponentRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_csv(records);
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool row_open = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    row_open = true;
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      row_open = false;
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field");
  if (row_open) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace rtm
