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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rtm/association.hpp"

namespace rtm {

// image_id,milepost,component_class,text,x_min,y_min,x_max,y_max,score
inline constexpr std::string_view kCsvHeader =
    "image_id,milepost,component_class,text,x_min,y_min,x_max,y_max,score";

// Quotes fields containing a comma, quote, CR or LF; quotes are doubled.
std::string csv_escape(std::string_view field);

// Header plus one LF-terminated row per record. Several milepost values
// are joined with ';'.
std::string format_csv(std::span<const ComponentRecord> records);

// Throws IoError when the file cannot be written.
void emit_csv(std::span<const ComponentRecord> records, const std::filesystem::path& path);

// Splits RFC 4180 text into rows of fields.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace rtm
