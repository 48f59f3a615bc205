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

// Decoding/encoding seam. Everything enters the library as an 8-bit
// grayscale Raster; colour inputs are converted to luminance on load.

#include <filesystem>

#include "rtm/raster.hpp"

namespace rtm {

// PNG or JPEG, detected from the file signature. Throws IoError.
Raster load_image(const std::filesystem::path& path);

// Writes an 8-bit grayscale PNG. Throws IoError.
void save_png(const std::filesystem::path& path, const Raster& img);

// Case-insensitive png / jpg / jpeg.
bool is_supported_image(const std::filesystem::path& path);

}  // namespace rtm
