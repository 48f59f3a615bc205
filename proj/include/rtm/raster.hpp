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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rtm {

// Canonical map geometry the detector was trained on. Inputs are normalized
// to this size before detection when the caller asks for it.
inline constexpr int kCanonicalWidth = 4500;
inline constexpr int kCanonicalHeight = 2400;

inline constexpr std::uint8_t kInk = 0;
inline constexpr std::uint8_t kBackground = 255;
inline constexpr int kDefaultThreshold = 128;

/// Inclusive pixel rectangle, origin top-left.
struct BoundingBox {
  int x_min = 0;
  int y_min = 0;
  int x_max = 0;
  int y_max = 0;

  int width() const { return x_max - x_min + 1; }
  int height() const { return y_max - y_min + 1; }
  long long area() const { return static_cast<long long>(width()) * height(); }
  double center_x() const { return (x_min + x_max) / 2.0; }
  bool valid() const {
    return x_min >= 0 && y_min >= 0 && x_min <= x_max && y_min <= y_max;
  }
  bool contains(int x, int y) const {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// Throws InvalidArgument unless box.valid().
BoundingBox checked_box(int x_min, int y_min, int x_max, int y_max);

/// 8-bit grayscale image. 0 is ink, 255 is background.
class Raster {
 public:
  Raster(int width, int height, std::uint8_t fill = kBackground);
  Raster(int width, int height, std::vector<std::uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }

  std::uint8_t at(int x, int y) const { return pixels_[index(x, y)]; }
  void set(int x, int y, std::uint8_t value) { pixels_[index(x, y)] = value; }

  std::span<const std::uint8_t> pixels() const { return pixels_; }
  std::span<std::uint8_t> mutable_pixels() { return pixels_; }
  std::span<const std::uint8_t> row(int y) const {
    return std::span<const std::uint8_t>(pixels_).subspan(index(0, y), width_);
  }
  BoundingBox bounds() const { return {0, 0, width_ - 1, height_ - 1}; }

  friend bool operator==(const Raster&, const Raster&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

/// 1-bit mask stored one byte per pixel; every byte is 0 or 1.
class BinaryMask {
 public:
  BinaryMask(int width, int height, bool fill = false);
  // Throws InvalidArgument if any element is not 0 or 1.
  BinaryMask(int width, int height, std::vector<std::uint8_t> bits);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return bits_.size(); }

  bool at(int x, int y) const { return bits_[index(x, y)] != 0; }
  void set(int x, int y, bool value) { bits_[index(x, y)] = value ? 1 : 0; }
  bool in_bounds(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }

  std::span<const std::uint8_t> bits() const { return bits_; }
  std::span<const std::uint8_t> row(int y) const {
    return std::span<const std::uint8_t>(bits_).subspan(index(0, y), width_);
  }
  BoundingBox bounds() const { return {0, 0, width_ - 1, height_ - 1}; }

  std::size_t count() const;
  bool empty() const { return count() == 0; }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

// bit = 1 where luminance >= threshold (background), 0 for ink.
BinaryMask binarize(const Raster& img, int threshold = kDefaultThreshold);
BinaryMask invert(const BinaryMask& mask);
// Throws DimensionMismatch on unequal sizes.
BinaryMask bitwise_xor(const BinaryMask& a, const BinaryMask& b);
BinaryMask bitwise_and(const BinaryMask& a, const BinaryMask& b);

// Square structuring element of side 2*radius+1. Out-of-bounds reads as 0.
// radius 0 returns the input unchanged.
BinaryMask erode(const BinaryMask& mask, int radius);
BinaryMask dilate(const BinaryMask& mask, int radius);

// The box is clamped to the image; a box with no overlap throws
// DegenerateCrop.
Raster crop(const Raster& img, const BoundingBox& box);
BinaryMask crop(const BinaryMask& mask, const BoundingBox& box);
BoundingBox clamp_box(const BoundingBox& box, int width, int height);
BoundingBox pad_box(const BoundingBox& box, int padding, int width, int height);

// Nearest-neighbour resampling.
Raster resize_to(const Raster& img, int target_width, int target_height);
inline Raster normalize_geometry(const Raster& img) {
  return resize_to(img, kCanonicalWidth, kCanonicalHeight);
}

// 1 -> kInk, 0 -> kBackground. This is the polarity OCR engines expect.
Raster mask_to_ink_raster(const BinaryMask& ink);
// 1 -> 255, 0 -> 0. For viewing masks as images.
Raster mask_to_raster(const BinaryMask& mask);

}  // namespace rtm
