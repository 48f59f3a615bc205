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

#include "rtm/raster.hpp"

#include <algorithm>
#include <string>

#include "rtm/errors.hpp"
#include "rtm/simd/kernels.hpp"

namespace rtm {
namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw InvalidArgument("image dimensions must be positive, got " +
                          std::to_string(width) + "x" + std::to_string(height));
  }
}

void check_same_dims(const BinaryMask& a, const BinaryMask& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw DimensionMismatch(
        "incompatible masks: " + std::to_string(a.width()) + "x" +
        std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
        std::to_string(b.height()));
  }
}

using BinaryKernel = void (*)(const std::uint8_t*, const std::uint8_t*,
                              std::uint8_t*, std::size_t);

BinaryMask combine(const BinaryMask& a, const BinaryMask& b, BinaryKernel op) {
  check_same_dims(a, b);
  std::vector<std::uint8_t> out(a.size());
  op(a.bits().data(), b.bits().data(), out.data(), out.size());
  return BinaryMask(a.width(), a.height(), std::move(out));
}

// Separable square morphology. `erosion` selects AND with zero padding,
// otherwise OR with zero padding.
BinaryMask morph(const BinaryMask& mask, int radius, bool erosion) {
  if (radius < 0) throw InvalidArgument("morphology radius must be >= 0");
  if (radius == 0) return mask;
  const auto& k = simd::active_kernels();
  const int w = mask.width();
  const int h = mask.height();
  const std::size_t window = 2 * static_cast<std::size_t>(radius) + 1;

  std::vector<std::uint8_t> horiz(mask.size());
  std::vector<std::uint8_t> padded(w + 2 * radius, 0);
  for (int y = 0; y < h; ++y) {
    auto src = mask.row(y);
    std::copy(src.begin(), src.end(), padded.begin() + radius);
    std::uint8_t* dst = horiz.data() + static_cast<std::size_t>(y) * w;
    if (erosion) {
      k.window_and(padded.data(), dst, w, window);
    } else {
      k.window_or(padded.data(), dst, w, window);
    }
  }

  std::vector<std::uint8_t> out(mask.size(), 0);
  for (int y = 0; y < h; ++y) {
    std::uint8_t* dst = out.data() + static_cast<std::size_t>(y) * w;
    if (erosion && (y < radius || y + radius >= h)) continue;  // touches padding
    const int lo = std::max(0, y - radius);
    const int hi = std::min(h - 1, y + radius);
    std::copy_n(horiz.data() + static_cast<std::size_t>(lo) * w, w, dst);
    for (int yy = lo + 1; yy <= hi; ++yy) {
      const std::uint8_t* src = horiz.data() + static_cast<std::size_t>(yy) * w;
      if (erosion) {
        k.and_bits(dst, src, dst, w);
      } else {
        k.or_bits(dst, src, dst, w);
      }
    }
  }
  return BinaryMask(w, h, std::move(out));
}

}  // namespace

BoundingBox checked_box(int x_min, int y_min, int x_max, int y_max) {
  BoundingBox box{x_min, y_min, x_max, y_max};
  if (!box.valid()) {
    throw InvalidArgument("invalid bounding box (" + std::to_string(x_min) + "," +
                          std::to_string(y_min) + "," + std::to_string(x_max) +
                          "," + std::to_string(y_max) + ")");
  }
  return box;
}

Raster::Raster(int width, int height, std::uint8_t fill)
    : width_(width), height_(height) {
  check_dims(width, height);
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

Raster::Raster(int width, int height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw InvalidArgument("pixel buffer size does not match dimensions");
  }
}

BinaryMask::BinaryMask(int width, int height, bool fill)
    : width_(width), height_(height) {
  check_dims(width, height);
  bits_.assign(static_cast<std::size_t>(width) * height, fill ? 1 : 0);
}

BinaryMask::BinaryMask(int width, int height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  check_dims(width, height);
  if (bits_.size() != static_cast<std::size_t>(width) * height) {
    throw InvalidArgument("mask buffer size does not match dimensions");
  }
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw InvalidArgument("mask elements must be 0 or 1");
  }
}

std::size_t BinaryMask::count() const {
  return simd::active_kernels().count_ones(bits_.data(), bits_.size());
}

BinaryMask binarize(const Raster& img, int threshold) {
  if (threshold < 0 || threshold > 255) {
    throw InvalidArgument("threshold must be within 0..255");
  }
  std::vector<std::uint8_t> out(img.size());
  simd::active_kernels().binarize(img.pixels().data(), out.data(), out.size(),
                                  static_cast<std::uint8_t>(threshold));
  return BinaryMask(img.width(), img.height(), std::move(out));
}

BinaryMask invert(const BinaryMask& mask) {
  std::vector<std::uint8_t> out(mask.size());
  simd::active_kernels().invert_bits(mask.bits().data(), out.data(), out.size());
  return BinaryMask(mask.width(), mask.height(), std::move(out));
}

BinaryMask bitwise_xor(const BinaryMask& a, const BinaryMask& b) {
  return combine(a, b, simd::active_kernels().xor_bits);
}

BinaryMask bitwise_and(const BinaryMask& a, const BinaryMask& b) {
  return combine(a, b, simd::active_kernels().and_bits);
}

BinaryMask erode(const BinaryMask& mask, int radius) {
  return morph(mask, radius, true);
}

BinaryMask dilate(const BinaryMask& mask, int radius) {
  return morph(mask, radius, false);
}

BoundingBox clamp_box(const BoundingBox& box, int width, int height) {
  BoundingBox out{std::max(box.x_min, 0), std::max(box.y_min, 0),
                  std::min(box.x_max, width - 1), std::min(box.y_max, height - 1)};
  if (out.x_min > out.x_max || out.y_min > out.y_max) {
    throw DegenerateCrop("box does not intersect the " + std::to_string(width) +
                         "x" + std::to_string(height) + " image");
  }
  return out;
}

BoundingBox pad_box(const BoundingBox& box, int padding, int width, int height) {
  return clamp_box({box.x_min - padding, box.y_min - padding,
                    box.x_max + padding, box.y_max + padding},
                   width, height);
}

Raster crop(const Raster& img, const BoundingBox& box) {
  if (box.x_min > box.x_max || box.y_min > box.y_max) {
    throw DegenerateCrop("crop box has zero area");
  }
  const BoundingBox c = clamp_box(box, img.width(), img.height());
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(c.area()));
  for (int y = c.y_min; y <= c.y_max; ++y) {
    auto r = img.row(y).subspan(c.x_min, c.width());
    out.insert(out.end(), r.begin(), r.end());
  }
  return Raster(c.width(), c.height(), std::move(out));
}

BinaryMask crop(const BinaryMask& mask, const BoundingBox& box) {
  if (box.x_min > box.x_max || box.y_min > box.y_max) {
    throw DegenerateCrop("crop box has zero area");
  }
  const BoundingBox c = clamp_box(box, mask.width(), mask.height());
  std::vector<std::uint8_t> out;
  out.reserve(static_cast<std::size_t>(c.area()));
  for (int y = c.y_min; y <= c.y_max; ++y) {
    auto r = mask.row(y).subspan(c.x_min, c.width());
    out.insert(out.end(), r.begin(), r.end());
  }
  return BinaryMask(c.width(), c.height(), std::move(out));
}

Raster resize_to(const Raster& img, int target_width, int target_height) {
  check_dims(target_width, target_height);
  if (target_width == img.width() && target_height == img.height()) return img;
  std::vector<int> src_x(target_width);
  for (int x = 0; x < target_width; ++x) {
    src_x[x] = static_cast<int>(static_cast<long long>(x) * img.width() / target_width);
  }
  std::vector<std::uint8_t> out(static_cast<std::size_t>(target_width) * target_height);
  for (int y = 0; y < target_height; ++y) {
    const int sy = static_cast<int>(static_cast<long long>(y) * img.height() / target_height);
    auto src = img.row(sy);
    std::uint8_t* dst = out.data() + static_cast<std::size_t>(y) * target_width;
    for (int x = 0; x < target_width; ++x) dst[x] = src[src_x[x]];
  }
  return Raster(target_width, target_height, std::move(out));
}

Raster mask_to_ink_raster(const BinaryMask& ink) {
  std::vector<std::uint8_t> out(ink.size());
  auto bits = ink.bits();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = bits[i] ? kInk : kBackground;
  return Raster(ink.width(), ink.height(), std::move(out));
}

Raster mask_to_raster(const BinaryMask& mask) {
  std::vector<std::uint8_t> out(mask.size());
  auto bits = mask.bits();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = bits[i] ? 255 : 0;
  return Raster(mask.width(), mask.height(), std::move(out));
}

}  // namespace rtm
