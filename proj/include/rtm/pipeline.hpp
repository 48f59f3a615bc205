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

#include <chrono>
#include <memory>
#include <mutex>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rtm/association.hpp"
#include "rtm/detection.hpp"
#include "rtm/distortion.hpp"
#include "rtm/ocr.hpp"

namespace rtm {

struct PipelineConfig {
  std::filesystem::path input_dir;
  std::filesystem::path output_dir;
  std::optional<std::filesystem::path> debug_dir;
  // Unset: default_tolerance(image width).
  std::optional<double> tolerance_px;
  int binarize_threshold = kDefaultThreshold;
  int erode_radius = 1;
  int box_padding_px = 0;
  double min_score = 0.5;
  std::optional<std::filesystem::path> charset_path;
  std::string ocr_engine = "template";
  int jobs = 1;
  bool emit_milepost_rows = false;
  Connectivity connectivity = Connectivity::kEight;
};

// Throws InvalidArgument naming the first field out of range.
void validate(const PipelineConfig& config);

struct ImageReport {
  std::string image_id;
  bool ok = false;
  std::size_t records = 0;
  std::vector<std::string> warnings;
};

struct RunSummary {
  std::size_t images_processed = 0;
  std::size_t images_failed = 0;
  std::size_t records_emitted = 0;
  std::vector<ImageReport> images;  // sorted by image_id
  std::chrono::duration<double> wall_time{};
};

// Supported images directly inside `dir`, sorted by name. Throws IoError
// when the directory cannot be read.
std::vector<std::filesystem::path> list_images(const std::filesystem::path& dir);

// Everything one image needs; shared read-only across workers.
class Pipeline {
 public:
  explicit Pipeline(PipelineConfig config, Detector* detector = nullptr);

  const PipelineConfig& config() const { return config_; }

  // Detections for an image: the attached detector if it works, else the
  // <stem>.json sidecar next to the image.
  DetectionSet detections_for(const std::filesystem::path& image_path, const Raster& img,
                              std::vector<std::string>& warnings) const;

  // Records for one decoded image. Throws on sidecar problems.
  AssociationResult process(const Raster& img, const DetectionSet& detections) const;

  // Decode, process and write <output_dir>/<stem>.csv. Never throws;
  // failures land in the report.
  ImageReport run_image(const std::filesystem::path& image_path) const;

  // The given images, config.jobs at a time.
  RunSummary run(const std::vector<std::filesystem::path>& images) const;

 private:
  PipelineConfig config_;
  Detector* detector_;
  CharsetPolicy charsets_;
  std::unique_ptr<OcrEngine> engine_;
  mutable std::mutex engine_mutex_;
  mutable std::mutex detector_mutex_;
};

// Scans config.input_dir and processes every supported image. Throws
// IoError when the input directory is unreadable.
RunSummary run(const PipelineConfig& config, Detector* detector = nullptr);

}  // namespace rtm
