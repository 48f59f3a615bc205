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

#include "rtm/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rtm/csv.hpp"
#include "rtm/errors.hpp"
#include "rtm/image_io.hpp"

namespace rtm {

void validate(const PipelineConfig& c) {
  if (c.binarize_threshold < 0 || c.binarize_threshold > 255) {
    throw InvalidArgument("threshold must be within 0..255");
  }
  if (c.erode_radius < 0 || c.erode_radius > 3) {
    throw InvalidArgument("erode radius must be within 0..3");
  }
  if (c.box_padding_px < 0) throw InvalidArgument("padding must be >= 0");
  if (!(c.min_score >= 0.0 && c.min_score <= 1.0)) {
    throw InvalidArgument("min-score must be within [0,1]");
  }
  if (c.tolerance_px && !(*c.tolerance_px >= 0.0)) {
    throw InvalidArgument("tolerance must be >= 0");
  }
  if (c.jobs < 1) throw InvalidArgument("jobs must be >= 1");
}

std::vector<std::filesystem::path> list_images(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError("input directory is not readable: " + dir.string());
  }
  std::vector<std::filesystem::path> out;
  std::filesystem::directory_iterator it(dir, ec);
  if (ec) throw IoError("cannot list " + dir.string() + ": " + ec.message());
  for (const auto& entry : it) {
    if (entry.is_regular_file() && is_supported_image(entry.path())) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pipeline::Pipeline(PipelineConfig config, Detector* detector)
    : config_(std::move(config)), detector_(detector) {
  validate(config_);
  charsets_ = config_.charset_path ? load_charset_policy(*config_.charset_path)
                                   : default_charset_policy();
  engine_ = make_ocr_engine(config_.ocr_engine, config_.erode_radius);
}

DetectionSet Pipeline::detections_for(const std::filesystem::path& image_path,
                                      const Raster& img,
                                      std::vector<std::string>& warnings) const {
  const std::string stem = image_path.stem().string();
  if (detector_ != nullptr) {
    try {
      DetectionSet set;
      if (detector_->concurrent_safe()) {
        set = detector_->detect(img, stem);
      } else {
        std::lock_guard lock(detector_mutex_);
        set = detector_->detect(img, stem);
      }
      return set;
    } catch (const DetectorUnavailable& e) {
      warnings.push_back(std::string("detector unavailable, using sidecar: ") + e.what());
    }
  }
  auto sidecar = image_path;
  sidecar.replace_extension(".json");
  DetectionSet set = load_detections(sidecar);
  if (set.image_id != stem) {
    warnings.push_back("sidecar image_id '" + set.image_id + "' differs from file name");
  }
  return set;
}

AssociationResult Pipeline::process(const Raster& img, const DetectionSet& detections) const {
  if (detections.image_width != img.width() || detections.image_height != img.height()) {
    throw Error("detections are for a " + std::to_string(detections.image_width) + "x" +
                std::to_string(detections.image_height) + " image, got " +
                std::to_string(img.width()) + "x" + std::to_string(img.height()));
  }
  const DetectionSet kept = filter_by_score(detections, config_.min_score);
  const CleanParams params{config_.binarize_threshold, config_.erode_radius,
                           config_.connectivity};

  std::vector<std::string> warnings;
  std::vector<std::string> texts;
  texts.reserve(kept.detections.size());
  for (std::size_t i = 0; i < kept.detections.size(); ++i) {
    const Detection& d = kept.detections[i];
    const BoundingBox box = pad_box(d.box, config_.box_padding_px, img.width(), img.height());
    const Raster region = crop(img, box);
    const CleanedCrop cleaned = clean_crop(region, params, box);
    if (config_.debug_dir) {
      write_debug_triptych(*config_.debug_dir,
                           kept.image_id + "_" + std::to_string(i) + "_" +
                               std::string(class_label(d.cls)),
                           region, cleaned);
    }
    if (cleaned.all_ink_removed()) {
      warnings.push_back("detection " + std::to_string(i) + " (" +
                         std::string(class_label(d.cls)) + "): all ink removed");
    }

    std::string text;
    try {
      OcrResult raw;
      if (engine_->concurrent_safe()) {
        raw = engine_->recognize(to_ocr_raster(cleaned));
      } else {
        std::lock_guard lock(engine_mutex_);
        raw = engine_->recognize(to_ocr_raster(cleaned));
      }
      text = filter_text(raw, d.cls, charsets_);
    } catch (const OcrFailure& e) {
      warnings.push_back("detection " + std::to_string(i) + ": " + e.what());
    }
    texts.push_back(std::move(text));
  }

  const AssociationConfig cfg{config_.tolerance_px.value_or(default_tolerance(img.width()))};
  AssociationResult result = associate_all(kept, texts, cfg);
  if (config_.emit_milepost_rows) {
    for (std::size_t i = 0; i < kept.detections.size(); ++i) {
      const Detection& d = kept.detections[i];
      if (d.cls != ComponentClass::kMilepost) continue;
      auto values = parse_milepost_numbers(texts[i]);
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      result.records.push_back({kept.image_id, d.cls, texts[i], std::move(values), d.box, d.score});
    }
    sort_records(result.records);
  }
  warnings.insert(warnings.end(), result.warnings.begin(), result.warnings.end());
  result.warnings = std::move(warnings);
  return result;
}

ImageReport Pipeline::run_image(const std::filesystem::path& image_path) const {
  ImageReport report;
  report.image_id = image_path.stem().string();
  try {
    const Raster img = load_image(image_path);
    DetectionSet set = detections_for(image_path, img, report.warnings);
    set.image_id = report.image_id;
    AssociationResult result = process(img, set);
    emit_csv(result.records, config_.output_dir / (report.image_id + ".csv"));
    report.records = result.records.size();
    report.warnings.insert(report.warnings.end(), result.warnings.begin(),
                           result.warnings.end());
    report.ok = true;
  } catch (const std::exception& e) {
    report.warnings.push_back(std::string("skipped: ") + e.what());
  }
  return report;
}

RunSummary Pipeline::run(const std::vector<std::filesystem::path>& images) const {
  const auto start = std::chrono::steady_clock::now();
  std::vector<ImageReport> reports(images.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < images.size(); i = next++) {
      reports[i] = run_image(images[i]);
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(static_cast<std::size_t>(config_.jobs), images.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  RunSummary summary;
  for (auto& r : reports) {
    if (r.ok) {
      ++summary.images_processed;
      summary.records_emitted += r.records;
    } else {
      ++summary.images_failed;
    }
    summary.images.push_back(std::move(r));
  }
  std::sort(summary.images.begin(), summary.images.end(),
            [](const ImageReport& a, const ImageReport& b) { return a.image_id < b.image_id; });
  summary.wall_time = std::chrono::steady_clock::now() - start;
  return summary;
}

RunSummary run(const PipelineConfig& config, Detector* detector) {
  validate(config);
  const auto images = list_images(config.input_dir);
  std::filesystem::create_directories(config.output_dir);
  Pipeline pipeline(config, detector);
  return pipeline.run(images);
}

}  // namespace rtm
