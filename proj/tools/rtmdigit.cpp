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

// rtmdigit: batch digitization of railway technical map rasters.
//
//   rtmdigit digitize --input DIR --output DIR [options]
//   rtmdigit evaluate --preds DIR --gt DIR [--iou F] [--min-score F]
//   rtmdigit synth --seed N --count N --out DIR [--hard]
//
// Exit status: 0 success, 1 fatal error, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rtm/errors.hpp"
#include "rtm/evalkit.hpp"
#include "rtm/pipeline.hpp"
#include "rtm/simd/kernels.hpp"
#include "rtm/synthgen.hpp"

namespace {

constexpr int kExitFatal = 1;
constexpr int kExitUsage = 2;

int run_digitize(const rtm::PipelineConfig& config) {
  const rtm::RunSummary summary = rtm::run(config);
  for (const auto& image : summary.images) {
    for (const auto& w : image.warnings) {
      std::cerr << "warning: " << image.image_id << ": " << w << "\n";
    }
  }
  std::cerr << "processed " << summary.images_processed << " image(s), "
            << summary.records_emitted << " record(s), " << summary.images_failed
            << " skipped, " << summary.wall_time.count() << " s ("
            << rtm::simd::isa_name(rtm::simd::active_kernels().isa) << " kernels)\n";
  return 0;
}

int run_evaluate(const std::string& preds, const std::string& gt, double iou_threshold,
                 double min_score, const std::string& csv_path) {
  const rtm::EvalReport report = rtm::evaluate_dirs(preds, gt, iou_threshold, min_score);
  std::cout << rtm::format_report_text(report, iou_threshold);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw rtm::IoError("cannot write " + csv_path);
    out << rtm::format_report_csv(report);
  }
  return 0;
}

int run_synth(std::uint64_t seed, int count, const std::string& out_dir, bool hard,
              int width, int height) {
  for (int i = 0; i < count; ++i) {
    const auto bundle = rtm::generate(rtm::random_layout(seed + i, width, height, hard));
    rtm::write_bundle(out_dir, bundle);
  }
  std::cerr << "wrote " << count << " synthetic page(s) to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digitize railway technical map rasters into per-image CSV files"};
  app.set_config("--config", "", "INI/TOML file mirroring the command-line flags");
  app.require_subcommand(1);

  rtm::PipelineConfig config;
  std::string input_dir;
  std::string output_dir;
  std::string debug_dir;
  std::optional<double> tolerance;
  std::string charsets;
  int connectivity = 8;
  auto* digitize = app.add_subcommand("digitize", "Run the extraction pipeline over a directory");
  digitize->add_option("--input", input_dir, "Directory of RTM images with .json sidecars")
      ->required();
  digitize->add_option("--output", output_dir, "Directory for <image_id>.csv files")->required();
  digitize->add_option("--debug", debug_dir, "Write per-crop debug images here");
  digitize->add_option("--tolerance", tolerance,
                       "Association tolerance in pixels (default: 50 at 4500 px width, scaled)")
      ->check(CLI::NonNegativeNumber);
  digitize->add_option("--threshold", config.binarize_threshold, "Binarization threshold")
      ->check(CLI::Range(0, 255))
      ->capture_default_str();
  digitize->add_option("--erode", config.erode_radius, "Glyph erosion radius, 0 disables")
      ->check(CLI::Range(0, 3))
      ->capture_default_str();
  digitize->add_option("--pad", config.box_padding_px, "Pixels added around each box")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  digitize->add_option("--min-score", config.min_score, "Drop detections below this score")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  digitize->add_option("--charsets", charsets, "Per-class character list file (JSON)");
  digitize->add_option("--ocr", config.ocr_engine, "template | cmd:<command>")
      ->capture_default_str();
  digitize->add_option("--jobs", config.jobs, "Images processed in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  digitize->add_option("--connectivity", connectivity, "Region growing connectivity")
      ->check(CLI::IsMember({4, 8}))
      ->capture_default_str();
  digitize->add_flag("--emit-milepost-rows", config.emit_milepost_rows,
                     "Also write one row per milepost anchor");

  std::string preds_dir;
  std::string gt_dir;
  double iou_threshold = rtm::kDefaultIouThreshold;
  double eval_min_score = rtm::kDefaultEvalMinScore;
  std::string report_csv;
  auto* evaluate = app.add_subcommand("evaluate", "Score detections against ground truth");
  evaluate->add_option("--preds", preds_dir, "Directory of prediction sidecars")->required();
  evaluate->add_option("--gt", gt_dir, "Directory of ground-truth sidecars")->required();
  evaluate->add_option("--iou", iou_threshold, "IoU match threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  evaluate->add_option("--min-score", eval_min_score, "Score threshold applied to predictions")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  evaluate->add_option("--csv", report_csv, "Also write the report as CSV");

  std::uint64_t seed = 1;
  int count = 1;
  std::string synth_out;
  bool hard = false;
  int width = rtm::kQuarterWidth;
  int height = rtm::kQuarterHeight;
  auto* synth = app.add_subcommand("synth", "Generate synthetic pages with ground truth");
  synth->add_option("--seed", seed, "First seed")->required();
  synth->add_option("--count", count, "Number of pages")->required()->check(CLI::PositiveNumber);
  synth->add_option("--out", synth_out, "Output directory")->required();
  synth->add_flag("--hard", hard, "Let strokes cross the text");
  synth->add_option("--width", width, "Page width")->check(CLI::PositiveNumber)->capture_default_str();
  synth->add_option("--height", height, "Page height")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*digitize) {
      config.input_dir = input_dir;
      config.output_dir = output_dir;
      if (!debug_dir.empty()) config.debug_dir = debug_dir;
      if (!charsets.empty()) config.charset_path = charsets;
      config.tolerance_px = tolerance;
      config.connectivity =
          connectivity == 4 ? rtm::Connectivity::kFour : rtm::Connectivity::kEight;
      return run_digitize(config);
    }
    if (*evaluate) {
      return run_evaluate(preds_dir, gt_dir, iou_threshold, eval_min_score, report_csv);
    }
    if (*synth) return run_synth(seed, count, synth_out, hard, width, height);
  } catch (const rtm::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitUsage;
}
