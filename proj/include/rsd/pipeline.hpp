#pragma once

#include "rsd/ccl.hpp"
#include "rsd/centers_io.hpp"
#include "rsd/detector.hpp"
#include "rsd/image.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace rsd {

struct PipelineConfig {
  CenterSet centers = road_sign_centers();
  bool gaussian = true;
  bool median = true;
  std::set<std::uint32_t> skip{0};
  DetectionRule rule;
  double clock_hz = 170e6;
};

struct ClassCount {
  std::string name;
  std::vector<std::uint32_t> center;
  std::int64_t pixels = 0;
};

struct FrameReport {
  std::string image;
  std::vector<ClassCount> classes;
  std::vector<ComponentFeatures> components;
  std::vector<Detection> detections;
  int latency_cycles = 0;
  double est_fps = 0;
};

/// Report plus the intermediate images worth writing out.
struct FrameResult {
  FrameReport report;
  ImageGray segmentation;  ///< class index per pixel, after the optional median
  LabelResult labels;
  ImageRGB annotated;
};

/// chroma -> [gaussian] -> classify -> [median]
ImageGray segment(const PipelineConfig& config, const ImageRGB& img);

/// Full chain: segment -> label -> detect -> annotate.
FrameResult run_pipeline(const PipelineConfig& config, const ImageRGB& img, const std::string& image_name = {});

struct AblationStats {
  std::size_t without_filters = 0;
  std::size_t with_filters = 0;
  /// 100 * (without - with) / without; 0 when there is nothing to remove.
  double reduction_percent = 0;
};

/// Component counts with both filters disabled and with both enabled.
AblationStats ablation_stats(const PipelineConfig& config, const ImageRGB& img);

/// Evenly spaced gray levels (0 -> black, max_label -> white), or a fixed palette when `color`.
ImageRGB render_labels(const ImageGray& labels, std::uint32_t max_label, bool color = false);

/// Stable-key-order JSON rendering of a report.
nlohmann::ordered_json report_to_json(const FrameReport& report);

struct StageCheck {
  std::string stage;
  std::size_t mismatches = 0;
  bool ok() const { return mismatches == 0; }
};

/// Recomputes every stage of one frame with the brute-force oracles and counts disagreements.
std::vector<StageCheck> verify_frame(const PipelineConfig& config, const ImageRGB& img);

}  // namespace rsd
