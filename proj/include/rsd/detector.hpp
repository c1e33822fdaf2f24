#pragma once

#include "rsd/ccl.hpp"
#include "rsd/image.hpp"

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace rsd {

/// Exact non-negative rational threshold.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  /// Parses a decimal literal such as "0.7" or "3" without going through floating point.
  static Ratio parse(std::string_view text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct DetectionRule {
  std::uint32_t target_class = 1;
  Ratio ratio_min{7, 10};
  Ratio ratio_max{3, 1};
  std::int64_t area_min = 200;

  void validate() const;
};

struct Detection {
  std::uint32_t component_id = 0;
  int min_x = 0;
  int min_y = 0;
  int max_x = 0;
  int max_y = 0;
  std::int64_t area = 0;
  double centroid_x = 0;
  double centroid_y = 0;
};

/// Keeps components of the target class with ratio_min < width/height < ratio_max and
/// area > area_min. Input order is preserved.
std::vector<Detection> detect(const std::vector<ComponentFeatures>& components, const DetectionRule& rule = {});

/// Draws a one-pixel pure green rectangle on each detection's bounding box.
ImageRGB annotate(ImageRGB img, const std::vector<Detection>& detections);

}  // namespace rsd
