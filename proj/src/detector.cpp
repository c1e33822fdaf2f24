#include "rsd/detector.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>
#include <string>

namespace rsd {

Ratio Ratio::parse(std::string_view text) {
  Ratio r{0, 1};
  bool seen_digit = false;
  bool fraction = false;
  for (const char c : text) {
    if (c == '.' && !fraction) {
      fraction = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("not a non-negative decimal: '" + std::string(text) + "'");
    }
    seen_digit = true;
    if (r.num > (std::numeric_limits<std::int64_t>::max() - 9) / 10 || (fraction && r.den > 1'000'000'000'000)) {
      throw std::invalid_argument("too many digits in '" + std::string(text) + "'");
    }
    r.num = r.num * 10 + (c - '0');
    if (fraction) r.den *= 10;
  }
  if (!seen_digit) throw std::invalid_argument("not a non-negative decimal: '" + std::string(text) + "'");
  return r;
}

void DetectionRule::validate() const {
  if (ratio_min.den <= 0 || ratio_max.den <= 0) throw std::invalid_argument("ratio denominators must be positive");
  if (ratio_min.num <= 0) throw std::invalid_argument("ratio_min must be positive");
  // ratio_min < ratio_max, cross-multiplied
  if (!(ratio_min.num * ratio_max.den < ratio_max.num * ratio_min.den)) {
    throw std::invalid_argument("ratio_min must be smaller than ratio_max");
  }
  if (area_min < 1) throw std::invalid_argument("area_min must be at least 1");
}

std::vector<Detection> detect(const std::vector<ComponentFeatures>& components, const DetectionRule& rule) {
  rule.validate();
  std::vector<Detection> out;
  for (const auto& c : components) {
    if (c.class_index != rule.target_class) continue;
    if (c.area <= rule.area_min) continue;
    const std::int64_t w = c.width();
    const std::int64_t h = c.height();
    // ratio_min < w/h  <=>  ratio_min.num * h < w * ratio_min.den  (h, den > 0)
    if (!(rule.ratio_min.num * h < w * rule.ratio_min.den)) continue;
    if (!(w * rule.ratio_max.den < rule.ratio_max.num * h)) continue;
    out.push_back({c.id, c.min_x, c.min_y, c.max_x, c.max_y, c.area, c.centroid_x(), c.centroid_y()});
  }
  return out;
}

ImageRGB annotate(ImageRGB img, const std::vector<Detection>& detections) {
  auto paint = [&img](int x, int y) {
    img(x, y, 0) = 0;
    img(x, y, 1) = 255;
    img(x, y, 2) = 0;
  };
  for (const auto& d : detections) {
    if (d.min_x < 0 || d.min_y < 0 || d.max_x >= img.width() || d.max_y >= img.height() || d.min_x > d.max_x ||
        d.min_y > d.max_y) {
      throw std::out_of_range("detection " + std::to_string(d.component_id) + " bounding box outside the image");
    }
    for (int x = d.min_x; x <= d.max_x; ++x) {
      paint(x, d.min_y);
      paint(x, d.max_y);
    }
    for (int y = d.min_y; y <= d.max_y; ++y) {
      paint(d.min_x, y);
      paint(d.max_x, y);
    }
  }
  return img;
}

}  // namespace rsd
