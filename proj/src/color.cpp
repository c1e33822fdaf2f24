#include "rsd/color.hpp"

#include <algorithm>
#include <cmath>

namespace rsd {
namespace {

std::uint8_t round_clamp(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
}

// Coefficients are exact in millionths, so the conversion is done in integers.
constexpr std::int64_t kScale = 1'000'000;

std::uint8_t round_clamp_scaled(std::int64_t scaled) {
  // floor division, valid for negative numerators too
  std::int64_t num = scaled + kScale / 2;
  std::int64_t q = num / kScale;
  if (num % kScale != 0 && num < 0) --q;
  return static_cast<std::uint8_t>(std::clamp<std::int64_t>(q, 0, 255));
}

}  // namespace

std::array<std::uint8_t, 2> rgb_to_cbcr(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const std::int64_t cb = 128 * kScale - 168736 * r - 331264 * g + 500000 * b;
  const std::int64_t cr = 128 * kScale + 500000 * r - 418688 * g - 81312 * b;
  return {round_clamp_scaled(cb), round_clamp_scaled(cr)};
}

ImageCbCr rgb_to_cbcr(const ImageRGB& img) {
  ImageCbCr out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const auto [cb, cr] = rgb_to_cbcr(img(x, y, 0), img(x, y, 1), img(x, y, 2));
      out(x, y, 0) = cb;
      out(x, y, 1) = cr;
    }
  }
  return out;
}

std::array<std::uint8_t, 3> ycbcr_to_rgb(double y, double cb, double cr) {
  return {round_clamp(y + 1.402 * (cr - 128.0)),
          round_clamp(y - 0.344136 * (cb - 128.0) - 0.714136 * (cr - 128.0)),
          round_clamp(y + 1.772 * (cb - 128.0))};
}

}  // namespace rsd
