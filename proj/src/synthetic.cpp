#include "rsd/synthetic.hpp"

#include "rsd/color.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rsd {
namespace {

enum class Region { kBackground, kDisc, kRing };

Region region_of(const SignFrameSpec& s, int x, int y) {
  const double dx = x - s.center_x();
  const double dy = y - s.center_y();
  const double r2 = dx * dx + dy * dy;
  if (s.radius >= 0 && r2 <= static_cast<double>(s.radius) * s.radius) return Region::kDisc;
  const double outer = s.radius + s.ring_width;
  if (outer >= 0 && s.ring_width > 0 && r2 <= outer * outer) return Region::kRing;
  return Region::kBackground;
}

}  // namespace

ImageRGB make_sign_frame(const SignFrameSpec& spec) {
  ImageRGB img(spec.width, spec.height);
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> noise(0.0, spec.noise_sigma > 0 ? spec.noise_sigma : 1.0);
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      ChromaSample c = spec.background;
      switch (region_of(spec, x, y)) {
        case Region::kDisc: c = spec.disc; break;
        case Region::kRing: c = spec.ring; break;
        case Region::kBackground: break;
      }
      double cb = c[0];
      double cr = c[1];
      if (spec.noise_sigma > 0) {
        cb = std::clamp(cb + noise(rng), 0.0, 255.0);
        cr = std::clamp(cr + noise(rng), 0.0, 255.0);
      }
      const auto rgb = ycbcr_to_rgb(spec.luma, cb, cr);
      for (int k = 0; k < 3; ++k) img(x, y, k) = rgb[static_cast<std::size_t>(k)];
    }
  }
  return img;
}

std::int64_t disc_pixel_count(const SignFrameSpec& spec) {
  std::int64_t n = 0;
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) n += region_of(spec, x, y) == Region::kDisc ? 1 : 0;
  }
  return n;
}

ImageRGB make_noise_frame(int width, int height, std::uint64_t seed) {
  ImageRGB img(width, height);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> level(0, 255);
  for (auto& s : img.samples()) s = static_cast<std::uint8_t>(level(rng));
  return img;
}

std::vector<ChromaSample> make_blob_samples(const std::vector<ChromaSample>& centers, int n, double sigma,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma);
  auto level = [](double v) { return static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0)); };
  std::vector<ChromaSample> out;
  out.reserve(centers.size() * static_cast<std::size_t>(n));
  for (const auto& c : centers) {
    for (int i = 0; i < n; ++i) out.push_back({level(c[0] + noise(rng)), level(c[1] + noise(rng))});
  }
  return out;
}

}  // namespace rsd
