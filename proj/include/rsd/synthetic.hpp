#pragma once

#include "rsd/image.hpp"
#include "rsd/meanshift.hpp"

#include <cstdint>
#include <vector>

namespace rsd {

/// A disc of one chroma inside a ring of another, on a uniform background, all at constant luma.
struct SignFrameSpec {
  int width = 200;
  int height = 200;
  int radius = 30;      ///< negative: no disc
  int ring_width = 8;   ///< zero or negative: no ring
  ChromaSample background{127, 128};
  ChromaSample disc{88, 151};
  ChromaSample ring{116, 157};
  double luma = 128.0;
  /// Standard deviation of independent Gaussian noise added to Cb and Cr, in levels.
  double noise_sigma = 0.0;
  std::uint64_t seed = 1;

  double center_x() const { return (width - 1) / 2.0; }
  double center_y() const { return (height - 1) / 2.0; }
};

ImageRGB make_sign_frame(const SignFrameSpec& spec);

/// Number of pixel centers inside the disc, i.e. the exact disc area the frame contains.
std::int64_t disc_pixel_count(const SignFrameSpec& spec);

/// Every pixel independently uniform in RGB.
ImageRGB make_noise_frame(int width, int height, std::uint64_t seed);

/// `n` samples from each of `centers`, Gaussian with `sigma` levels per channel, rounded and clamped.
std::vector<ChromaSample> make_blob_samples(const std::vector<ChromaSample>& centers, int n, double sigma,
                                            std::uint64_t seed);

}  // namespace rsd
