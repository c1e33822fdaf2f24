#pragma once

// Brute-force reference implementations. They share no code with the streaming,
// union-find or pipelined paths they are used to check.

#include "rsd/ccl.hpp"
#include "rsd/image.hpp"
#include "rsd/mdc.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <set>
#include <vector>

namespace rsd::oracle {

/// Full scan over all classes, exact argmin, ties to the smallest index.
int naive_classify(const Eigen::Array<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic>& centers,
                   const Eigen::Array<std::uint32_t, Eigen::Dynamic, 1>& x);

/// Stack-based 4-connected flood fill. Ids are assigned in raster order of each component's
/// first pixel; skipped classes keep id 0.
LabelResult flood_fill_label(const ImageGray& seg, const std::set<std::uint32_t>& skip = {});

/// Direct 9-tap convolution of one channel with clamped coordinates; each output is
/// (sum + divisor/2) / divisor.
template <typename Scalar, int Channels>
Image<Scalar, Channels> dense_convolve3x3(const Image<Scalar, Channels>& img,
                                          const Eigen::Matrix<int, 3, 3, Eigen::RowMajor>& kernel, int divisor) {
  Image<Scalar, Channels> out(img.width(), img.height());
  for (int c = 0; c < Channels; ++c) {
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < img.width(); ++x) {
        long long acc = 0;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int sx = x + dx < 0 ? 0 : (x + dx >= img.width() ? img.width() - 1 : x + dx);
            const int sy = y + dy < 0 ? 0 : (y + dy >= img.height() ? img.height() - 1 : y + dy);
            acc += static_cast<long long>(kernel(dy + 1, dx + 1)) * img(sx, sy, c);
          }
        }
        out(x, y, c) = static_cast<Scalar>((acc + divisor / 2) / divisor);
      }
    }
  }
  return out;
}

/// Median by fully sorting each clamped 3x3 neighborhood.
ImageGray sort_median3x3(const ImageGray& img);

}  // namespace rsd::oracle
