#include "rsd/filters.hpp"

#include "rsd/window.hpp"

#include <utility>

namespace rsd {
namespace {

// Shift-and-add weights.
const Eigen::Matrix<int, 3, 3, Eigen::RowMajor> kBinomial = (Eigen::Matrix<int, 3, 3, Eigen::RowMajor>() << 1, 2, 1,
                                                             2, 4, 2, 1, 2, 1)
                                                                .finished();

inline void exchange(std::uint32_t& a, std::uint32_t& b) {
  if (a > b) std::swap(a, b);
}

}  // namespace

ImageCbCr gaussian3x3(const ImageCbCr& img) {
  ImageCbCr out(img.width(), img.height());
  for (int ch = 0; ch < ImageCbCr::channels; ++ch) {
    stream_windows(img, ch, [&](const Window3x3<std::uint8_t>& w) {
      const int acc = (w.cells.cast<int>().array() * kBinomial.array()).sum();
      out(w.cx, w.cy, ch) = static_cast<std::uint8_t>((acc + 8) >> 4);
    });
  }
  return out;
}

std::uint32_t median9(std::array<std::uint32_t, 9> v) {
  // Paeth's median-of-9 network; only v[4] is guaranteed sorted into place.
  exchange(v[1], v[2]); exchange(v[4], v[5]); exchange(v[7], v[8]);
  exchange(v[0], v[1]); exchange(v[3], v[4]); exchange(v[6], v[7]);
  exchange(v[1], v[2]); exchange(v[4], v[5]); exchange(v[7], v[8]);
  exchange(v[0], v[3]); exchange(v[5], v[8]); exchange(v[4], v[7]);
  exchange(v[3], v[6]); exchange(v[1], v[4]); exchange(v[2], v[5]);
  exchange(v[4], v[7]); exchange(v[4], v[2]); exchange(v[6], v[4]);
  exchange(v[4], v[2]);
  return v[4];
}

ImageGray median3x3(const ImageGray& labels) {
  ImageGray out(labels.width(), labels.height());
  stream_windows(labels, 0, [&](const Window3x3<std::uint32_t>& w) {
    std::array<std::uint32_t, 9> cells;
    Eigen::Map<Eigen::Matrix<std::uint32_t, 3, 3, Eigen::RowMajor>>(cells.data()) = w.cells;
    out(w.cx, w.cy) = median9(cells);
  });
  return out;
}

}  // namespace rsd
