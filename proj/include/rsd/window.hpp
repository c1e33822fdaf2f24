#pragma once

#include "rsd/image.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsd {

/// 3x3 neighborhood around (cx, cy); cells(r, c) is the pixel at (cx + c - 1, cy + r - 1)
/// after edge replication.
template <typename Scalar>
struct Window3x3 {
  Eigen::Matrix<Scalar, 3, 3, Eigen::RowMajor> cells;
  int cx = 0;
  int cy = 0;
};

class StreamLengthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Line buffer turning a raster pixel stream into one 3x3 window per pixel, with edge replication.
///
/// Retains the most recent 2*width + 3 pixels. A window centered at (x, y) is emitted as soon as
/// the pixel at (min(x+1, w-1), min(y+1, h-1)) has arrived; windows along the bottom row are
/// completed by finish().
template <typename Scalar>
class WindowStream {
 public:
  WindowStream(int width, int height)
      : width_(width), height_(height), ring_(static_cast<std::size_t>(2 * width + 3)) {
    if (width < 1 || height < 1) throw std::invalid_argument("window stream needs positive dimensions");
  }

  std::size_t capacity() const { return ring_.size(); }
  std::size_t received() const { return received_; }
  std::size_t emitted() const { return next_center_; }
  std::size_t total() const { return static_cast<std::size_t>(width_) * height_; }

  /// Accepts the next raster pixel and calls `sink(const Window3x3&)` for each window that became ready.
  template <typename Sink>
  void push(Scalar value, Sink&& sink) {
    if (received_ >= total()) {
      throw StreamLengthError("stream longer than " + std::to_string(total()) + " pixels");
    }
    ring_[received_ % ring_.size()] = value;
    ++received_;
    drain(sink);
  }

  /// Verifies the stream length; all windows have been emitted once this returns.
  template <typename Sink>
  void finish(Sink&& sink) {
    if (received_ != total()) {
      throw StreamLengthError("stream length mismatch: got " + std::to_string(received_) + " pixels, expected " +
                              std::to_string(total()));
    }
    drain(sink);
  }

 private:
  std::size_t index_of(int x, int y) const { return static_cast<std::size_t>(y) * width_ + x; }

  template <typename Sink>
  void drain(Sink& sink) {
    while (next_center_ < total()) {
      const int cx = static_cast<int>(next_center_ % width_);
      const int cy = static_cast<int>(next_center_ / width_);
      const std::size_t needed = index_of(std::min(cx + 1, width_ - 1), std::min(cy + 1, height_ - 1));
      if (needed >= received_) return;

      Window3x3<Scalar> w;
      w.cx = cx;
      w.cy = cy;
      for (int r = 0; r < 3; ++r) {
        const int y = std::clamp(cy + r - 1, 0, height_ - 1);
        for (int c = 0; c < 3; ++c) {
          const int x = std::clamp(cx + c - 1, 0, width_ - 1);
          w.cells(r, c) = ring_[index_of(x, y) % ring_.size()];
        }
      }
      sink(static_cast<const Window3x3<Scalar>&>(w));
      ++next_center_;
    }
  }

  int width_;
  int height_;
  std::vector<Scalar> ring_;
  std::size_t received_ = 0;
  std::size_t next_center_ = 0;
};

/// Streams one channel of `img` through a WindowStream in raster order.
template <typename Scalar, int Channels, typename Sink>
void stream_windows(const Image<Scalar, Channels>& img, int channel, Sink&& sink) {
  WindowStream<Scalar> stream(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) stream.push(img(x, y, channel), sink);
  }
  stream.finish(sink);
}

}  // namespace rsd
