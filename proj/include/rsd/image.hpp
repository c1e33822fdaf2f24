#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace rsd {

/// Row-major dense plane; rows = image height, columns = width (times channels).
template <typename Scalar>
using Plane = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Strided view of one channel of an interleaved image.
template <typename Scalar>
using ChannelMap = Eigen::Map<Plane<Scalar>, Eigen::Unaligned, Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>>;
template <typename Scalar>
using ConstChannelMap =
    Eigen::Map<const Plane<Scalar>, Eigen::Unaligned, Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>>;

/// Interleaved image with `Channels` samples per pixel, stored row-major.
template <typename Scalar, int Channels>
class Image {
  static_assert(Channels >= 1);

 public:
  using scalar_type = Scalar;
  static constexpr int channels = Channels;

  Image() = default;

  Image(int width, int height, Scalar fill = Scalar{0}) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
      throw std::invalid_argument("image dimensions must be positive, got " + std::to_string(width) + "x" +
                                  std::to_string(height));
    }
    data_.setConstant(height, static_cast<Eigen::Index>(width) * Channels, fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width_) * height_; }
  bool empty() const { return width_ == 0; }

  Scalar& operator()(int x, int y, int c = 0) { return data_(y, static_cast<Eigen::Index>(x) * Channels + c); }
  Scalar operator()(int x, int y, int c = 0) const { return data_(y, static_cast<Eigen::Index>(x) * Channels + c); }

  bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }

  /// Raw interleaved samples (length = width * height * Channels).
  std::span<Scalar> samples() { return {data_.data(), static_cast<std::size_t>(data_.size())}; }
  std::span<const Scalar> samples() const { return {data_.data(), static_cast<std::size_t>(data_.size())}; }

  const Plane<Scalar>& interleaved() const { return data_; }

  ChannelMap<Scalar> channel(int c) {
    return ChannelMap<Scalar>(data_.data() + c, height_, width_,
                              Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>(data_.cols(), Channels));
  }
  ConstChannelMap<Scalar> channel(int c) const {
    return ConstChannelMap<Scalar>(data_.data() + c, height_, width_,
                                   Eigen::Stride<Eigen::Dynamic, Eigen::Dynamic>(data_.cols(), Channels));
  }

  friend bool operator==(const Image& a, const Image& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && (a.data_ == b.data_).all();
  }

 private:
  int width_ = 0;
  int height_ = 0;
  Plane<Scalar> data_;
};

using ImageRGB = Image<std::uint8_t, 3>;
using ImageCbCr = Image<std::uint8_t, 2>;
/// Class indices (segmentation output) or component ids (labeling output).
using ImageGray = Image<std::uint32_t, 1>;

}  // namespace rsd
