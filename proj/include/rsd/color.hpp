#pragma once

#include "rsd/image.hpp"

#include <array>
#include <cstdint>

namespace rsd {

/// Full-range BT.601 chroma of one RGB pixel; luma is dropped.
std::array<std::uint8_t, 2> rgb_to_cbcr(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Per-pixel chroma extraction. Each channel is rounded half-up and clamped to [0, 255].
ImageCbCr rgb_to_cbcr(const ImageRGB& img);

/// Inverse full-range BT.601, used to synthesize RGB frames with a prescribed chroma.
std::array<std::uint8_t, 3> ycbcr_to_rgb(double y, double cb, double cr);

}  // namespace rsd
