#pragma once

#include "rsd/image.hpp"

#include <array>
#include <cstdint>

namespace rsd {

/// Binomial [1 2 1; 2 4 2; 1 2 1] / 16 smoothing of each chroma channel, rounded half-up,
/// edge-replicated borders.
ImageCbCr gaussian3x3(const ImageCbCr& img);

/// Median of each 3x3 neighborhood of a class-index image, edge-replicated borders.
ImageGray median3x3(const ImageGray& labels);

/// Exact median of nine values via a 19-exchange sorting network.
std::uint32_t median9(std::array<std::uint32_t, 9> v);

}  // namespace rsd
