#pragma once

#include "rsd/image.hpp"

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsd {

/// Decoding failure; `offset` is the byte position where the problem was found.
class PnmError : public std::runtime_error {
 public:
  PnmError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes a P3 or P6 pixmap with maxval 255.
ImageRGB load_pnm(std::span<const std::uint8_t> bytes);

/// Encodes as binary P6, header "P6 <w> <h> 255\n".
std::vector<std::uint8_t> save_pnm(const ImageRGB& img);

ImageRGB read_pnm_file(const std::filesystem::path& path);
void write_pnm_file(const std::filesystem::path& path, const ImageRGB& img);

}  // namespace rsd
