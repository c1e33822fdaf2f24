#pragma once

#include "rsd/mdc.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace rsd {

/// A programmed register file plus the human-readable class names, in label order.
struct CenterSet {
  ClassCenterFile file;
  std::vector<std::string> names;
};

/// Parses {"resolution_bits": R, "classes": [{"name": ..., "center": [...]}, ...]}.
CenterSet parse_centers_json(const std::string& text);
std::string to_centers_json(const CenterSet& set);

CenterSet read_centers_file(const std::filesystem::path& path);
void write_centers_file(const std::filesystem::path& path, const CenterSet& set);

/// Background, Yellow, Red, Red means in (Cb, Cr), as measured on road-sign imagery.
CenterSet road_sign_centers();

}  // namespace rsd
