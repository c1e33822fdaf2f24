#pragma once

#include "rsd/image.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace rsd {

/// Per-component accumulators gathered during the labeling scan.
struct ComponentFeatures {
  std::uint32_t id = 0;
  std::uint32_t class_index = 0;
  std::int64_t area = 0;
  int min_x = 0;
  int min_y = 0;
  int max_x = 0;
  int max_y = 0;
  std::int64_t sum_x = 0;
  std::int64_t sum_y = 0;

  int width() const { return max_x - min_x + 1; }
  int height() const { return max_y - min_y + 1; }
  double centroid_x() const { return static_cast<double>(sum_x) / static_cast<double>(area); }
  double centroid_y() const { return static_cast<double>(sum_y) / static_cast<double>(area); }

  /// Folds another component's accumulators into this one.
  void absorb(const ComponentFeatures& other);

  friend bool operator==(const ComponentFeatures&, const ComponentFeatures&) = default;
};

/// Union-find over provisional ids with per-root feature accumulators.
class MergeTable {
 public:
  /// Starts a new provisional component at (x, y).
  std::uint32_t create(std::uint32_t class_index, int x, int y);
  void add_pixel(std::uint32_t id, int x, int y);
  /// Joins two provisional components; the smaller root survives.
  std::uint32_t unite(std::uint32_t a, std::uint32_t b);
  std::uint32_t find(std::uint32_t id);

  std::size_t size() const { return parent_.size(); }
  const ComponentFeatures& features(std::uint32_t root) const { return features_[root]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<ComponentFeatures> features_;
};

struct LabelResult {
  ImageGray ids;  ///< 0 for skipped classes, otherwise 1..N
  std::vector<ComponentFeatures> components;  ///< components[k].id == k + 1
};

/// Single raster scan, 4-connectivity, equal class required for adjacency. Component ids are
/// dense 1..N in order of each component's first pixel in raster order.
LabelResult label_components(const ImageGray& seg, const std::set<std::uint32_t>& skip = {});

std::size_t count_components(const ImageGray& seg, const std::set<std::uint32_t>& skip = {});

}  // namespace rsd
