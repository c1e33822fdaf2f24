#include "rsd/ccl.hpp"

#include <algorithm>
#include <limits>

namespace rsd {
namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

}  // namespace

void ComponentFeatures::absorb(const ComponentFeatures& other) {
  area += other.area;
  sum_x += other.sum_x;
  sum_y += other.sum_y;
  min_x = std::min(min_x, other.min_x);
  min_y = std::min(min_y, other.min_y);
  max_x = std::max(max_x, other.max_x);
  max_y = std::max(max_y, other.max_y);
}

std::uint32_t MergeTable::create(std::uint32_t class_index, int x, int y) {
  const auto id = static_cast<std::uint32_t>(parent_.size());
  parent_.push_back(id);
  ComponentFeatures f;
  f.class_index = class_index;
  f.area = 1;
  f.min_x = f.max_x = x;
  f.min_y = f.max_y = y;
  f.sum_x = x;
  f.sum_y = y;
  features_.push_back(f);
  return id;
}

void MergeTable::add_pixel(std::uint32_t id, int x, int y) {
  auto& f = features_[find(id)];
  ++f.area;
  f.sum_x += x;
  f.sum_y += y;
  f.min_x = std::min(f.min_x, x);
  f.max_x = std::max(f.max_x, x);
  f.min_y = std::min(f.min_y, y);
  f.max_y = std::max(f.max_y, y);
}

std::uint32_t MergeTable::find(std::uint32_t id) {
  std::uint32_t root = id;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[id] != root) {
    const auto next = parent_[id];
    parent_[id] = root;
    id = next;
  }
  return root;
}

std::uint32_t MergeTable::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return a;
  if (b < a) std::swap(a, b);
  parent_[b] = a;
  features_[a].absorb(features_[b]);
  return a;
}

LabelResult label_components(const ImageGray& seg, const std::set<std::uint32_t>& skip) {
  const int w = seg.width();
  const int h = seg.height();
  MergeTable table;

  // Line buffer: classes and provisional ids of the row above.
  std::vector<std::uint32_t> above_class(static_cast<std::size_t>(w), kNone);
  std::vector<std::uint32_t> above_id(static_cast<std::size_t>(w), kNone);
  ImageGray provisional(w, h, kNone);

  for (int y = 0; y < h; ++y) {
    std::uint32_t left_class = kNone;
    std::uint32_t left_id = kNone;
    for (int x = 0; x < w; ++x) {
      const std::uint32_t cls = seg(x, y);
      std::uint32_t id = kNone;
      if (!skip.contains(cls)) {
        const bool join_left = left_id != kNone && left_class == cls;
        const bool join_up = above_id[static_cast<std::size_t>(x)] != kNone && above_class[static_cast<std::size_t>(x)] == cls;
        if (join_left && join_up) {
          id = table.unite(left_id, above_id[static_cast<std::size_t>(x)]);
          table.add_pixel(id, x, y);
        } else if (join_left) {
          id = left_id;
          table.add_pixel(id, x, y);
        } else if (join_up) {
          id = above_id[static_cast<std::size_t>(x)];
          table.add_pixel(id, x, y);
        } else {
          id = table.create(cls, x, y);
        }
      }
      provisional(x, y) = id;
      above_class[static_cast<std::size_t>(x)] = cls;
      above_id[static_cast<std::size_t>(x)] = id;
      left_class = cls;
      left_id = id;
    }
  }

  // Roots are the smallest provisional id of their component, i.e. the one created at the
  // component's first raster pixel, so ascending roots give first-encounter order.
  LabelResult result;
  std::vector<std::uint32_t> dense(table.size(), 0);
  for (std::uint32_t p = 0; p < table.size(); ++p) {
    if (table.find(p) != p) continue;
    ComponentFeatures f = table.features(p);
    f.id = static_cast<std::uint32_t>(result.components.size() + 1);
    dense[p] = f.id;
    result.components.push_back(f);
  }

  result.ids = ImageGray(w, h, 0);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const auto p = provisional(x, y);
      if (p != kNone) result.ids(x, y) = dense[table.find(p)];
    }
  }
  return result;
}

std::size_t count_components(const ImageGray& seg, const std::set<std::uint32_t>& skip) {
  return label_components(seg, skip).components.size();
}

}  // namespace rsd
