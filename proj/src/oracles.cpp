#include "rsd/oracles.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stack>
#include <utility>

namespace rsd::oracle {

int naive_classify(const Eigen::Array<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic>& centers,
                   const Eigen::Array<std::uint32_t, Eigen::Dynamic, 1>& x) {
  int best = -1;
  long long best_distance = 0;
  for (Eigen::Index j = 0; j < centers.rows(); ++j) {
    long long d = 0;
    for (Eigen::Index k = 0; k < centers.cols(); ++k) {
      d += std::llabs(static_cast<long long>(x(k)) - static_cast<long long>(centers(j, k)));
    }
    if (best < 0 || d < best_distance) {
      best = static_cast<int>(j);
      best_distance = d;
    }
  }
  return best;
}

LabelResult flood_fill_label(const ImageGray& seg, const std::set<std::uint32_t>& skip) {
  const int w = seg.width();
  const int h = seg.height();
  LabelResult out;
  out.ids = ImageGray(w, h, 0);
  std::vector<bool> visited(seg.pixel_count(), false);
  auto at = [w](int x, int y) { return static_cast<std::size_t>(y) * w + x; };

  for (int y0 = 0; y0 < h; ++y0) {
    for (int x0 = 0; x0 < w; ++x0) {
      const auto cls = seg(x0, y0);
      if (visited[at(x0, y0)] || skip.contains(cls)) continue;

      ComponentFeatures f;
      f.id = static_cast<std::uint32_t>(out.components.size() + 1);
      f.class_index = cls;
      f.min_x = f.max_x = x0;
      f.min_y = f.max_y = y0;

      std::stack<std::pair<int, int>> todo;
      todo.push({x0, y0});
      visited[at(x0, y0)] = true;
      while (!todo.empty()) {
        const auto [x, y] = todo.top();
        todo.pop();
        out.ids(x, y) = f.id;
        ++f.area;
        f.sum_x += x;
        f.sum_y += y;
        f.min_x = std::min(f.min_x, x);
        f.max_x = std::max(f.max_x, x);
        f.min_y = std::min(f.min_y, y);
        f.max_y = std::max(f.max_y, y);
        const std::array<std::pair<int, int>, 4> nbrs{{{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}}};
        for (const auto& [nx, ny] : nbrs) {
          if (!seg.contains(nx, ny) || visited[at(nx, ny)] || seg(nx, ny) != cls) continue;
          visited[at(nx, ny)] = true;
          todo.push({nx, ny});
        }
      }
      out.components.push_back(f);
    }
  }
  return out;
}

ImageGray sort_median3x3(const ImageGray& img) {
  ImageGray out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      std::array<std::uint32_t, 9> v{};
      int k = 0;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          v[static_cast<std::size_t>(k++)] =
              img(std::clamp(x + dx, 0, img.width() - 1), std::clamp(y + dy, 0, img.height() - 1));
        }
      }
      std::sort(v.begin(), v.end());
      out(x, y) = v[4];
    }
  }
  return out;
}

}  // namespace rsd::oracle
