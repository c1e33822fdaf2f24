#include "rsd/meanshift.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rsd {
namespace {

constexpr int kLevels = 256;

// Same predicate as the direct scan, so both routes agree on boundary samples.
inline bool in_window(int cb, int cr, const Eigen::Vector2d& y, double bandwidth) {
  const double dx = cb / 255.0 - y.x();
  const double dy = cr / 255.0 - y.y();
  return dx * dx + dy * dy <= bandwidth * bandwidth;
}

Eigen::Vector2d converge(const ChromaHistogram& density, Eigen::Vector2d y, const MeanShiftConfig& config) {
  for (int it = 0; it < config.max_iterations; ++it) {
    const auto next = density.step(y, config.bandwidth);
    if (!next) break;
    const double shift = (*next - y).norm();
    y = *next;
    if (shift < config.tolerance) break;
  }
  return y;
}

struct WeightedPoint {
  Eigen::Vector2d p;
  std::int64_t weight;
};

// Merges until every pair of modes is farther apart than `radius`. Returns true if anything merged.
bool merge_close(std::vector<WeightedPoint>& modes, double radius) {
  bool merged_any = false;
  for (;;) {
    double best = radius;
    std::size_t bi = 0;
    std::size_t bj = 0;
    bool found = false;
    for (std::size_t i = 0; i < modes.size(); ++i) {
      for (std::size_t j = i + 1; j < modes.size(); ++j) {
        const double d = (modes[i].p - modes[j].p).norm();
        if (d <= best && (!found || d < best)) {
          best = d;
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    if (!found) return merged_any;
    const auto wi = static_cast<double>(modes[bi].weight);
    const auto wj = static_cast<double>(modes[bj].weight);
    modes[bi].p = (modes[bi].p * wi + modes[bj].p * wj) / (wi + wj);
    modes[bi].weight += modes[bj].weight;
    modes.erase(modes.begin() + static_cast<std::ptrdiff_t>(bj));
    merged_any = true;
  }
}

std::uint8_t to_level(double normalized) {
  return static_cast<std::uint8_t>(std::clamp(std::floor(normalized * 255.0 + 0.5), 0.0, 255.0));
}

}  // namespace

ChromaHistogram::ChromaHistogram(std::span<const ChromaSample> samples)
    : count_(Table::Zero(kLevels, kLevels + 1)), sum_cr_(Table::Zero(kLevels, kLevels + 1)) {
  Table hist = Table::Zero(kLevels, kLevels);
  for (const auto& s : samples) ++hist(s[0], s[1]);
  for (int cb = 0; cb < kLevels; ++cb) {
    for (int cr = 0; cr < kLevels; ++cr) {
      count_(cb, cr + 1) = count_(cb, cr) + hist(cb, cr);
      sum_cr_(cb, cr + 1) = sum_cr_(cb, cr) + hist(cb, cr) * cr;
    }
  }
}

std::optional<Eigen::Vector2d> ChromaHistogram::step(const Eigen::Vector2d& y, double bandwidth) const {
  std::int64_t n = 0;
  std::int64_t sum_cb = 0;
  std::int64_t sum_cr = 0;
  const int cb_lo = std::max(0, static_cast<int>(std::floor((y.x() - bandwidth) * 255.0)) - 1);
  const int cb_hi = std::min(kLevels - 1, static_cast<int>(std::ceil((y.x() + bandwidth) * 255.0)) + 1);
  for (int cb = cb_lo; cb <= cb_hi; ++cb) {
    const double dx = cb / 255.0 - y.x();
    const double rem = bandwidth * bandwidth - dx * dx;
    if (rem < 0) continue;
    const double half = std::sqrt(rem);
    // sqrt guess, then settle the exact endpoints with the window predicate
    const int guess_lo = static_cast<int>(std::ceil((y.y() - half) * 255.0));
    const int guess_hi = static_cast<int>(std::floor((y.y() + half) * 255.0));
    int lo = std::max(0, guess_lo - 2);
    const int hi_bound = std::min(kLevels - 1, guess_hi + 2);
    while (lo <= hi_bound && !in_window(cb, lo, y, bandwidth)) ++lo;
    int hi = hi_bound;
    while (hi >= lo && !in_window(cb, hi, y, bandwidth)) --hi;
    if (lo > hi) continue;
    const std::int64_t c = count_(cb, hi + 1) - count_(cb, lo);
    n += c;
    sum_cb += c * cb;
    sum_cr += sum_cr_(cb, hi + 1) - sum_cr_(cb, lo);
  }
  if (n == 0) return std::nullopt;
  return Eigen::Vector2d(static_cast<double>(sum_cb) / static_cast<double>(n) / 255.0,
                         static_cast<double>(sum_cr) / static_cast<double>(n) / 255.0);
}

void MeanShiftConfig::validate() const {
  if (!(bandwidth > 0)) throw std::invalid_argument("bandwidth must be positive");
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  if (!(effective_merge_radius() > 0)) throw std::invalid_argument("merge radius must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (seed_stride < 1) throw std::invalid_argument("seed stride must be at least 1");
}

std::optional<Eigen::Vector2d> mean_shift_step(std::span<const ChromaSample> samples, const Eigen::Vector2d& point,
                                               double bandwidth) {
  Eigen::Vector2d sum = Eigen::Vector2d::Zero();
  std::int64_t n = 0;
  for (const auto& s : samples) {
    if (in_window(s[0], s[1], point, bandwidth)) {
      sum += Eigen::Vector2d(s[0], s[1]);
      ++n;
    }
  }
  if (n == 0) return std::nullopt;
  return Eigen::Vector2d(sum / static_cast<double>(n) / 255.0);
}

ClusterResult mean_shift(std::span<const ChromaSample> samples, const MeanShiftConfig& config) {
  config.validate();
  if (samples.empty()) throw std::invalid_argument("mean shift needs at least one sample");

  const ChromaHistogram density(samples);

  // Identical seeds follow identical trajectories; run each distinct one once.
  std::map<ChromaSample, std::int64_t> seeds;
  std::vector<ChromaSample> seed_order;
  for (std::size_t i = 0; i < samples.size(); i += static_cast<std::size_t>(config.seed_stride)) {
    if (seeds[samples[i]]++ == 0) seed_order.push_back(samples[i]);
  }

  const double radius = config.effective_merge_radius();
  std::vector<WeightedPoint> modes;
  for (const auto& s : seed_order) {
    const Eigen::Vector2d end = converge(density, Eigen::Vector2d(s[0] / 255.0, s[1] / 255.0), config);
    auto it = std::find_if(modes.begin(), modes.end(),
                           [&](const WeightedPoint& m) { return (m.p - end).norm() <= radius; });
    const auto w = seeds[s];
    if (it == modes.end()) {
      modes.push_back({end, w});
    } else {
      const auto wm = static_cast<double>(it->weight);
      it->p = (it->p * wm + end * static_cast<double>(w)) / (wm + static_cast<double>(w));
      it->weight += w;
    }
  }

  // Weighted averaging can leave a mode off its fixed point; re-converge until nothing merges.
  do {
    for (auto& m : modes) m.p = converge(density, m.p, config);
  } while (merge_close(modes, radius));

  ClusterResult result;
  for (const auto& m : modes) {
    result.normalized_modes.push_back(m.p);
    result.modes.push_back({to_level(m.p.x()), to_level(m.p.y())});
    result.support.push_back(m.weight);
  }
  return result;
}

std::vector<ChromaSample> chroma_samples(const ImageCbCr& img) {
  std::vector<ChromaSample> out;
  out.reserve(img.pixel_count());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) out.push_back({img(x, y, 0), img(x, y, 1)});
  }
  return out;
}

CenterFileText centers_to_file(const ClusterResult& result, const std::vector<std::string>& names) {
  const auto n = result.modes.size();
  if (names.size() != n) {
    throw std::invalid_argument("got " + std::to_string(names.size()) + " class names for " + std::to_string(n) +
                                " modes");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (result.support[a] != result.support[b]) return result.support[a] > result.support[b];
    return result.modes[a] < result.modes[b];
  });

  CenterFileText out;
  if (n < 2) out.warnings.push_back("only " + std::to_string(n) + " mode found; a classifier needs at least 2 classes");

  nlohmann::ordered_json doc;
  doc["resolution_bits"] = 8;
  auto classes = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& m = result.modes[order[k]];
    nlohmann::ordered_json c;
    c["name"] = names[k];
    c["center"] = {m[0], m[1]};
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);
  out.json = doc.dump(2) + "\n";
  return out;
}

}  // namespace rsd
