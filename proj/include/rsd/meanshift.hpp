#pragma once

#include "rsd/image.hpp"

#include <Eigen/Core>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rsd {

/// One (Cb, Cr) observation.
using ChromaSample = std::array<std::uint8_t, 2>;

/// Lengths are in the normalized feature space where each channel is divided by 255.
struct MeanShiftConfig {
  double bandwidth = 0.4;
  double tolerance = 1e-4;
  int max_iterations = 500;
  std::optional<double> merge_radius;  ///< defaults to bandwidth / 2
  int seed_stride = 4;

  double effective_merge_radius() const { return merge_radius.value_or(bandwidth / 2.0); }
  void validate() const;
};

struct ClusterResult {
  std::vector<Eigen::Vector2d> normalized_modes;
  std::vector<ChromaSample> modes;  ///< rounded half-up into 0..255
  std::vector<std::int64_t> support;  ///< seeds that converged into each mode
};

/// Flat-kernel mean shift seeded from every `seed_stride`-th sample. Converged seeds within the
/// merge radius collapse into one mode (support-weighted mean); merged modes are re-converged
/// until the set is stable.
ClusterResult mean_shift(std::span<const ChromaSample> samples, const MeanShiftConfig& config = {});

/// 256x256 (Cb, Cr) histogram with per-Cb-row prefix sums over Cr, so a flat-kernel step costs
/// one prefix-sum lookup per Cb row crossed by the window.
class ChromaHistogram {
 public:
  explicit ChromaHistogram(std::span<const ChromaSample> samples);

  /// Mean of the samples within `bandwidth` of `point` (normalized space); nullopt if none.
  std::optional<Eigen::Vector2d> step(const Eigen::Vector2d& point, double bandwidth) const;

 private:
  using Table = Eigen::Array<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Table count_;
  Table sum_cr_;
};

/// One flat-kernel step by direct scan: mean of all samples within `bandwidth` of `point`
/// (normalized space). Empty window yields nullopt.
std::optional<Eigen::Vector2d> mean_shift_step(std::span<const ChromaSample> samples, const Eigen::Vector2d& point,
                                               double bandwidth);

/// All pixels of a chroma image in raster order.
std::vector<ChromaSample> chroma_samples(const ImageCbCr& img);

struct CenterFileText {
  std::string json;
  std::vector<std::string> warnings;
};

/// Renders modes as a class-center JSON file ordered by descending support (ties: ascending Cb,
/// then ascending Cr). `names` are applied in that final order.
CenterFileText centers_to_file(const ClusterResult& result, const std::vector<std::string>& names);

}  // namespace rsd
