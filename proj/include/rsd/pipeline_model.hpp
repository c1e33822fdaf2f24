#pragma once

#include "rsd/mdc.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rsd {

/// Timing parameters of the pipelined classifier.
struct PipelineModel {
  static constexpr int kCyclesPerDimension = 3;

  int dims = 2;
  int classes = 4;
  int resolution_bits = 8;

  static PipelineModel for_file(const ClassCenterFile& file) {
    return {file.dims(), file.classes(), file.resolution_bits()};
  }

  /// ceil(log2 C) pairwise comparator levels.
  int selection_levels() const;
  int accumulator_bits() const { return rsd::accumulator_bits(resolution_bits, dims); }
  /// 3*D + ceil(log2 C) clock cycles from input to label.
  int latency() const { return kCyclesPerDimension * dims + selection_levels(); }

  /// Candidate count entering each comparator level, followed by the final 1;
  /// an odd count means one candidate is passed through that level unpaired.
  std::vector<int> selection_widths() const;
};

struct LabelEvent {
  std::int64_t cycle = 0;        ///< cycle the label appears at the output
  std::int64_t input_cycle = 0;  ///< cycle its input was accepted
  int label = 0;
};

/// Register-level model of the classifier datapath: C parallel distance pipelines of D stages
/// (subtract, absolute value, accumulate; one cycle each) feeding a tree of pairwise minimum
/// comparators. Advances one clock per step().
class PipelinedClassifier {
 public:
  explicit PipelinedClassifier(ClassCenterFile file);

  const PipelineModel& model() const { return model_; }
  std::int64_t cycle() const { return cycle_; }
  /// Largest accumulated distance observed so far.
  std::int64_t peak_accumulator() const { return peak_accumulator_; }

  /// One clock edge. `input` (if any) is accepted this cycle; the returned event is the label
  /// leaving the last comparator register this cycle.
  std::optional<LabelEvent> step(const std::optional<FeatureVector>& input);

  /// True while any register holds a token.
  bool busy() const;

 private:
  struct Token {
    std::int64_t input_cycle = 0;
    FeatureVector x;
    Eigen::Array<std::int64_t, Eigen::Dynamic, 1> diff;
    Eigen::Array<std::int64_t, Eigen::Dynamic, 1> acc;
    std::vector<std::pair<std::int64_t, int>> candidates;  // (distance, class)
  };

  void enter_register(int index, Token& t);

  ClassCenterFile file_;
  PipelineModel model_;
  std::vector<std::optional<Token>> registers_;
  std::int64_t cycle_ = 0;
  std::int64_t peak_accumulator_ = 0;
};

/// Drives `schedule` (one optional input per cycle, starting at cycle 0) through the pipeline and
/// runs it until drained.
std::vector<LabelEvent> simulate_pipeline(const ClassCenterFile& file,
                                          std::span<const std::optional<FeatureVector>> schedule);

/// Frames per second at one pixel per clock, ignoring frame and row synchronization.
double estimate_frame_rate(double frequency_hz, int width, int height);

}  // namespace rsd
