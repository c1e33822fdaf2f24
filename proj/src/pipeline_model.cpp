#include "rsd/pipeline_model.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace rsd {

int PipelineModel::selection_levels() const {
  return std::bit_width(static_cast<unsigned>(classes - 1));
}

std::vector<int> PipelineModel::selection_widths() const {
  std::vector<int> widths{classes};
  while (widths.back() > 1) widths.push_back((widths.back() + 1) / 2);
  return widths;
}

PipelinedClassifier::PipelinedClassifier(ClassCenterFile file)
    : file_(std::move(file)), model_(PipelineModel::for_file(file_)) {
  if (!file_.fully_programmed()) throw std::logic_error("class center file is not fully programmed");
  registers_.resize(static_cast<std::size_t>(model_.latency()));
}

bool PipelinedClassifier::busy() const {
  return std::any_of(registers_.begin(), registers_.end(), [](const auto& r) { return r.has_value(); });
}

void PipelinedClassifier::enter_register(int index, Token& t) {
  const int distance_registers = PipelineModel::kCyclesPerDimension * model_.dims;
  if (index < distance_registers) {
    const int dim = index / PipelineModel::kCyclesPerDimension;
    switch (index % PipelineModel::kCyclesPerDimension) {
      case 0:
        for (int j = 0; j < model_.classes; ++j) {
          t.diff(j) = static_cast<std::int64_t>(t.x(dim)) - file_.cell(ClassCenterFile::address(j, dim, model_.dims));
        }
        break;
      case 1:
        t.diff = t.diff.abs();
        break;
      default: {
        // Every partial sum is folded into the first dimension's accumulator.
        t.acc += t.diff;
        const std::int64_t peak = t.acc.maxCoeff();
        peak_accumulator_ = std::max(peak_accumulator_, peak);
        if (peak >= (std::int64_t{1} << model_.accumulator_bits())) {
          throw std::overflow_error("accumulator overflow: " + std::to_string(peak) + " needs more than " +
                                    std::to_string(model_.accumulator_bits()) + " bits");
        }
        break;
      }
    }
    return;
  }

  if (index == distance_registers) {
    t.candidates.clear();
    for (int j = 0; j < model_.classes; ++j) t.candidates.emplace_back(t.acc(j), j);
  }
  // One comparator level: adjacent pairs keep the smaller distance, the left input on equality.
  // An unpaired last candidate is carried through this level's register unchanged.
  std::vector<std::pair<std::int64_t, int>> next;
  next.reserve((t.candidates.size() + 1) / 2);
  for (std::size_t i = 0; i + 1 < t.candidates.size(); i += 2) {
    const auto& a = t.candidates[i];
    const auto& b = t.candidates[i + 1];
    next.push_back(b.first < a.first ? b : a);
  }
  if (t.candidates.size() % 2 == 1) next.push_back(t.candidates.back());
  t.candidates = std::move(next);
}

std::optional<LabelEvent> PipelinedClassifier::step(const std::optional<FeatureVector>& input) {
  std::optional<LabelEvent> out;
  if (auto& last = registers_.back()) {
    out = LabelEvent{cycle_, last->input_cycle, last->candidates.front().second};
  }

  for (std::size_t i = registers_.size() - 1; i > 0; --i) {
    registers_[i] = std::move(registers_[i - 1]);
    if (registers_[i]) enter_register(static_cast<int>(i), *registers_[i]);
  }
  registers_[0].reset();
  if (input) {
    if (input->size() != model_.dims) {
      throw std::invalid_argument("input has " + std::to_string(input->size()) + " dimensions, pipeline expects " +
                                  std::to_string(model_.dims));
    }
    Token t;
    t.input_cycle = cycle_;
    t.x = *input;
    t.diff.setZero(model_.classes);
    t.acc.setZero(model_.classes);
    registers_[0] = std::move(t);
    enter_register(0, *registers_[0]);
  }
  ++cycle_;
  return out;
}

std::vector<LabelEvent> simulate_pipeline(const ClassCenterFile& file,
                                          std::span<const std::optional<FeatureVector>> schedule) {
  PipelinedClassifier pipe(file);
  std::vector<LabelEvent> events;
  for (const auto& in : schedule) {
    if (auto ev = pipe.step(in)) events.push_back(*ev);
  }
  while (pipe.busy()) {
    if (auto ev = pipe.step(std::nullopt)) events.push_back(*ev);
  }
  return events;
}

double estimate_frame_rate(double frequency_hz, int width, int height) {
  if (frequency_hz <= 0 || width < 1 || height < 1) {
    throw std::invalid_argument("frame rate needs positive frequency and dimensions");
  }
  return frequency_hz / (static_cast<double>(width) * height);
}

}  // namespace rsd
