#include "rsd/pipeline.hpp"

#include "rsd/color.hpp"
#include "rsd/filters.hpp"
#include "rsd/mdc.hpp"
#include "rsd/oracles.hpp"
#include "rsd/pipeline_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace rsd {
namespace {

void require_chroma_centers(const PipelineConfig& config) {
  if (config.centers.file.dims() != 2) {
    throw std::invalid_argument("pipeline needs 2-dimensional (Cb, Cr) class centers");
  }
}

template <typename Scalar, int Channels>
std::size_t count_mismatches(const Image<Scalar, Channels>& a, const Image<Scalar, Channels>& b) {
  if (a.width() != b.width() || a.height() != b.height()) return a.pixel_count() + b.pixel_count();
  return static_cast<std::size_t>((a.interleaved() != b.interleaved()).count());
}

}  // namespace

ImageGray segment(const PipelineConfig& config, const ImageRGB& img) {
  require_chroma_centers(config);
  ImageCbCr chroma = rgb_to_cbcr(img);
  if (config.gaussian) chroma = gaussian3x3(chroma);
  ImageGray classes = classify_image(config.centers.file, chroma);
  if (config.median) classes = median3x3(classes);
  return classes;
}

FrameResult run_pipeline(const PipelineConfig& config, const ImageRGB& img, const std::string& image_name) {
  FrameResult out;
  out.segmentation = segment(config, img);
  out.labels = label_components(out.segmentation, config.skip);

  auto& report = out.report;
  report.image = image_name;
  const auto& file = config.centers.file;
  for (int j = 0; j < file.classes(); ++j) {
    ClassCount c;
    c.name = j < static_cast<int>(config.centers.names.size()) ? config.centers.names[static_cast<std::size_t>(j)]
                                                                : "class" + std::to_string(j);
    const auto center = file.center(j);
    c.center.assign(center.begin(), center.end());
    report.classes.push_back(std::move(c));
  }
  for (const auto v : out.segmentation.samples()) ++report.classes[v].pixels;

  report.components = out.labels.components;
  report.detections = detect(report.components, config.rule);
  report.latency_cycles = PipelineModel::for_file(file).latency();
  report.est_fps = estimate_frame_rate(config.clock_hz, img.width(), img.height());
  out.annotated = annotate(img, report.detections);
  return out;
}

AblationStats ablation_stats(const PipelineConfig& config, const ImageRGB& img) {
  PipelineConfig off = config;
  off.gaussian = false;
  off.median = false;
  PipelineConfig on = config;
  on.gaussian = true;
  on.median = true;

  AblationStats s;
  s.without_filters = count_components(segment(off, img), config.skip);
  s.with_filters = count_components(segment(on, img), config.skip);
  if (s.without_filters > 0) {
    s.reduction_percent = 100.0 * (static_cast<double>(s.without_filters) - static_cast<double>(s.with_filters)) /
                          static_cast<double>(s.without_filters);
  }
  return s;
}

ImageRGB render_labels(const ImageGray& labels, std::uint32_t max_label, bool color) {
  static constexpr std::array<std::array<std::uint8_t, 3>, 12> kPalette{{
      {230, 25, 75}, {255, 225, 25}, {60, 180, 75}, {0, 130, 200}, {245, 130, 48}, {145, 30, 180},
      {70, 240, 240}, {240, 50, 230}, {210, 245, 60}, {250, 190, 212}, {0, 128, 128}, {170, 110, 40},
  }};
  ImageRGB out(labels.width(), labels.height());
  for (int y = 0; y < labels.height(); ++y) {
    for (int x = 0; x < labels.width(); ++x) {
      const auto v = labels(x, y);
      std::array<std::uint8_t, 3> rgb{0, 0, 0};
      if (color) {
        if (v != 0) rgb = kPalette[(v - 1) % kPalette.size()];
      } else if (max_label > 0) {
        const auto g = static_cast<std::uint8_t>((static_cast<std::uint64_t>(std::min(v, max_label)) * 255 +
                                                  max_label / 2) /
                                                 max_label);
        rgb = {g, g, g};
      }
      for (int k = 0; k < 3; ++k) out(x, y, k) = rgb[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

nlohmann::ordered_json report_to_json(const FrameReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["image"] = report.image;

  auto classes = ordered_json::array();
  for (std::size_t j = 0; j < report.classes.size(); ++j) {
    const auto& c = report.classes[j];
    ordered_json o;
    o["index"] = j;
    o["name"] = c.name;
    o["center"] = c.center;
    o["pixels"] = c.pixels;
    classes.push_back(std::move(o));
  }
  doc["classes"] = std::move(classes);

  auto bbox = [](int x0, int y0, int x1, int y1) {
    ordered_json b;
    b["min_x"] = x0;
    b["min_y"] = y0;
    b["max_x"] = x1;
    b["max_y"] = y1;
    return b;
  };

  auto components = ordered_json::array();
  for (const auto& c : report.components) {
    ordered_json o;
    o["id"] = c.id;
    o["class"] = c.class_index;
    o["area"] = c.area;
    o["bbox"] = bbox(c.min_x, c.min_y, c.max_x, c.max_y);
    o["centroid"] = {c.centroid_x(), c.centroid_y()};
    components.push_back(std::move(o));
  }
  doc["components"] = std::move(components);

  auto detections = ordered_json::array();
  for (const auto& d : report.detections) {
    ordered_json o;
    o["component"] = d.component_id;
    o["area"] = d.area;
    o["bbox"] = bbox(d.min_x, d.min_y, d.max_x, d.max_y);
    o["centroid"] = {d.centroid_x, d.centroid_y};
    detections.push_back(std::move(o));
  }
  doc["detections"] = std::move(detections);
  doc["latency_cycles"] = report.latency_cycles;
  doc["est_fps"] = report.est_fps;
  return doc;
}

std::vector<StageCheck> verify_frame(const PipelineConfig& config, const ImageRGB& img) {
  require_chroma_centers(config);
  std::vector<StageCheck> checks;

  const ImageCbCr chroma = rgb_to_cbcr(img);
  const Eigen::Matrix<int, 3, 3, Eigen::RowMajor> binomial =
      (Eigen::Matrix<int, 3, 3, Eigen::RowMajor>() << 1, 2, 1, 2, 4, 2, 1, 2, 1).finished();
  const ImageCbCr smoothed = gaussian3x3(chroma);
  checks.push_back({"gaussian3x3", count_mismatches(smoothed, oracle::dense_convolve3x3(chroma, binomial, 16))});

  const ImageCbCr& classifier_input = config.gaussian ? smoothed : chroma;
  const ImageGray classes = classify_image(config.centers.file, classifier_input);
  const auto& file = config.centers.file;
  Eigen::Array<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic> centers(file.classes(), file.dims());
  for (int j = 0; j < file.classes(); ++j) centers.row(j) = file.center(j).transpose();
  ImageGray naive(img.width(), img.height());
  Eigen::Array<std::uint32_t, Eigen::Dynamic, 1> x(2);
  for (int y = 0; y < img.height(); ++y) {
    for (int px = 0; px < img.width(); ++px) {
      x << classifier_input(px, y, 0), classifier_input(px, y, 1);
      naive(px, y) = static_cast<std::uint32_t>(oracle::naive_classify(centers, x));
    }
  }
  checks.push_back({"classify_image", count_mismatches(classes, naive)});

  const ImageGray cleaned = median3x3(classes);
  checks.push_back({"median3x3", count_mismatches(cleaned, oracle::sort_median3x3(classes))});

  const ImageGray& seg = config.median ? cleaned : classes;
  const LabelResult fast = label_components(seg, config.skip);
  const LabelResult slow = oracle::flood_fill_label(seg, config.skip);
  std::size_t ccl_mismatches = count_mismatches(fast.ids, slow.ids);
  const auto n = std::max(fast.components.size(), slow.components.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (k >= fast.components.size() || k >= slow.components.size() || !(fast.components[k] == slow.components[k])) {
      ++ccl_mismatches;
    }
  }
  checks.push_back({"label_components", ccl_mismatches});
  return checks;
}

}  // namespace rsd
