// Command-line front end for the road-sign segmentation and detection pipeline.

#include "rsd/centers_io.hpp"
#include "rsd/color.hpp"
#include "rsd/meanshift.hpp"
#include "rsd/pipeline.hpp"
#include "rsd/pipeline_model.hpp"
#include "rsd/pnm.hpp"
#include "rsd/synthetic.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

struct PipelineFlags {
  std::string centers;
  bool no_gaussian = false;
  bool no_median = false;
  std::vector<std::uint32_t> skip_classes{0};
  std::int64_t area_min = 200;
  std::string ratio_min = "0.7";
  std::string ratio_max = "3";
  std::uint32_t target_class = 1;
  double clock_mhz = 170.0;

  void attach(CLI::App* app) {
    app->add_option("--centers", centers, "class-center JSON file (default: built-in road sign centers)")
        ->check(CLI::ExistingFile);
    app->add_flag("--no-gaussian", no_gaussian, "skip the 3x3 Gaussian pre-filter");
    app->add_flag("--no-median", no_median, "skip the 3x3 median post-filter");
    app->add_option("--skip-class", skip_classes, "class indices excluded from labeling")->capture_default_str();
    app->add_option("--area-min", area_min, "detections need area strictly above this")->capture_default_str();
    app->add_option("--ratio-min", ratio_min, "lower width/height bound (exclusive)")->capture_default_str();
    app->add_option("--ratio-max", ratio_max, "upper width/height bound (exclusive)")->capture_default_str();
    app->add_option("--target-class", target_class, "class index a sign must have")->capture_default_str();
    app->add_option("--clock-mhz", clock_mhz, "clock used for the frame-rate estimate")->capture_default_str();
  }

  rsd::PipelineConfig config() const {
    rsd::PipelineConfig c;
    if (!centers.empty()) c.centers = rsd::read_centers_file(centers);
    c.gaussian = !no_gaussian;
    c.median = !no_median;
    c.skip = {skip_classes.begin(), skip_classes.end()};
    c.rule.area_min = area_min;
    c.rule.ratio_min = rsd::Ratio::parse(ratio_min);
    c.rule.ratio_max = rsd::Ratio::parse(ratio_max);
    c.rule.target_class = target_class;
    c.rule.validate();
    c.clock_hz = clock_mhz * 1e6;
    return c;
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Road sign color segmentation and detection"};
  app.require_subcommand(1);

  // segment
  auto* seg_cmd = app.add_subcommand("segment", "classify every pixel and write the class image");
  PipelineFlags seg_flags;
  seg_flags.attach(seg_cmd);
  std::string seg_input;
  std::string seg_out;
  bool seg_color = false;
  seg_cmd->add_option("image", seg_input, "input PPM")->required()->check(CLI::ExistingFile);
  seg_cmd->add_option("--out-seg", seg_out, "class image as PPM")->required();
  seg_cmd->add_flag("--color-labels", seg_color, "palette colors instead of gray levels");

  // detect
  auto* det_cmd = app.add_subcommand("detect", "run the full pipeline and report detections");
  PipelineFlags det_flags;
  det_flags.attach(det_cmd);
  std::string det_input;
  std::string det_seg;
  std::string det_labels;
  std::string det_annotated;
  std::string det_report;
  bool det_color = false;
  det_cmd->add_option("image", det_input, "input PPM")->required()->check(CLI::ExistingFile);
  det_cmd->add_option("--out-seg", det_seg, "class image as PPM");
  det_cmd->add_option("--out-labels", det_labels, "component id image as PPM");
  det_cmd->add_option("--out-annotated", det_annotated, "input with detection boxes drawn");
  det_cmd->add_option("--out-report", det_report, "JSON frame report (default: stdout)");
  det_cmd->add_flag("--color-labels", det_color, "palette colors instead of gray levels");

  // train
  auto* train_cmd = app.add_subcommand("train", "mean-shift cluster an image's chroma into class centers");
  std::string train_input;
  std::string train_out;
  std::vector<std::string> train_names;
  rsd::MeanShiftConfig ms;
  double merge_radius = 0;
  train_cmd->add_option("image", train_input, "input PPM")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--out", train_out, "class-center JSON to write (default: stdout)");
  train_cmd->add_option("--bandwidth", ms.bandwidth, "flat kernel radius in [0,1] chroma units")->capture_default_str();
  train_cmd->add_option("--tolerance", ms.tolerance, "convergence threshold")->capture_default_str();
  train_cmd->add_option("--max-iterations", ms.max_iterations)->capture_default_str();
  train_cmd->add_option("--merge-radius", merge_radius, "default: bandwidth / 2");
  train_cmd->add_option("--seed-stride", ms.seed_stride, "use every n-th pixel as a seed")->capture_default_str();
  train_cmd->add_option("--names", train_names, "class names in output order (default: class0, class1, ...)");

  // ablate
  auto* abl_cmd = app.add_subcommand("ablate", "component counts with both filters off and on");
  PipelineFlags abl_flags;
  abl_flags.attach(abl_cmd);
  std::string abl_input;
  abl_cmd->add_option("image", abl_input, "input PPM")->required()->check(CLI::ExistingFile);

  // latency
  auto* lat_cmd = app.add_subcommand("latency", "classifier latency and frame-rate estimate");
  int lat_dims = 2;
  int lat_classes = 4;
  std::string lat_centers;
  double lat_clock = 170.0;
  int lat_width = 1000;
  int lat_height = 630;
  lat_cmd->add_option("--dims", lat_dims, "feature dimensions D")->capture_default_str()->check(CLI::PositiveNumber);
  lat_cmd->add_option("--classes", lat_classes, "class count C")->capture_default_str()->check(CLI::Range(2, 1 << 20));
  lat_cmd->add_option("--centers", lat_centers, "take D and C from a class-center file")->check(CLI::ExistingFile);
  lat_cmd->add_option("--clock-mhz", lat_clock)->capture_default_str()->check(CLI::PositiveNumber);
  lat_cmd->add_option("--width", lat_width)->capture_default_str()->check(CLI::PositiveNumber);
  lat_cmd->add_option("--height", lat_height)->capture_default_str()->check(CLI::PositiveNumber);

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "cross-check every stage against brute-force references");
  PipelineFlags ver_flags;
  ver_flags.attach(ver_cmd);
  std::string ver_input;
  ver_cmd->add_option("image", ver_input, "input PPM")->required()->check(CLI::ExistingFile);

  // synth
  auto* syn_cmd = app.add_subcommand("synth", "write a synthetic test frame");
  std::string syn_kind = "sign";
  std::string syn_out;
  rsd::SignFrameSpec spec;
  syn_cmd->add_option("--kind", syn_kind, "sign | background | noise")
      ->capture_default_str()
      ->check(CLI::IsMember({"sign", "background", "noise"}));
  syn_cmd->add_option("--width", spec.width)->capture_default_str()->check(CLI::PositiveNumber);
  syn_cmd->add_option("--height", spec.height)->capture_default_str()->check(CLI::PositiveNumber);
  syn_cmd->add_option("--radius", spec.radius, "disc radius")->capture_default_str();
  syn_cmd->add_option("--ring", spec.ring_width, "ring width")->capture_default_str();
  syn_cmd->add_option("--noise-sigma", spec.noise_sigma, "Gaussian chroma noise, levels")->capture_default_str();
  syn_cmd->add_option("--seed", spec.seed)->capture_default_str();
  syn_cmd->add_option("--out", syn_out, "output PPM")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*seg_cmd) {
      const auto config = seg_flags.config();
      const auto img = rsd::read_pnm_file(seg_input);
      const auto classes = rsd::segment(config, img);
      rsd::write_pnm_file(seg_out, rsd::render_labels(classes, static_cast<std::uint32_t>(config.centers.file.classes() - 1),
                                                      seg_color));
      return 0;
    }

    if (*det_cmd) {
      const auto config = det_flags.config();
      const auto img = rsd::read_pnm_file(det_input);
      const auto result = rsd::run_pipeline(config, img, det_input);
      if (!det_seg.empty()) {
        rsd::write_pnm_file(det_seg, rsd::render_labels(result.segmentation,
                                                        static_cast<std::uint32_t>(config.centers.file.classes() - 1),
                                                        det_color));
      }
      if (!det_labels.empty()) {
        rsd::write_pnm_file(det_labels, rsd::render_labels(result.labels.ids,
                                                           static_cast<std::uint32_t>(result.labels.components.size()),
                                                           det_color));
      }
      if (!det_annotated.empty()) rsd::write_pnm_file(det_annotated, result.annotated);
      const auto json = rsd::report_to_json(result.report).dump(2) + "\n";
      if (det_report.empty()) {
        std::cout << json;
      } else {
        write_text(det_report, json);
        std::cerr << result.report.components.size() << " components, " << result.report.detections.size()
                  << " detections\n";
      }
      return 0;
    }

    if (*train_cmd) {
      if (merge_radius > 0) ms.merge_radius = merge_radius;
      const auto img = rsd::read_pnm_file(train_input);
      const auto samples = rsd::chroma_samples(rsd::rgb_to_cbcr(img));
      const auto result = rsd::mean_shift(samples, ms);
      if (train_names.empty()) {
        for (std::size_t k = 0; k < result.modes.size(); ++k) train_names.push_back("class" + std::to_string(k));
      }
      const auto text = rsd::centers_to_file(result, train_names);
      for (const auto& w : text.warnings) std::cerr << "warning: " << w << "\n";
      if (train_out.empty()) {
        std::cout << text.json;
      } else {
        write_text(train_out, text.json);
        std::cerr << result.modes.size() << " modes written to " << train_out << "\n";
      }
      return 0;
    }

    if (*abl_cmd) {
      const auto stats = rsd::ablation_stats(abl_flags.config(), rsd::read_pnm_file(abl_input));
      std::cout << "components without filters: " << stats.without_filters << "\n"
                << "components with filters:    " << stats.with_filters << "\n"
                << "reduction:                  " << std::fixed << std::setprecision(2) << stats.reduction_percent
                << "%\n";
      return 0;
    }

    if (*lat_cmd) {
      rsd::PipelineModel model{lat_dims, lat_classes, 8};
      if (!lat_centers.empty()) model = rsd::PipelineModel::for_file(rsd::read_centers_file(lat_centers).file);
      std::cout << "D=" << model.dims << " C=" << model.classes << "\n"
                << "latency_cycles: " << model.latency() << "\n"
                << "accumulator_bits: " << model.accumulator_bits() << "\n"
                << "est_fps: " << std::fixed << std::setprecision(2)
                << rsd::estimate_frame_rate(lat_clock * 1e6, lat_width, lat_height) << " (" << lat_width << "x"
                << lat_height << " at " << lat_clock << " MHz)\n";
      return 0;
    }

    if (*ver_cmd) {
      const auto checks = rsd::verify_frame(ver_flags.config(), rsd::read_pnm_file(ver_input));
      bool ok = true;
      for (const auto& c : checks) {
        std::cout << (c.ok() ? "PASS " : "FAIL ") << c.stage << " (" << c.mismatches << " mismatches)\n";
        ok = ok && c.ok();
      }
      return ok ? 0 : 1;
    }

    if (*syn_cmd) {
      rsd::ImageRGB img;
      if (syn_kind == "noise") {
        img = rsd::make_noise_frame(spec.width, spec.height, spec.seed);
      } else {
        if (syn_kind == "background") spec.radius = spec.ring_width = -1;  // plain background
        img = rsd::make_sign_frame(spec);
      }
      rsd::write_pnm_file(syn_out, img);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
