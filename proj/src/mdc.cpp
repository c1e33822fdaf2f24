#include "rsd/mdc.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace rsd {

ClassCenterFile::ClassCenterFile(int dims, int classes, int resolution_bits)
    : dims_(dims), classes_(classes), resolution_bits_(resolution_bits) {
  if (dims < 1) throw std::invalid_argument("class center file needs D >= 1");
  if (classes < 2) throw std::invalid_argument("class center file needs C >= 2");
  if (resolution_bits < 1 || resolution_bits > 24) throw std::invalid_argument("resolution must be 1..24 bits");
  cells_.assign(static_cast<std::size_t>(cell_count()), 0u);
  written_.assign(cells_.size(), false);
}

ClassCenterFile ClassCenterFile::from_centers(
    const Eigen::Array<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic>& centers, int resolution_bits) {
  ClassCenterFile file(static_cast<int>(centers.cols()), static_cast<int>(centers.rows()), resolution_bits);
  for (int j = 0; j < file.classes(); ++j) {
    for (int d = 0; d < file.dims(); ++d) file.program(address(j, d, file.dims()), centers(j, d));
  }
  return file;
}

void ClassCenterFile::program(int addr, std::uint32_t value) {
  if (addr < 0 || addr >= cell_count()) {
    throw std::out_of_range("register address " + std::to_string(addr) + " outside 0.." +
                            std::to_string(cell_count() - 1));
  }
  if (value > max_value()) {
    throw std::out_of_range("value " + std::to_string(value) + " does not fit in " +
                            std::to_string(resolution_bits_) + " bits");
  }
  const auto i = static_cast<std::size_t>(addr);
  cells_[i] = value;
  if (!written_[i]) {
    written_[i] = true;
    ++written_count_;
  }
}

std::uint32_t ClassCenterFile::cell(int addr) const {
  if (addr < 0 || addr >= cell_count()) throw std::out_of_range("register address out of range");
  return cells_[static_cast<std::size_t>(addr)];
}

Eigen::Map<const FeatureVector> ClassCenterFile::center(int class_index) const {
  if (class_index < 0 || class_index >= classes_) throw std::out_of_range("class index out of range");
  return {cells_.data() + static_cast<std::ptrdiff_t>(class_index) * dims_, dims_};
}

ClassCenterFile program_center(ClassCenterFile file, int addr, std::uint32_t value) {
  file.program(addr, value);
  return file;
}

int accumulator_bits(int resolution_bits, int dims) {
  const int log2_dims = std::bit_width(static_cast<unsigned>(dims - 1));  // ceil(log2 D)
  return resolution_bits + std::max(2, log2_dims);
}

std::uint32_t manhattan_distance(const Eigen::Ref<const FeatureVector>& x, const Eigen::Ref<const FeatureVector>& u) {
  if (x.size() != u.size()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(x.size()) + " vs " +
                                std::to_string(u.size()));
  }
  return static_cast<std::uint32_t>((x.cast<std::int64_t>() - u.cast<std::int64_t>()).abs().sum());
}

int classify(const ClassCenterFile& file, const Eigen::Ref<const FeatureVector>& x) {
  if (!file.fully_programmed()) throw std::logic_error("class center file is not fully programmed");
  int best = 0;
  std::uint32_t best_distance = manhattan_distance(x, file.center(0));
  for (int j = 1; j < file.classes(); ++j) {
    const auto d = manhattan_distance(x, file.center(j));
    if (d < best_distance) {
      best_distance = d;
      best = j;
    }
  }
  return best;
}

ImageGray classify_image(const ClassCenterFile& file, const ImageCbCr& img) {
  if (file.dims() != 2) {
    throw std::invalid_argument("chroma images need a 2-dimensional class center file, got D=" +
                                std::to_string(file.dims()));
  }
  if (!file.fully_programmed()) throw std::logic_error("class center file is not fully programmed");

  ImageGray out(img.width(), img.height());
  FeatureVector x(2);
  for (int y = 0; y < img.height(); ++y) {
    for (int px = 0; px < img.width(); ++px) {
      x << img(px, y, 0), img(px, y, 1);
      out(px, y) = static_cast<std::uint32_t>(classify(file, x));
    }
  }
  return out;
}

}  // namespace rsd
