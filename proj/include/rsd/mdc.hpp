#pragma once

#include "rsd/image.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rsd {

/// One feature vector (or one class center), D components each below 2^R.
using FeatureVector = Eigen::Array<std::uint32_t, Eigen::Dynamic, 1>;

/// Programmable register file of C class centers x D dimensions at R-bit resolution.
///
/// Cells are stored in a flat array, class-major: cell j*D + d holds dimension d of center j.
/// A freshly constructed file is unprogrammed; every cell must be written once before
/// the file can classify.
class ClassCenterFile {
 public:
  ClassCenterFile(int dims, int classes, int resolution_bits = 8);

  /// Builds a fully programmed file from a (classes x dims) table of centers.
  static ClassCenterFile from_centers(const Eigen::Array<std::uint32_t, Eigen::Dynamic, Eigen::Dynamic>& centers,
                                      int resolution_bits = 8);

  int dims() const { return dims_; }
  int classes() const { return classes_; }
  int resolution_bits() const { return resolution_bits_; }
  int cell_count() const { return dims_ * classes_; }
  std::uint32_t max_value() const { return (1u << resolution_bits_) - 1u; }

  /// Write path of the memory-style interface. Out-of-range addresses and values are refused.
  void program(int addr, std::uint32_t value);

  std::uint32_t cell(int addr) const;
  static int address(int class_index, int dim, int dims) { return class_index * dims + dim; }

  bool fully_programmed() const { return written_count_ == cell_count(); }

  /// Center of class j as a D-vector view into the register file.
  Eigen::Map<const FeatureVector> center(int class_index) const;

  friend bool operator==(const ClassCenterFile& a, const ClassCenterFile& b) {
    return a.dims_ == b.dims_ && a.classes_ == b.classes_ && a.resolution_bits_ == b.resolution_bits_ &&
           a.cells_ == b.cells_;
  }

 private:
  int dims_;
  int classes_;
  int resolution_bits_;
  std::vector<std::uint32_t> cells_;
  std::vector<bool> written_;
  int written_count_ = 0;
};

/// Value-semantics form of ClassCenterFile::program.
ClassCenterFile program_center(ClassCenterFile file, int addr, std::uint32_t value);

/// Accumulator width in bits: R + max(2, ceil(log2 D)).
int accumulator_bits(int resolution_bits, int dims);

/// Sum over dimensions of |x_d - u_d|.
std::uint32_t manhattan_distance(const Eigen::Ref<const FeatureVector>& x, const Eigen::Ref<const FeatureVector>& u);

/// Nearest center under the Manhattan metric; ties go to the lowest class index.
int classify(const ClassCenterFile& file, const Eigen::Ref<const FeatureVector>& x);

/// Per-pixel classification of a chroma image (requires D = 2).
ImageGray classify_image(const ClassCenterFile& file, const ImageCbCr& img);

}  // namespace rsd
