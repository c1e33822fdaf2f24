#include "rsd/pnm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>

namespace rsd {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  std::size_t token_start() const { return token_start_; }
  bool at_end() const { return pos_ >= bytes_.size(); }

  void skip_whitespace_and_comments() {
    while (!at_end()) {
      const auto c = bytes_[pos_];
      if (c == '#') {
        while (!at_end() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long read_uint(const char* what) {
    skip_whitespace_and_comments();
    if (at_end()) throw PnmError(std::string("unexpected end of data reading ") + what, pos_);
    if (!std::isdigit(bytes_[pos_])) throw PnmError(std::string("expected digit for ") + what, pos_);
    token_start_ = pos_;
    long value = 0;
    while (!at_end() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) throw PnmError(std::string(what) + " too large", pos_);
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates the maxval from the binary raster.
  void expect_single_whitespace() {
    if (at_end() || !std::isspace(bytes_[pos_])) throw PnmError("expected whitespace after maxval", pos_);
    ++pos_;
  }

  void advance(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
  std::size_t token_start_ = 0;
};

}  // namespace

ImageRGB load_pnm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '3' && bytes[1] != '6')) {
    throw PnmError("bad magic number, expected P3 or P6", 0);
  }
  if (bytes.size() < 3 || !std::isspace(bytes[2])) throw PnmError("expected whitespace after magic number", 2);
  const bool binary = bytes[1] == '6';
  HeaderReader in(bytes);
  in.advance(2);

  const long width = in.read_uint("width");
  if (width < 1) throw PnmError("width must be positive", in.token_start());
  const long height = in.read_uint("height");
  if (height < 1) throw PnmError("height must be positive", in.token_start());
  const long maxval = in.read_uint("maxval");
  if (maxval != 255) {
    throw PnmError("unsupported maxval " + std::to_string(maxval) + ", only 255 is accepted", in.token_start());
  }

  if (width * height > (long{1} << 28)) throw PnmError("image too large", in.token_start());

  ImageRGB img(static_cast<int>(width), static_cast<int>(height));
  auto out = img.samples();

  if (binary) {
    in.expect_single_whitespace();
    const auto start = in.pos();
    if (bytes.size() - start < out.size()) {
      throw PnmError("truncated raster: need " + std::to_string(out.size()) + " bytes, have " +
                         std::to_string(bytes.size() - start),
                     bytes.size());
    }
    std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(start), out.size(), out.begin());
  } else {
    for (auto& sample : out) {
      const long v = in.read_uint("sample");
      if (v > maxval) throw PnmError("sample " + std::to_string(v) + " exceeds maxval", in.token_start());
      sample = static_cast<std::uint8_t>(v);
    }
  }
  return img;
}

std::vector<std::uint8_t> save_pnm(const ImageRGB& img) {
  const std::string header = "P6 " + std::to_string(img.width()) + " " + std::to_string(img.height()) + " 255\n";
  std::vector<std::uint8_t> bytes(header.begin(), header.end());
  const auto raster = img.samples();
  bytes.insert(bytes.end(), raster.begin(), raster.end());
  return bytes;
}

ImageRGB read_pnm_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  try {
    return load_pnm(bytes);
  } catch (const PnmError& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_pnm_file(const std::filesystem::path& path, const ImageRGB& img) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  const auto bytes = save_pnm(img);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!f) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace rsd
