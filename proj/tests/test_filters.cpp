#include <doctest.h>

#include "rsd/filters.hpp"
#include "rsd/oracles.hpp"
#include "rsd/window.hpp"

#include <algorithm>
#include <random>

using namespace rsd;

namespace {

const Eigen::Matrix<int, 3, 3, Eigen::RowMajor> kBinomial =
    (Eigen::Matrix<int, 3, 3, Eigen::RowMajor>() << 1, 2, 1, 2, 4, 2, 1, 2, 1).finished();

template <typename Img>
void fill_random(Img& img, std::mt19937& rng, int hi) {
  std::uniform_int_distribution<int> v(0, hi);
  for (auto& s : img.samples()) s = static_cast<typename Img::scalar_type>(v(rng));
}

template <typename Scalar>
std::vector<Window3x3<Scalar>> collect(const Image<Scalar, 1>& img) {
  std::vector<Window3x3<Scalar>> out;
  stream_windows(img, 0, [&](const Window3x3<Scalar>& w) { out.push_back(w); });
  return out;
}

// Random-access gather with the same replication policy.
Eigen::Matrix<std::uint32_t, 3, 3, Eigen::RowMajor> gather(const ImageGray& img, int cx, int cy) {
  Eigen::Matrix<std::uint32_t, 3, 3, Eigen::RowMajor> m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      m(r, c) = img(std::clamp(cx + c - 1, 0, img.width() - 1), std::clamp(cy + r - 1, 0, img.height() - 1));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("stream_window on a 3x3 image") {
  ImageGray img(3, 3);
  for (int i = 0; i < 9; ++i) img(i % 3, i / 3) = static_cast<std::uint32_t>(i + 1);
  const auto windows = collect(img);
  REQUIRE(windows.size() == 9);
  for (std::size_t k = 0; k < windows.size(); ++k) {
    CHECK(windows[k].cx == static_cast<int>(k % 3));
    CHECK(windows[k].cy == static_cast<int>(k / 3));
  }
  const auto& center = windows[4];
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) CHECK(center.cells(r, c) == img(c, r));
  }
}

TEST_CASE("stream_window on a 1x2 image replicates to fill every cell") {
  ImageGray img(1, 2);
  img(0, 0) = 5;
  img(0, 1) = 9;
  const auto windows = collect(img);
  REQUIRE(windows.size() == 2);
  CHECK(windows[0].cells.row(0).isConstant(5));
  CHECK(windows[0].cells.row(1).isConstant(5));
  CHECK(windows[0].cells.row(2).isConstant(9));
  CHECK(windows[1].cells.row(0).isConstant(5));
  CHECK(windows[1].cells.row(2).isConstant(9));
}

TEST_CASE("stream_window equals random-access gather") {
  std::mt19937 rng(11);
  for (const auto& [w, h] : std::vector<std::pair<int, int>>{{5, 4}, {1, 1}, {1, 7}, {7, 1}, {2, 2}, {13, 6}}) {
    ImageGray img(w, h);
    fill_random(img, rng, 1000);
    const auto windows = collect(img);
    REQUIRE(windows.size() == img.pixel_count());
    for (const auto& win : windows) CHECK(win.cells == gather(img, win.cx, win.cy));
  }
}

TEST_CASE("stream_window keeps 2*width+3 values and emits with bounded lag") {
  for (int w : {1, 4, 31}) {
    const int h = 40;
    WindowStream<int> s(w, h);
    CHECK(s.capacity() == static_cast<std::size_t>(2 * w + 3));
    std::size_t emitted = 0;
    for (int i = 0; i < w * h; ++i) {
      s.push(i, [&](const Window3x3<int>&) { ++emitted; });
      // lag never exceeds one row plus one pixel
      CHECK(s.received() - s.emitted() <= static_cast<std::size_t>(w + 1));
    }
    s.finish([&](const Window3x3<int>&) { ++emitted; });
    CHECK(emitted == static_cast<std::size_t>(w * h));
  }
}

TEST_CASE("stream_window reports stream length mismatches") {
  auto ignore = [](const Window3x3<int>&) {};
  WindowStream<int> s(2, 2);
  for (int i = 0; i < 3; ++i) s.push(i, ignore);
  CHECK_THROWS_AS(s.finish(ignore), StreamLengthError);
  s.push(3, ignore);
  CHECK_NOTHROW(s.finish(ignore));
  CHECK_THROWS_AS(s.push(4, ignore), StreamLengthError);
}

TEST_CASE("gaussian3x3 examples") {
  SUBCASE("constant image is a fixed point") {
    const ImageCbCr img(6, 5, 100);
    CHECK(gaussian3x3(img) == img);
  }
  SUBCASE("interior impulse of 16 spreads as the kernel") {
    ImageCbCr img(5, 5, 0);
    img(2, 2, 0) = 16;
    const auto out = gaussian3x3(img);
    CHECK(out(2, 2, 0) == 4);
    CHECK(out(1, 2, 0) == 2);
    CHECK(out(3, 2, 0) == 2);
    CHECK(out(2, 1, 0) == 2);
    CHECK(out(2, 3, 0) == 2);
    CHECK(out(1, 1, 0) == 1);
    CHECK(out(3, 3, 0) == 1);
    CHECK(out(0, 0, 0) == 0);
    CHECK(out.channel(1).isConstant(0));
  }
  SUBCASE("1x1 image") {
    ImageCbCr img(1, 1);
    img(0, 0, 0) = 77;
    img(0, 0, 1) = 201;
    CHECK(gaussian3x3(img) == img);
  }
}

TEST_CASE("gaussian3x3 equals the dense convolution oracle and stays within the window range") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dim(1, 20);
  for (int trial = 0; trial < 50; ++trial) {
    ImageCbCr img(dim(rng), dim(rng));
    fill_random(img, rng, 255);
    const auto out = gaussian3x3(img);
    CHECK(out == oracle::dense_convolve3x3(img, kBinomial, 16));
    for (int c = 0; c < 2; ++c) {
      for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
          int lo = 255;
          int hi = 0;
          for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
              const int v = img(std::clamp(x + dx, 0, img.width() - 1), std::clamp(y + dy, 0, img.height() - 1), c);
              lo = std::min(lo, v);
              hi = std::max(hi, v);
            }
          }
          CHECK(out(x, y, c) >= lo);
          CHECK(out(x, y, c) <= hi);
        }
      }
    }
  }
}

TEST_CASE("dense convolution oracle with the identity kernel") {
  std::mt19937 rng(2);
  ImageCbCr img(7, 3);
  fill_random(img, rng, 255);
  Eigen::Matrix<int, 3, 3, Eigen::RowMajor> identity = Eigen::Matrix<int, 3, 3, Eigen::RowMajor>::Zero();
  identity(1, 1) = 1;
  CHECK(oracle::dense_convolve3x3(img, identity, 1) == img);
}

TEST_CASE("median9 network equals full sort on all 0/1/2 patterns") {
  // 3^9 patterns exercise every comparator outcome that matters for a median network.
  for (int code = 0; code < 19683; ++code) {
    std::array<std::uint32_t, 9> v{};
    int c = code;
    for (auto& e : v) {
      e = static_cast<std::uint32_t>(c % 3);
      c /= 3;
    }
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(median9(v) == sorted[4]);
  }
  CHECK(median9({1, 2, 3, 4, 5, 6, 7, 8, 9}) == 5);
  CHECK(median9({9, 8, 7, 6, 5, 4, 3, 2, 1}) == 5);
  CHECK(median9({0, 0, 0, 0, 5, 0, 0, 0, 0}) == 0);
}

TEST_CASE("median3x3 examples and properties") {
  SUBCASE("constant image unchanged") {
    const ImageGray img(4, 4, 3);
    CHECK(median3x3(img) == img);
  }
  SUBCASE("isolated deviant center is suppressed") {
    ImageGray img(3, 3, 0);
    img(1, 1) = 5;
    CHECK(median3x3(img)(1, 1) == 0);
  }
  SUBCASE("window 1..9 gives 5") {
    ImageGray img(3, 3);
    for (int i = 0; i < 9; ++i) img(i % 3, i / 3) = static_cast<std::uint32_t>(i + 1);
    CHECK(median3x3(img)(1, 1) == 5);
  }
  SUBCASE("interior pixel surrounded by one class takes that class") {
    std::mt19937 rng(8);
    for (int t = 0; t < 100; ++t) {
      ImageGray img(5, 5);
      fill_random(img, rng, 3);
      const std::uint32_t k = static_cast<std::uint32_t>(rng() % 4);
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) img(2 + dx, 2 + dy) = k;
      }
      img(2, 2) = (k + 1) % 4;
      CHECK(median3x3(img)(2, 2) == k);
    }
  }
}

TEST_CASE("median3x3 equals the sorting oracle and outputs a window member") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> dim(1, 24);
  for (int trial = 0; trial < 50; ++trial) {
    ImageGray img(dim(rng), dim(rng));
    fill_random(img, rng, 3);
    const auto out = median3x3(img);
    CHECK(out == oracle::sort_median3x3(img));
    const auto windows = collect(img);
    for (const auto& w : windows) {
      CHECK((w.cells.array() == out(w.cx, w.cy)).any());
    }
  }
}
