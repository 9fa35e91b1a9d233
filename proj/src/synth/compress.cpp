#include "phaselab/synth/compress.hpp"

#include <array>
#include <cmath>

#include "phaselab/core/error.hpp"

namespace phaselab {

std::string to_string(CompressionLevel q) {
  switch (q) {
    case CompressionLevel::kNone: return "none";
    case CompressionLevel::kLight: return "light";
    case CompressionLevel::kHeavy: return "heavy";
  }
  return "?";
}

CompressionLevel compression_from_string(const std::string& name) {
  if (name == "none") return CompressionLevel::kNone;
  if (name == "light") return CompressionLevel::kLight;
  if (name == "heavy") return CompressionLevel::kHeavy;
  throw InvalidInput("unknown compression level: " + name);
}

namespace {

constexpr int kBlock = 8;

// Orthonormal DCT-II basis, M[k][n].
const std::array<std::array<double, kBlock>, kBlock>& dct_basis() {
  static const auto basis = [] {
    std::array<std::array<double, kBlock>, kBlock> m{};
    constexpr double pi = 3.14159265358979323846;
    for (int k = 0; k < kBlock; ++k) {
      const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / kBlock);
      for (int n = 0; n < kBlock; ++n)
        m[k][n] = scale * std::cos(pi * (2 * n + 1) * k / (2.0 * kBlock));
    }
    return m;
  }();
  return basis;
}

}  // namespace

ImageGrid compress_block(const ImageGrid& image, CompressionLevel q) {
  if (q == CompressionLevel::kNone) return image;
  if (image.height() % kBlock != 0 || image.width() % kBlock != 0)
    throw InvalidInput("compress_block: dimensions must be divisible by 8");
  const double step = quantization_step(q);
  const auto& basis = dct_basis();
  ImageGrid out = image;
  double block[kBlock][kBlock];
  double coef[kBlock][kBlock];
  for (int c = 0; c < image.channels(); ++c) {
    for (int by = 0; by < image.height(); by += kBlock) {
      for (int bx = 0; bx < image.width(); bx += kBlock) {
        // coef = B * block * B^T
        for (int k = 0; k < kBlock; ++k)
          for (int x = 0; x < kBlock; ++x) {
            double acc = 0.0;
            for (int y = 0; y < kBlock; ++y)
              acc += basis[k][y] * image.at(c, by + y, bx + x);
            block[k][x] = acc;
          }
        for (int k = 0; k < kBlock; ++k)
          for (int l = 0; l < kBlock; ++l) {
            double acc = 0.0;
            for (int x = 0; x < kBlock; ++x) acc += block[k][x] * basis[l][x];
            coef[k][l] = std::round(acc / step) * step;
          }
        // block = B^T * coef * B
        for (int y = 0; y < kBlock; ++y)
          for (int l = 0; l < kBlock; ++l) {
            double acc = 0.0;
            for (int k = 0; k < kBlock; ++k) acc += basis[k][y] * coef[k][l];
            block[y][l] = acc;
          }
        for (int y = 0; y < kBlock; ++y)
          for (int x = 0; x < kBlock; ++x) {
            double acc = 0.0;
            for (int l = 0; l < kBlock; ++l) acc += block[y][l] * basis[l][x];
            out.at(c, by + y, bx + x) = std::min(1.0, std::max(0.0, acc));
          }
      }
    }
  }
  return out;
}

}  // namespace phaselab
