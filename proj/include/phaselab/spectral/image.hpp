#pragma once

#include <complex>
#include <vector>

#include "phaselab/core/error.hpp"

namespace phaselab {

// Unconstrained real-valued grid, the working representation for spatial
// reconstructions before any normalization.
struct RealPlane {
  int height = 0;
  int width = 0;
  std::vector<double> v;

  RealPlane() = default;
  RealPlane(int h, int w, double fill = 0.0)
      : height(h), width(w), v(static_cast<std::size_t>(h) * w, fill) {}

  double& at(int y, int x) { return v[static_cast<std::size_t>(y) * width + x]; }
  double at(int y, int x) const { return v[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return v.size(); }
};

// Image with values in [0,1], 1 or 3 channels, planar layout (c, y, x).
class ImageGrid {
 public:
  ImageGrid() = default;
  ImageGrid(int height, int width, int channels, double fill = 0.0)
      : height_(height), width_(width), channels_(channels),
        data_(static_cast<std::size_t>(height) * width * channels, fill) {
    validate_dims();
    if (fill < 0.0 || fill > 1.0) throw InvalidInput("ImageGrid: fill outside [0,1]");
  }

  static ImageGrid from_data(int height, int width, int channels,
                             std::vector<double> data) {
    ImageGrid img;
    img.height_ = height;
    img.width_ = width;
    img.channels_ = channels;
    img.data_ = std::move(data);
    img.validate_dims();
    if (img.data_.size() != static_cast<std::size_t>(height) * width * channels)
      throw InvalidInput("ImageGrid: data size does not match dimensions");
    for (double x : img.data_)
      if (!(x >= 0.0 && x <= 1.0))
        throw InvalidInput("ImageGrid: value outside [0,1]");
    return img;
  }

  // Same as from_data but clips small numeric overshoot instead of throwing,
  // for outputs of interpolation/rounding stages.
  static ImageGrid from_data_clamped(int height, int width, int channels,
                                     std::vector<double> data) {
    for (double& x : data) {
      if (!(x == x)) throw InvalidInput("ImageGrid: NaN value");
      if (x < 0.0) x = 0.0;
      if (x > 1.0) x = 1.0;
    }
    return from_data(height, width, channels, std::move(data));
  }

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }

  double& at(int c, int y, int x) {
    return data_[(static_cast<std::size_t>(c) * height_ + y) * width_ + x];
  }
  double at(int c, int y, int x) const {
    return data_[(static_cast<std::size_t>(c) * height_ + y) * width_ + x];
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  RealPlane plane(int c) const {
    RealPlane p(height_, width_);
    const std::size_t off = static_cast<std::size_t>(c) * height_ * width_;
    std::copy(data_.begin() + off, data_.begin() + off + p.size(), p.v.begin());
    return p;
  }

 private:
  void validate_dims() const {
    if (height_ <= 0 || width_ <= 0)
      throw InvalidInput("ImageGrid: dimensions must be positive");
    if (channels_ != 1 && channels_ != 3)
      throw InvalidInput("ImageGrid: channels must be 1 or 3");
  }

  int height_ = 0;
  int width_ = 0;
  int channels_ = 0;
  std::vector<double> data_;
};

// Frequency-domain counterpart of a single-channel grid.
struct ComplexGrid {
  int height = 0;
  int width = 0;
  std::vector<std::complex<double>> v;

  ComplexGrid() = default;
  ComplexGrid(int h, int w)
      : height(h), width(w), v(static_cast<std::size_t>(h) * w) {}

  std::complex<double>& at(int y, int x) {
    return v[static_cast<std::size_t>(y) * width + x];
  }
  std::complex<double> at(int y, int x) const {
    return v[static_cast<std::size_t>(y) * width + x];
  }
};

// Amplitude/phase split of a ComplexGrid. Amplitude is non-negative, phase
// lies in (-pi, pi] with the zero-coefficient phase pinned to 0.
struct PolarSpectrum {
  RealPlane amplitude;
  RealPlane phase;
};

// 0.299 R + 0.587 G + 0.114 B; identity for single-channel images.
RealPlane luminance(const ImageGrid& img);

}  // namespace phaselab
