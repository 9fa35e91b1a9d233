#pragma once

#include <cstdint>
#include <string>

#include "phaselab/spectral/image.hpp"

namespace phaselab {

enum class TextureKind { kFractalNoise, kGradientSpeckle, kMosaic };

std::string to_string(TextureKind kind);
TextureKind texture_kind_from_string(const std::string& name);

// Pristine stand-ins. Fractal noise is synthesized in the frequency domain
// with amplitude ~ 1/f^alpha, giving the spectral decay of natural images
// (few significant amplitude components, all-significant phase).
struct TextureSpec {
  TextureKind kind = TextureKind::kFractalNoise;
  int size = 64;  // square, one of {32, 64, 128}
  std::uint64_t seed = 0;
  double alpha = 1.0;  // fractal kind only, in [0.5, 2]
};

ImageGrid gen_texture(const TextureSpec& spec);

// Least-squares slope of radially averaged log-amplitude vs log-frequency,
// the oracle for the 1/f^alpha decay.
double radial_log_amplitude_slope(const ImageGrid& image);

}  // namespace phaselab
