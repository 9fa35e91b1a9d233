#pragma once

#include <string>

#include "phaselab/spectral/image.hpp"

namespace phaselab {

// Block-transform compression stand-in: per 8x8 block, orthonormal cosine
// transform, uniform scalar quantization of the coefficients, inverse
// transform, clamp to [0,1]. Light/heavy steps are artifact parameters.
enum class CompressionLevel { kNone, kLight, kHeavy };

std::string to_string(CompressionLevel q);
CompressionLevel compression_from_string(const std::string& name);

inline double quantization_step(CompressionLevel q) {
  switch (q) {
    case CompressionLevel::kNone: return 0.0;
    case CompressionLevel::kLight: return 4.0 / 255.0;
    case CompressionLevel::kHeavy: return 16.0 / 255.0;
  }
  return 0.0;
}

// Requires H and W divisible by 8. kNone is the identity.
ImageGrid compress_block(const ImageGrid& image, CompressionLevel q);

}  // namespace phaselab
