#pragma once

#include <cstdint>
#include <utility>

#include "phaselab/resample/ops.hpp"
#include "phaselab/synth/compress.hpp"

namespace phaselab {

enum class Label { kPristine, kForged };

// A decoder surrogate: push the masked region through the resampling chain
// (typically down-by-2 then up-by-2 with some kernel, repeated), blend back
// with a soft mask, then compress. Pristine samples share the compression so
// the only systematic class difference is the resampling trace.
struct ForgeryRecipe {
  ResampleChain chain;
  RealPlane mask;  // blend weights in [0,1]
  CompressionLevel compression = CompressionLevel::kNone;
};

// Soft elliptical mask with a feathered edge; fully inside = 1, outside = 0.
RealPlane elliptical_mask(int height, int width, double center_y, double center_x,
                          double radius_y, double radius_x, double feather);

// mask ⊙ chain(image) + (1-mask) ⊙ image, then compression. The label is
// forged iff the chain is non-empty and the mask has support.
std::pair<ImageGrid, Label> apply_forgery(const ImageGrid& image,
                                          const ForgeryRecipe& recipe);

// Down-by-2 (stride decimation) then up-by-2 with the given kernel, t times.
ResampleChain down_up_chain(ResampleKind kernel, int times);

}  // namespace phaselab
