#include "phaselab/synth/forgery.hpp"

#include <cmath>

#include "phaselab/core/error.hpp"

namespace phaselab {

RealPlane elliptical_mask(int height, int width, double center_y, double center_x,
                          double radius_y, double radius_x, double feather) {
  if (radius_y <= 0.0 || radius_x <= 0.0)
    throw InvalidInput("elliptical_mask: radii must be positive");
  if (feather <= 0.0) throw InvalidInput("elliptical_mask: feather must be positive");
  RealPlane mask(height, width);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      const double dy = (y - center_y) / radius_y;
      const double dx = (x - center_x) / radius_x;
      const double d = std::sqrt(dy * dy + dx * dx);
      // 1 inside the ellipse, ramping to 0 across the feather band
      const double v = (1.0 + feather - d) / feather;
      mask.at(y, x) = std::min(1.0, std::max(0.0, v));
    }
  return mask;
}

std::pair<ImageGrid, Label> apply_forgery(const ImageGrid& image,
                                          const ForgeryRecipe& recipe) {
  if (recipe.mask.height != image.height() || recipe.mask.width != image.width())
    throw InvalidInput("apply_forgery: mask dimensions do not match image");
  for (double m : recipe.mask.v)
    if (!(m >= 0.0 && m <= 1.0))
      throw InvalidInput("apply_forgery: mask values must lie in [0,1]");

  bool mask_has_support = false;
  for (double m : recipe.mask.v)
    if (m > 0.0) {
      mask_has_support = true;
      break;
    }

  const bool forged = mask_has_support && !recipe.chain.empty();
  ImageGrid blended = image;
  if (forged) {
    const ImageGrid resampled = apply_chain(image, recipe.chain);
    if (resampled.height() != image.height() || resampled.width() != image.width())
      throw InvalidInput(
          "apply_forgery: chain must map the image back to its own grid");
    for (int c = 0; c < image.channels(); ++c)
      for (int y = 0; y < image.height(); ++y)
        for (int x = 0; x < image.width(); ++x) {
          const double m = recipe.mask.at(y, x);
          blended.at(c, y, x) = m * resampled.at(c, y, x) + (1.0 - m) * image.at(c, y, x);
        }
  }
  return {compress_block(blended, recipe.compression),
          forged ? Label::kForged : Label::kPristine};
}

ResampleChain down_up_chain(ResampleKind kernel, int times) {
  if (kernel == ResampleKind::kDecimate)
    throw InvalidInput("down_up_chain: kernel must be an up-sampling kind");
  if (times < 1) throw InvalidInput("down_up_chain: times must be >= 1");
  ResampleChain chain;
  for (int t = 0; t < times; ++t) {
    chain.ops.push_back(ResampleOp{ResampleKind::kDecimate, 2});
    chain.ops.push_back(ResampleOp{kernel, 2});
  }
  return chain;
}

}  // namespace phaselab
