#pragma once

#include <string>
#include <vector>

#include "phaselab/spectral/dft.hpp"
#include "phaselab/spectral/image.hpp"

namespace phaselab {

enum class ResampleKind { kZeroInsert, kNearest, kBilinear, kBicubic, kDecimate };

std::string to_string(ResampleKind kind);
ResampleKind resample_kind_from_string(const std::string& name);

struct ResampleOp {
  ResampleKind kind = ResampleKind::kBilinear;
  int factor = 2;  // scale for up kinds, stride for decimate
};

// Ordered sequence of resampling steps; empty chain is the identity.
struct ResampleChain {
  std::vector<ResampleOp> ops;

  bool empty() const { return ops.empty(); }
};

// Length f*N output with the original samples at multiples of f and zeros
// elsewhere. The spectrum of the factor-2 case duplicates: X_up(u) = X(u mod N)/2.
Signal upsample_zero_insert(const Signal& signal, int factor = 2);

// max_u |X_up(u) - X(u mod N)/2| for the factor-2 zero-insert up-sample.
double verify_duplication(const Signal& signal);

RealPlane apply_resample(const RealPlane& plane, const ResampleOp& op);
ImageGrid apply_resample(const ImageGrid& image, const ResampleOp& op);
ImageGrid apply_chain(const ImageGrid& image, const ResampleChain& chain);

}  // namespace phaselab
