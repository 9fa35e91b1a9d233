#pragma once

#include "phaselab/spectral/image.hpp"

namespace phaselab {

// Two readings of "spatial form of the phase spectrum":
//  - kUnitAmplitude: real part of idft2(e^{j P(u)}) — amplitude discarded,
//    the classic phase-only reconstruction.
//  - kAbsPhase: real part of idft2(|P(u)|) — the absolute phase values used
//    directly as a spectrum. Default for classifier inputs.
enum class PhaseMode { kUnitAmplitude, kAbsPhase };

// 4-channel input: RGB planes untouched, plus one phase channel derived from
// the luminance of the RGB content. All channels in [0,1], planar layout.
class RgbpImage {
 public:
  RgbpImage(ImageGrid rgb, ImageGrid phase);

  int height() const { return rgb_.height(); }
  int width() const { return rgb_.width(); }
  static constexpr int channels() { return 4; }

  double at(int c, int y, int x) const {
    return c < 3 ? rgb_.at(c, y, x) : phase_.at(0, y, x);
  }

  const ImageGrid& rgb() const { return rgb_; }
  const ImageGrid& phase() const { return phase_; }

 private:
  ImageGrid rgb_;
  ImageGrid phase_;
};

// Min-max to [0,1]; a constant plane maps to all zeros.
ImageGrid normalize_to_image(const RealPlane& plane);

// Spatial reconstruction from phase alone, min-max normalized to [0,1].
// 3-channel inputs are reduced to luminance first.
ImageGrid phase_only_image(const ImageGrid& image,
                           PhaseMode mode = PhaseMode::kAbsPhase);

// Same reconstruction without the final normalization, for spectral checks
// and for differencing maps across resampling chains.
RealPlane phase_only_plane(const RealPlane& plane, PhaseMode mode);

// Amplitude-side counterpart: reconstruction from the amplitude spectrum with
// phase zeroed, used by the divergence sweep.
RealPlane amplitude_only_plane(const RealPlane& plane);

RgbpImage make_rgbp(const ImageGrid& image,
                    PhaseMode mode = PhaseMode::kAbsPhase);

}  // namespace phaselab
