#include "phaselab/spectral/phase.hpp"

#include <algorithm>
#include <cmath>

#include "phaselab/core/error.hpp"
#include "phaselab/spectral/dft.hpp"
#include "phaselab/spectral/polar.hpp"

namespace phaselab {

RgbpImage::RgbpImage(ImageGrid rgb, ImageGrid phase)
    : rgb_(std::move(rgb)), phase_(std::move(phase)) {
  if (rgb_.channels() != 3) throw InvalidInput("RgbpImage: rgb must have 3 channels");
  if (phase_.channels() != 1)
    throw InvalidInput("RgbpImage: phase must have 1 channel");
  if (rgb_.height() != phase_.height() || rgb_.width() != phase_.width())
    throw InvalidInput("RgbpImage: rgb/phase dimensions differ");
}

ImageGrid normalize_to_image(const RealPlane& plane) {
  const auto [lo_it, hi_it] = std::minmax_element(plane.v.begin(), plane.v.end());
  const double lo = *lo_it, hi = *hi_it;
  std::vector<double> out(plane.v.size(), 0.0);
  if (hi - lo > 1e-12) {
    const double inv = 1.0 / (hi - lo);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (plane.v[i] - lo) * inv;
  }
  return ImageGrid::from_data_clamped(plane.height, plane.width, 1, std::move(out));
}

RealPlane phase_only_plane(const RealPlane& plane, PhaseMode mode) {
  const PolarSpectrum polar = to_polar(dft2(plane));
  ComplexGrid spec(plane.height, plane.width);
  if (mode == PhaseMode::kUnitAmplitude) {
    for (std::size_t i = 0; i < spec.v.size(); ++i) {
      const double p = polar.phase.v[i];
      spec.v[i] = std::complex<double>(std::cos(p), std::sin(p));
    }
  } else {
    for (std::size_t i = 0; i < spec.v.size(); ++i)
      spec.v[i] = std::complex<double>(std::abs(polar.phase.v[i]), 0.0);
  }
  return idft2(spec);
}

RealPlane amplitude_only_plane(const RealPlane& plane) {
  const PolarSpectrum polar = to_polar(dft2(plane));
  ComplexGrid spec(plane.height, plane.width);
  for (std::size_t i = 0; i < spec.v.size(); ++i)
    spec.v[i] = std::complex<double>(polar.amplitude.v[i], 0.0);
  return idft2(spec);
}

ImageGrid phase_only_image(const ImageGrid& image, PhaseMode mode) {
  return normalize_to_image(phase_only_plane(luminance(image), mode));
}

RgbpImage make_rgbp(const ImageGrid& image, PhaseMode mode) {
  if (image.channels() != 3)
    throw InvalidInput("make_rgbp: expected a 3-channel image");
  return RgbpImage(image, phase_only_image(image, mode));
}

}  // namespace phaselab
