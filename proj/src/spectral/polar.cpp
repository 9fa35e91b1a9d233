#include "phaselab/spectral/polar.hpp"

#include <cmath>

#include "phaselab/core/error.hpp"

namespace phaselab {

double principal_phase(std::complex<double> z) {
  if (z.real() == 0.0 && z.imag() == 0.0) return 0.0;
  double p = std::arg(z);
  // atan2 can return -pi for arguments with a negative-zero imaginary part.
  if (p <= -3.14159265358979323846) p = 3.14159265358979323846;
  return p;
}

PolarSpectrum to_polar(const ComplexGrid& grid) {
  if (grid.height <= 0 || grid.width <= 0) throw InvalidInput("to_polar: empty grid");
  PolarSpectrum out;
  out.amplitude = RealPlane(grid.height, grid.width);
  out.phase = RealPlane(grid.height, grid.width);
  for (std::size_t i = 0; i < grid.v.size(); ++i) {
    out.amplitude.v[i] = std::abs(grid.v[i]);
    out.phase.v[i] = principal_phase(grid.v[i]);
  }
  return out;
}

ComplexGrid from_polar(const PolarSpectrum& polar) {
  if (polar.amplitude.height != polar.phase.height ||
      polar.amplitude.width != polar.phase.width)
    throw InvalidInput("from_polar: amplitude/phase dimensions differ");
  ComplexGrid out(polar.amplitude.height, polar.amplitude.width);
  for (std::size_t i = 0; i < out.v.size(); ++i) {
    const double a = polar.amplitude.v[i];
    const double p = polar.phase.v[i];
    out.v[i] = std::complex<double>(a * std::cos(p), a * std::sin(p));
  }
  return out;
}

}  // namespace phaselab
