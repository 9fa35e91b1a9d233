#pragma once

#include "phaselab/spectral/image.hpp"

namespace phaselab {

// amplitude = |X|, phase = principal argument in (-pi, pi]. A coefficient of
// exactly zero gets phase 0.
PolarSpectrum to_polar(const ComplexGrid& grid);

ComplexGrid from_polar(const PolarSpectrum& polar);

// Principal argument normalized so that -pi maps to +pi; 0 for z == 0.
double principal_phase(std::complex<double> z);

}  // namespace phaselab
