#pragma once

#include <complex>
#include <vector>

#include "phaselab/spectral/image.hpp"

namespace phaselab {

using Signal = std::vector<double>;
using Spectrum = std::vector<std::complex<double>>;

// Forward transform carries the 1/N factor, the inverse carries none:
//   X(u) = (1/N) sum_n x(n) e^{-j 2 pi u n / N}
//   x(n) =       sum_u X(u) e^{+j 2 pi u n / N}
// Under this convention a factor-2 zero-insertion up-sample duplicates the
// spectrum as X_up(u) = X(u mod N) / 2, and Parseval reads
// sum|x|^2 = N sum|X|^2.
Spectrum dft1(const Signal& x);

// Inverse transform, real part. Round-tripping a real signal leaves an
// imaginary residue below 1e-9 which is discarded here.
Signal idft1(const Spectrum& spectrum);

// Full complex inverse, for spectra that are not conjugate-symmetric.
Spectrum idft1_complex(const Spectrum& spectrum);

// Separable 2D versions (rows then columns). Single-channel input only;
// callers split/merge channels.
ComplexGrid dft2(const ImageGrid& image);
ComplexGrid dft2(const RealPlane& plane);
RealPlane idft2(const ComplexGrid& grid);

}  // namespace phaselab
