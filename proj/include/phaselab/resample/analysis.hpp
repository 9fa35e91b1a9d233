#pragma once

#include "phaselab/spectral/dft.hpp"

namespace phaselab {

// How many coefficients exceed epsilon * max |X(u)|. An all-zero spectrum
// counts zero. The threshold is relative so counts are scale-invariant.
int count_significant(const Spectrum& spectrum, double epsilon = 1e-3);

// Amplitude-vs-phase bookkeeping for a length-N signal whose amplitude
// spectrum keeps k+1 significant entries while the phase side keeps all N.
struct ComponentCountModel {
  int n = 0;  // signal length
  int k = 0;  // significant amplitude components minus one
  double epsilon = 1e-3;
};

// The written-out expansion for the up-sampled amplitude path is labeled with
// one count while its indices span another; both are reported.
enum class AmpUpCount { kStated, kByIndex };

struct ComponentCounts {
  int x_amp;         // k+1
  int x_phase;       // N
  int x_amp_up;      // 2(k+1)
  int x_phase_up;    // 2N
  int y_amp;         // N+k after one convolution
  int y_amp_up;      // stated: 2N; by index: 2N+k
  int y_amp_phase;   // 2N-1 for the concatenated input
  int y_amp_phase_up;  // 3N-1
};

ComponentCounts predicted_counts(const ComponentCountModel& model,
                                 AmpUpCount up_reading = AmpUpCount::kStated);

// Circular convolution with the kernel zero-padded to the signal length.
// Under the 1/N forward scale the spectral identity reads
// dft1(x (*) c) = N * dft1(x) * dft1(c).
Signal convolve_circular(const Signal& signal, const Signal& kernel);

// max |(f+g) (*) h - (f (*) h + g (*) h)|; pure floating-point linearity, so
// it stays below 1e-10 for any inputs of equal length.
double check_distributive(const Signal& f, const Signal& g, const Signal& h);

}  // namespace phaselab
