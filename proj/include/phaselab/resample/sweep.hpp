#pragma once

#include <string>
#include <vector>

#include "phaselab/resample/ops.hpp"
#include "phaselab/spectral/phase.hpp"

namespace phaselab {

// Corpus statistics for the divergence of phase/amplitude maps after t rounds
// of cumulative up-sampling. Each round up-samples by 2 with the chosen kind
// and decimates back to the original grid so maps stay comparable. Entry t=0
// compares the image with itself and is exactly zero.
struct SpectralDiffEntry {
  int t = 0;
  double phase_mean = 0.0;
  double phase_var = 0.0;
  double amp_mean = 0.0;
  double amp_var = 0.0;
};

struct SpectralDiffReport {
  ResampleKind kind;
  PhaseMode phase_mode;
  std::vector<SpectralDiffEntry> entries;

  std::string to_csv() const;
};

// Per image and per t, the statistic is the mean absolute pixel difference
// between the normalized phase-only (resp. amplitude-only) maps of the
// resampled and original luminance. The report holds its corpus mean and
// variance. Uses the unit-amplitude map by default: it carries phase
// information alone, which is what diverges under resampling.
SpectralDiffReport divergence_sweep(const std::vector<ImageGrid>& corpus,
                                    ResampleKind kind, int max_t,
                                    PhaseMode mode = PhaseMode::kUnitAmplitude,
                                    unsigned threads = 0);

}  // namespace phaselab
