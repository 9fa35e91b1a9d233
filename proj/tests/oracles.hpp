#pragma once

// Independent reference implementations used only by tests. They recompute
// results straight from the definitions (direct summation, explicit pair
// counting) and never call the library paths they check.

#include <complex>
#include <vector>

#include "phaselab/core/rng.hpp"
#include "phaselab/spectral/image.hpp"

namespace oracle {

constexpr double kPi = 3.14159265358979323846;

// Direct O(N^2) forward transform with the 1/N scale.
inline std::vector<std::complex<double>> dft_direct(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t u = 0; u < n; ++u) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t m = 0; m < n; ++m)
      acc += x[m] * std::polar(1.0, -2.0 * kPi * static_cast<double>(u) *
                                        static_cast<double>(m) / static_cast<double>(n));
    out[u] = acc / static_cast<double>(n);
  }
  return out;
}

// Direct O(N^4) 2D forward transform with the 1/(H*W) scale.
inline phaselab::ComplexGrid dft2_direct(const phaselab::RealPlane& img) {
  const int h = img.height, w = img.width;
  phaselab::ComplexGrid out(h, w);
  for (int u = 0; u < h; ++u)
    for (int v = 0; v < w; ++v) {
      std::complex<double> acc(0.0, 0.0);
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
          acc += img.at(y, x) *
                 std::polar(1.0, -2.0 * kPi *
                                     (static_cast<double>(u) * y / h +
                                      static_cast<double>(v) * x / w));
      out.at(u, v) = acc / static_cast<double>(h * w);
    }
  return out;
}

// Brute-force pairwise AUC with ties credited one half.
inline double auc_pairwise(const std::vector<double>& scores,
                           const std::vector<int>& labels) {
  double wins = 0.0;
  long pairs = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (labels[i] == 0) continue;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (labels[j] != 0) continue;
      ++pairs;
      if (scores[i] > scores[j])
        wins += 1.0;
      else if (scores[i] == scores[j])
        wins += 0.5;
    }
  }
  return wins / static_cast<double>(pairs);
}

inline std::vector<double> random_signal(phaselab::Rng& rng, std::size_t n,
                                         double lo = -1.0, double hi = 1.0) {
  std::vector<double> out(n);
  for (double& x : out) x = rng.uniform(lo, hi);
  return out;
}

}  // namespace oracle
