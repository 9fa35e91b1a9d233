#include "phaselab/resample/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "phaselab/core/error.hpp"

namespace phaselab {

int count_significant(const Spectrum& spectrum, double epsilon) {
  if (spectrum.empty()) throw InvalidInput("count_significant: empty spectrum");
  if (epsilon <= 0.0) throw InvalidInput("count_significant: epsilon must be > 0");
  double max_mod = 0.0;
  for (const auto& c : spectrum) max_mod = std::max(max_mod, std::abs(c));
  if (max_mod == 0.0) return 0;
  const double cut = epsilon * max_mod;
  int count = 0;
  for (const auto& c : spectrum)
    if (std::abs(c) > cut) ++count;
  return count;
}

ComponentCounts predicted_counts(const ComponentCountModel& model,
                                 AmpUpCount up_reading) {
  if (model.n < 1) throw InvalidInput("predicted_counts: N must be >= 1");
  if (model.k < 0 || model.k > model.n - 1)
    throw InvalidInput("predicted_counts: k must satisfy 0 <= k <= N-1");
  if (model.epsilon <= 0.0)
    throw InvalidInput("predicted_counts: epsilon must be > 0");
  const int n = model.n, k = model.k;
  ComponentCounts c{};
  c.x_amp = k + 1;
  c.x_phase = n;
  c.x_amp_up = 2 * (k + 1);
  c.x_phase_up = 2 * n;
  c.y_amp = n + k;
  c.y_amp_up = up_reading == AmpUpCount::kStated ? 2 * n : 2 * n + k;
  c.y_amp_phase = 2 * n - 1;
  c.y_amp_phase_up = 3 * n - 1;
  return c;
}

Signal convolve_circular(const Signal& signal, const Signal& kernel) {
  if (signal.empty()) throw InvalidInput("convolve_circular: empty signal");
  if (kernel.empty()) throw InvalidInput("convolve_circular: empty kernel");
  const std::size_t n = signal.size();
  if (kernel.size() > n)
    throw InvalidInput("convolve_circular: kernel longer than signal");
  Signal out(n, 0.0);
  for (std::size_t m = 0; m < kernel.size(); ++m) {
    const double cm = kernel[m];
    if (cm == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) out[(i + m) % n] += cm * signal[i];
  }
  return out;
}

double check_distributive(const Signal& f, const Signal& g, const Signal& h) {
  if (f.size() != g.size() || f.size() != h.size())
    throw InvalidInput("check_distributive: lengths differ");
  const Signal sum_first = [&] {
    Signal s(f.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = f[i] + g[i];
    return convolve_circular(s, h);
  }();
  const Signal fh = convolve_circular(f, h);
  const Signal gh = convolve_circular(g, h);
  double worst = 0.0;
  for (std::size_t i = 0; i < sum_first.size(); ++i)
    worst = std::max(worst, std::fabs(sum_first[i] - (fh[i] + gh[i])));
  return worst;
}

}  // namespace phaselab
