#include "phaselab/resample/sweep.hpp"

#include <cmath>
#include <sstream>

#include "phaselab/core/error.hpp"
#include "phaselab/core/parallel.hpp"

namespace phaselab {
namespace {

RealPlane normalized(const RealPlane& p) {
  double lo = p.v[0], hi = p.v[0];
  for (double x : p.v) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  RealPlane out(p.height, p.width);
  if (hi - lo > 1e-12) {
    const double inv = 1.0 / (hi - lo);
    for (std::size_t i = 0; i < p.v.size(); ++i) out.v[i] = (p.v[i] - lo) * inv;
  }
  return out;
}

double mean_abs_diff(const RealPlane& a, const RealPlane& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) acc += std::fabs(a.v[i] - b.v[i]);
  return acc / static_cast<double>(a.v.size());
}

ImageGrid round_trip_step(const ImageGrid& img, ResampleKind kind) {
  const ImageGrid up = apply_resample(img, ResampleOp{kind, 2});
  return apply_resample(up, ResampleOp{ResampleKind::kDecimate, 2});
}

}  // namespace

SpectralDiffReport divergence_sweep(const std::vector<ImageGrid>& corpus,
                                    ResampleKind kind, int max_t, PhaseMode mode,
                                    unsigned threads) {
  if (corpus.empty()) throw InvalidInput("divergence_sweep: empty corpus");
  if (max_t < 0) throw InvalidInput("divergence_sweep: max_t must be >= 0");
  if (kind == ResampleKind::kDecimate)
    throw InvalidInput("divergence_sweep: chain kind must be an up-sampler");

  const std::size_t n = corpus.size();
  // per image, per t: (phase diff, amp diff)
  std::vector<std::vector<std::pair<double, double>>> slots(
      n, std::vector<std::pair<double, double>>(max_t + 1, {0.0, 0.0}));

  parallel_for(
      n,
      [&](std::size_t i) {
        const RealPlane lum0 = luminance(corpus[i]);
        const RealPlane p0 = normalized(phase_only_plane(lum0, mode));
        const RealPlane a0 = normalized(amplitude_only_plane(lum0));
        ImageGrid cur = corpus[i];
        for (int t = 1; t <= max_t; ++t) {
          cur = round_trip_step(cur, kind);
          const RealPlane lum = luminance(cur);
          slots[i][t] = {mean_abs_diff(normalized(phase_only_plane(lum, mode)), p0),
                         mean_abs_diff(normalized(amplitude_only_plane(lum)), a0)};
        }
      },
      threads);

  SpectralDiffReport report;
  report.kind = kind;
  report.phase_mode = mode;
  report.entries.resize(max_t + 1);
  for (int t = 0; t <= max_t; ++t) {
    SpectralDiffEntry& e = report.entries[t];
    e.t = t;
    double pm = 0.0, am = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      pm += slots[i][t].first;
      am += slots[i][t].second;
    }
    pm /= static_cast<double>(n);
    am /= static_cast<double>(n);
    double pv = 0.0, av = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      pv += (slots[i][t].first - pm) * (slots[i][t].first - pm);
      av += (slots[i][t].second - am) * (slots[i][t].second - am);
    }
    e.phase_mean = pm;
    e.amp_mean = am;
    e.phase_var = pv / static_cast<double>(n);
    e.amp_var = av / static_cast<double>(n);
  }
  return report;
}

std::string SpectralDiffReport::to_csv() const {
  std::ostringstream out;
  out.precision(12);
  out << "t,phase_mean,phase_var,amp_mean,amp_var\n";
  for (const auto& e : entries)
    out << e.t << "," << e.phase_mean << "," << e.phase_var << "," << e.amp_mean
        << "," << e.amp_var << "\n";
  return out.str();
}

}  // namespace phaselab
