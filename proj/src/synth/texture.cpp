#include "phaselab/synth/texture.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "phaselab/core/error.hpp"
#include "phaselab/core/rng.hpp"
#include "phaselab/spectral/dft.hpp"

namespace phaselab {

std::string to_string(TextureKind kind) {
  switch (kind) {
    case TextureKind::kFractalNoise: return "fractal-noise";
    case TextureKind::kGradientSpeckle: return "gradient-speckle";
    case TextureKind::kMosaic: return "mosaic";
  }
  return "?";
}

TextureKind texture_kind_from_string(const std::string& name) {
  if (name == "fractal-noise") return TextureKind::kFractalNoise;
  if (name == "gradient-speckle") return TextureKind::kGradientSpeckle;
  if (name == "mosaic") return TextureKind::kMosaic;
  throw InvalidInput("unknown texture kind: " + name);
}

namespace {

constexpr double kPi = 3.14159265358979323846;

ImageGrid joint_normalize(std::vector<RealPlane> planes) {
  double lo = planes[0].v[0], hi = planes[0].v[0];
  for (const auto& p : planes)
    for (double x : p.v) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  const double inv = hi - lo > 1e-12 ? 1.0 / (hi - lo) : 0.0;
  std::vector<double> data;
  data.reserve(planes.size() * planes[0].v.size());
  for (const auto& p : planes)
    for (double x : p.v) data.push_back((x - lo) * inv);
  return ImageGrid::from_data_clamped(planes[0].height, planes[0].width,
                                      static_cast<int>(planes.size()),
                                      std::move(data));
}

// Wrapped frequency index: 0, 1, ..., n/2, -(n/2-1), ..., -1 scaled by 1/n.
double freq_coord(int i, int n) {
  const int wrapped = i <= n / 2 ? i : i - n;
  return static_cast<double>(wrapped) / n;
}

ImageGrid fractal_noise(int n, double alpha, Rng& rng) {
  // Shared random phase field plus per-channel jitter keeps channels
  // correlated the way color textures are.
  RealPlane base_phase(n, n);
  for (double& p : base_phase.v) p = rng.uniform(-kPi, kPi);
  std::vector<RealPlane> chans;
  for (int c = 0; c < 3; ++c) {
    ComplexGrid spec(n, n);
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        const double fy = freq_coord(y, n);
        const double fx = freq_coord(x, n);
        const double f = std::sqrt(fy * fy + fx * fx);
        if (f == 0.0) {
          spec.at(y, x) = 0.0;
          continue;
        }
        const double amp = std::pow(f, -alpha);
        const double ph = base_phase.at(y, x) + 0.35 * rng.uniform(-kPi, kPi);
        spec.at(y, x) = std::complex<double>(amp * std::cos(ph), amp * std::sin(ph));
      }
    }
    chans.push_back(idft2(spec));
  }
  return joint_normalize(std::move(chans));
}

ImageGrid gradient_speckle(int n, Rng& rng) {
  const double ang = rng.uniform(0.0, 2.0 * kPi);
  const double dy = std::sin(ang), dx = std::cos(ang);
  std::vector<RealPlane> chans(3, RealPlane(n, n));
  for (int c = 0; c < 3; ++c) {
    const double gain = rng.uniform(0.5, 1.0);
    const double bias = rng.uniform(0.0, 0.3);
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) {
        const double g = 0.5 + 0.5 * (dy * y + dx * x) / n;
        chans[c].at(y, x) = g * gain + bias + rng.normal(0.0, 0.06);
      }
  }
  const int spots = static_cast<int>(rng.uniform_int(20, 60));
  for (int s = 0; s < spots; ++s) {
    const int cy = static_cast<int>(rng.uniform_int(0, n - 1));
    const int cx = static_cast<int>(rng.uniform_int(0, n - 1));
    const int r = static_cast<int>(rng.uniform_int(1, 2));
    const double val[3] = {rng.uniform(), rng.uniform(), rng.uniform()};
    for (int y = std::max(0, cy - r); y < std::min(n, cy + r + 1); ++y)
      for (int x = std::max(0, cx - r); x < std::min(n, cx + r + 1); ++x)
        for (int c = 0; c < 3; ++c) chans[c].at(y, x) = val[c];
  }
  return joint_normalize(std::move(chans));
}

ImageGrid mosaic(int n, Rng& rng) {
  const int tile = static_cast<int>(rng.uniform_int(4, 12));
  std::vector<RealPlane> chans(3, RealPlane(n, n));
  for (int y0 = 0; y0 < n; y0 += tile)
    for (int x0 = 0; x0 < n; x0 += tile) {
      const double val[3] = {rng.uniform(), rng.uniform(), rng.uniform()};
      for (int y = y0; y < std::min(n, y0 + tile); ++y)
        for (int x = x0; x < std::min(n, x0 + tile); ++x)
          for (int c = 0; c < 3; ++c) chans[c].at(y, x) = val[c];
    }
  for (auto& ch : chans)
    for (double& v : ch.v) v += rng.normal(0.0, 0.03);
  return joint_normalize(std::move(chans));
}

}  // namespace

ImageGrid gen_texture(const TextureSpec& spec) {
  if (spec.size != 32 && spec.size != 64 && spec.size != 128)
    throw InvalidInput("gen_texture: size must be one of {32, 64, 128}");
  Rng rng(spec.seed);
  switch (spec.kind) {
    case TextureKind::kFractalNoise: {
      if (spec.alpha < 0.5 || spec.alpha > 2.0)
        throw InvalidInput("gen_texture: alpha must lie in [0.5, 2]");
      return fractal_noise(spec.size, spec.alpha, rng);
    }
    case TextureKind::kGradientSpeckle:
      return gradient_speckle(spec.size, rng);
    case TextureKind::kMosaic:
      return mosaic(spec.size, rng);
  }
  throw InvalidInput("gen_texture: unknown kind");
}

double radial_log_amplitude_slope(const ImageGrid& image) {
  const ComplexGrid spec = dft2(luminance(image));
  const int n = spec.height;
  // Bin amplitudes by integer radius in wrapped frequency units, skip DC.
  const int max_bin = n / 2;
  std::vector<double> sum(max_bin + 1, 0.0);
  std::vector<int> cnt(max_bin + 1, 0);
  for (int y = 0; y < spec.height; ++y)
    for (int x = 0; x < spec.width; ++x) {
      const double fy = freq_coord(y, n) * n;
      const double fx = freq_coord(x, spec.width) * spec.width;
      const int r = static_cast<int>(std::round(std::sqrt(fy * fy + fx * fx)));
      if (r < 1 || r > max_bin) continue;
      sum[r] += std::abs(spec.at(y, x));
      ++cnt[r];
    }
  // Least squares of log(mean amplitude) against log(radius).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (int r = 1; r <= max_bin; ++r) {
    if (cnt[r] == 0) continue;
    const double mean = sum[r] / cnt[r];
    if (mean <= 0.0) continue;
    const double lx = std::log(static_cast<double>(r));
    const double ly = std::log(mean);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++m;
  }
  if (m < 2) throw InvalidInput("radial_log_amplitude_slope: degenerate spectrum");
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace phaselab
