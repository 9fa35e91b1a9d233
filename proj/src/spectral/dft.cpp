#include "phaselab/spectral/dft.hpp"

#include <cmath>

#include "phaselab/core/error.hpp"

namespace phaselab {
namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 Cooley-Tukey, unnormalized, sign = -1 forward.
void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const auto u = a[i + k];
        const auto v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Direct O(N^2) sum for sizes that are not a power of two.
std::vector<std::complex<double>> dft_direct(
    const std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t u = 0; u < n; ++u) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t m = 0; m < n; ++m) {
      const double ang =
          sign * 2.0 * kPi * static_cast<double>(u * m % n) / static_cast<double>(n);
      acc += a[m] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[u] = acc;
  }
  return out;
}

std::vector<std::complex<double>> transform(std::vector<std::complex<double>> a,
                                            int sign) {
  if (is_pow2(a.size())) {
    fft_pow2(a, sign);
    return a;
  }
  return dft_direct(a, sign);
}

}  // namespace

Spectrum dft1(const Signal& x) {
  if (x.empty()) throw InvalidInput("dft1: empty signal");
  for (double s : x)
    if (!std::isfinite(s)) throw InvalidInput("dft1: non-finite sample");
  std::vector<std::complex<double>> a(x.begin(), x.end());
  a = transform(std::move(a), -1);
  const double scale = 1.0 / static_cast<double>(x.size());
  for (auto& c : a) c *= scale;
  return a;
}

Spectrum idft1_complex(const Spectrum& spectrum) {
  if (spectrum.empty()) throw InvalidInput("idft1: empty spectrum");
  return transform(spectrum, +1);
}

Signal idft1(const Spectrum& spectrum) {
  const Spectrum full = idft1_complex(spectrum);
  Signal out(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) out[i] = full[i].real();
  return out;
}

namespace {

// Applies the 1D transform to every row, then every column.
ComplexGrid transform2(ComplexGrid g, int sign, double scale) {
  const int h = g.height, w = g.width;
  std::vector<std::complex<double>> line;
  for (int y = 0; y < h; ++y) {
    line.assign(g.v.begin() + static_cast<std::size_t>(y) * w,
                g.v.begin() + static_cast<std::size_t>(y + 1) * w);
    line = transform(std::move(line), sign);
    std::copy(line.begin(), line.end(), g.v.begin() + static_cast<std::size_t>(y) * w);
  }
  line.resize(h);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) line[y] = g.at(y, x);
    line = transform(std::move(line), sign);
    for (int y = 0; y < h; ++y) g.at(y, x) = line[y];
  }
  if (scale != 1.0)
    for (auto& c : g.v) c *= scale;
  return g;
}

}  // namespace

ComplexGrid dft2(const RealPlane& plane) {
  if (plane.height <= 0 || plane.width <= 0)
    throw InvalidInput("dft2: empty plane");
  ComplexGrid g(plane.height, plane.width);
  for (std::size_t i = 0; i < plane.v.size(); ++i) g.v[i] = plane.v[i];
  const double scale = 1.0 / (static_cast<double>(plane.height) * plane.width);
  return transform2(std::move(g), -1, scale);
}

ComplexGrid dft2(const ImageGrid& image) {
  if (image.channels() != 1)
    throw InvalidInput("dft2: expected single-channel image");
  return dft2(image.plane(0));
}

RealPlane idft2(const ComplexGrid& grid) {
  if (grid.height <= 0 || grid.width <= 0) throw InvalidInput("idft2: empty grid");
  ComplexGrid g = transform2(grid, +1, 1.0);
  RealPlane out(grid.height, grid.width);
  for (std::size_t i = 0; i < g.v.size(); ++i) out.v[i] = g.v[i].real();
  return out;
}

RealPlane luminance(const ImageGrid& img) {
  if (img.channels() == 1) return img.plane(0);
  RealPlane out(img.height(), img.width());
  for (int y = 0; y < img.height(); ++y)
    for (int x = 0; x < img.width(); ++x)
      out.at(y, x) = 0.299 * img.at(0, y, x) + 0.587 * img.at(1, y, x) +
                     0.114 * img.at(2, y, x);
  return out;
}

}  // namespace phaselab
