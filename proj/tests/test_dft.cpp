#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "phaselab/core/error.hpp"
#include "phaselab/spectral/dft.hpp"

using namespace phaselab;

namespace {

double max_complex_dev(const Spectrum& a, const Spectrum& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("dft1 of a constant keeps only the DC bin") {
  const Spectrum s = dft1({1.0, 1.0, 1.0, 1.0});
  CHECK(std::abs(s[0] - 1.0) < 1e-15);
  for (int u = 1; u < 4; ++u) CHECK(std::abs(s[u]) < 1e-15);
}

TEST_CASE("dft1 of an impulse is flat at 1/N") {
  const Spectrum s = dft1({1.0, 0.0, 0.0, 0.0});
  for (int u = 0; u < 4; ++u) CHECK(std::abs(s[u] - 0.25) < 1e-15);
}

TEST_CASE("dft1 matches the direct summation oracle") {
  Rng rng(42);
  const Signal x = oracle::random_signal(rng, 16);
  CHECK(max_complex_dev(dft1(x), oracle::dft_direct(x)) < 1e-12);
}

TEST_CASE("dft1 rejects an empty signal") {
  CHECK_THROWS_AS(dft1({}), InvalidInput);
}

TEST_CASE("idft1 of a DC-only spectrum is constant") {
  const Signal x = idft1({{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
  for (double v : x) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("idft1 of an all-ones spectrum is an impulse scaled by N") {
  const Signal x = idft1({{1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}});
  CHECK(x[0] == doctest::Approx(4.0).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(std::fabs(x[i]) < 1e-12);
}

TEST_CASE("1D round-trips hold for every size 1..64") {
  Rng rng(7);
  for (std::size_t n = 1; n <= 64; ++n) {
    const Signal x = oracle::random_signal(rng, n);
    const Signal back = idft1(dft1(x));
    for (std::size_t i = 0; i < n; ++i)
      CHECK(std::fabs(back[i] - x[i]) < 1e-9);
    // imaginary residue of the complex inverse stays tiny
    const Spectrum full = idft1_complex(dft1(x));
    for (const auto& c : full) CHECK(std::fabs(c.imag()) < 1e-9);
  }
}

TEST_CASE("Parseval: sum|x|^2 = N sum|X|^2 under the 1/N forward scale") {
  Rng rng(11);
  for (std::size_t n : {3, 8, 17, 32, 64}) {
    const Signal x = oracle::random_signal(rng, n);
    double spatial = 0.0;
    for (double v : x) spatial += v * v;
    double spectral = 0.0;
    for (const auto& c : dft1(x)) spectral += std::norm(c);
    CHECK(std::fabs(spatial - static_cast<double>(n) * spectral) <
          1e-9 * std::fabs(spatial));
  }
}

TEST_CASE("dft1 is linear") {
  Rng rng(13);
  const Signal x = oracle::random_signal(rng, 24);
  const Signal y = oracle::random_signal(rng, 24);
  const double a = 1.7, b = -0.3;
  Signal mix(24);
  for (int i = 0; i < 24; ++i) mix[i] = a * x[i] + b * y[i];
  const Spectrum lhs = dft1(mix);
  const Spectrum fx = dft1(x), fy = dft1(y);
  for (int u = 0; u < 24; ++u)
    CHECK(std::abs(lhs[u] - (a * fx[u] + b * fy[u])) < 1e-12);
}

TEST_CASE("dft2 of a constant image keeps only the (0,0) bin") {
  const ImageGrid img(6, 6, 1, 0.5);
  const ComplexGrid g = dft2(img);
  CHECK(std::abs(g.at(0, 0) - 0.5) < 1e-12);
  for (int y = 0; y < 6; ++y)
    for (int x = 0; x < 6; ++x)
      if (y != 0 || x != 0) CHECK(std::abs(g.at(y, x)) < 1e-12);
}

TEST_CASE("dft2 of a single-pixel impulse is flat with magnitude 1/(H*W)") {
  ImageGrid img(4, 8, 1, 0.0);
  img.at(0, 0, 0) = 1.0;
  const ComplexGrid g = dft2(img);
  for (const auto& c : g.v) CHECK(std::abs(c - 1.0 / 32.0) < 1e-12);
}

TEST_CASE("dft2 matches the direct double-sum oracle on an 8x8 image") {
  Rng rng(99);
  RealPlane img(8, 8);
  for (double& v : img.v) v = rng.uniform();
  const ComplexGrid fast = dft2(img);
  const ComplexGrid slow = oracle::dft2_direct(img);
  for (std::size_t i = 0; i < fast.v.size(); ++i)
    CHECK(std::abs(fast.v[i] - slow.v[i]) < 1e-10);
}

TEST_CASE("2D round-trip reproduces the image") {
  Rng rng(5);
  for (int h : {1, 3, 16}) {
    for (int w : {1, 5, 32}) {
      RealPlane img(h, w);
      for (double& v : img.v) v = rng.uniform();
      const RealPlane back = idft2(dft2(img));
      for (std::size_t i = 0; i < img.v.size(); ++i)
        CHECK(std::fabs(back.v[i] - img.v[i]) < 1e-9);
    }
  }
}

TEST_CASE("dft2 rejects multi-channel images") {
  const ImageGrid rgb(4, 4, 3, 0.2);
  CHECK_THROWS_AS(dft2(rgb), InvalidInput);
}
