#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "phaselab/core/error.hpp"
#include "phaselab/spectral/dft.hpp"
#include "phaselab/spectral/phase.hpp"
#include "phaselab/spectral/polar.hpp"

using namespace phaselab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("to_polar on elementary coefficients") {
  ComplexGrid g(1, 3);
  g.at(0, 0) = {0.0, 1.0};
  g.at(0, 1) = {-2.0, 0.0};
  g.at(0, 2) = {0.0, 0.0};
  const PolarSpectrum p = to_polar(g);
  CHECK(p.amplitude.at(0, 0) == doctest::Approx(1.0));
  CHECK(p.phase.at(0, 0) == doctest::Approx(kPi / 2));
  CHECK(p.amplitude.at(0, 1) == doctest::Approx(2.0));
  CHECK(p.phase.at(0, 1) == doctest::Approx(kPi));
  CHECK(p.amplitude.at(0, 2) == 0.0);
  CHECK(p.phase.at(0, 2) == 0.0);
}

TEST_CASE("negative-zero imaginary parts still give phase in (-pi, pi]") {
  ComplexGrid g(1, 1);
  g.at(0, 0) = {-2.0, -0.0};
  const PolarSpectrum p = to_polar(g);
  CHECK(p.phase.at(0, 0) == doctest::Approx(kPi));
}

TEST_CASE("polar round-trip reproduces the grid") {
  Rng rng(21);
  ComplexGrid g(9, 7);
  for (auto& c : g.v) c = {rng.uniform(-2, 2), rng.uniform(-2, 2)};
  const ComplexGrid back = from_polar(to_polar(g));
  for (std::size_t i = 0; i < g.v.size(); ++i)
    CHECK(std::abs(back.v[i] - g.v[i]) < 1e-9);
}

TEST_CASE("phase values stay strictly within (-pi, pi]") {
  Rng rng(22);
  RealPlane img(16, 16);
  for (double& v : img.v) v = rng.uniform();
  const PolarSpectrum p = to_polar(dft2(img));
  for (double ph : p.phase.v) {
    CHECK(ph > -kPi);
    CHECK(ph <= kPi);
  }
  for (double a : p.amplitude.v) CHECK(a >= 0.0);
}

TEST_CASE("impulse image is a fixed point of unit-amplitude reconstruction") {
  // flat unit-modulus spectrum: reconstruction stays an impulse
  ImageGrid img(8, 8, 1, 0.0);
  img.at(0, 0, 0) = 1.0;
  const ImageGrid rec = phase_only_image(img, PhaseMode::kUnitAmplitude);
  CHECK(rec.at(0, 0, 0) == doctest::Approx(1.0));
  double rest = 0.0;
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x)
      if (y != 0 || x != 0) rest = std::max(rest, rec.at(0, y, x));
  CHECK(rest < 1e-9);
}

TEST_CASE("constant image reconstructs to an impulse at the origin") {
  // zero phase everywhere -> flat spectrum -> spatial impulse (pre-normalization)
  const ImageGrid img(8, 8, 1, 0.7);
  const RealPlane rec = phase_only_plane(img.plane(0), PhaseMode::kUnitAmplitude);
  CHECK(rec.at(0, 0) == doctest::Approx(64.0));
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x)
      if (y != 0 || x != 0) CHECK(std::fabs(rec.at(y, x)) < 1e-9);
}

TEST_CASE("forward transform of the pre-normalization output has the predicted modulus") {
  Rng rng(33);
  RealPlane img(16, 16);
  for (double& v : img.v) v = rng.uniform();

  SUBCASE("unit-amplitude mode: modulus 1 everywhere") {
    const RealPlane rec = phase_only_plane(img, PhaseMode::kUnitAmplitude);
    const ComplexGrid spec = dft2(rec);
    for (const auto& c : spec.v) CHECK(std::fabs(std::abs(c) - 1.0) < 1e-8);
  }

  SUBCASE("abs-phase mode: modulus equals |P(u)|") {
    const PolarSpectrum polar = to_polar(dft2(img));
    const RealPlane rec = phase_only_plane(img, PhaseMode::kAbsPhase);
    const ComplexGrid spec = dft2(rec);
    for (std::size_t i = 0; i < spec.v.size(); ++i)
      CHECK(std::fabs(std::abs(spec.v[i]) - std::fabs(polar.phase.v[i])) < 1e-8);
  }
}

TEST_CASE("degenerate constant image yields the all-zero phase channel") {
  const ImageGrid img(8, 8, 3, 0.4);
  const ImageGrid p = phase_only_image(img, PhaseMode::kAbsPhase);
  double mx = 0.0;
  for (double v : p.data()) mx = std::max(mx, v);
  CHECK(mx == 0.0);
}

TEST_CASE("make_rgbp keeps the RGB channels bit-identical") {
  Rng rng(44);
  std::vector<double> data(3 * 64 * 64);
  for (double& v : data) v = rng.uniform();
  const ImageGrid img = ImageGrid::from_data(64, 64, 3, data);
  const RgbpImage rgbp = make_rgbp(img);
  CHECK(rgbp.height() == 64);
  CHECK(rgbp.width() == 64);
  for (int c = 0; c < 3; ++c)
    for (int y = 0; y < 64; ++y)
      for (int x = 0; x < 64; ++x) CHECK(rgbp.at(c, y, x) == img.at(c, y, x));
}

TEST_CASE("make_rgbp rejects non-3-channel input") {
  const ImageGrid gray(8, 8, 1, 0.5);
  CHECK_THROWS_AS(make_rgbp(gray), InvalidInput);
}

TEST_CASE("a constant luminance offset leaves the phase channel unchanged") {
  Rng rng(55);
  std::vector<double> data(3 * 16 * 16);
  for (double& v : data) v = rng.uniform(0.2, 0.6);
  const ImageGrid img = ImageGrid::from_data(16, 16, 3, data);
  std::vector<double> shifted = data;
  for (double& v : shifted) v += 0.3;  // only moves the DC coefficient
  const ImageGrid img2 = ImageGrid::from_data(16, 16, 3, shifted);
  for (PhaseMode mode : {PhaseMode::kAbsPhase, PhaseMode::kUnitAmplitude}) {
    const ImageGrid p1 = phase_only_image(img, mode);
    const ImageGrid p2 = phase_only_image(img2, mode);
    for (std::size_t i = 0; i < p1.data().size(); ++i)
      CHECK(p1.data()[i] == doctest::Approx(p2.data()[i]).epsilon(1e-9));
  }
}

TEST_CASE("the phase channel is deterministic given image and mode") {
  Rng rng(66);
  std::vector<double> data(3 * 32 * 32);
  for (double& v : data) v = rng.uniform();
  const ImageGrid img = ImageGrid::from_data(32, 32, 3, data);
  const RgbpImage a = make_rgbp(img);
  const RgbpImage b = make_rgbp(img);
  CHECK(a.phase().data() == b.phase().data());
}
