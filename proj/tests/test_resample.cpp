#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "phaselab/core/error.hpp"
#include "phaselab/resample/analysis.hpp"
#include "phaselab/resample/ops.hpp"

using namespace phaselab;

TEST_CASE("zero-insert up-sampling interleaves zeros") {
  CHECK(upsample_zero_insert({1.0, 2.0}) == Signal{1.0, 0.0, 2.0, 0.0});
  CHECK(upsample_zero_insert({0.0, 0.0, 0.0}) ==
        Signal{0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
}

TEST_CASE("zero-insert keeps the original samples on the even grid") {
  Rng rng(3);
  const Signal x = oracle::random_signal(rng, 17);
  const Signal up = upsample_zero_insert(x, 2);
  REQUIRE(up.size() == 34);
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(up[2 * i] == x[i]);
    CHECK(up[2 * i + 1] == 0.0);
  }
}

TEST_CASE("the up-sampled spectrum duplicates the original at half scale") {
  Rng rng(8);
  for (std::size_t n = 2; n <= 64; n += 7) {
    const Signal x = oracle::random_signal(rng, n);
    const auto up = oracle::dft_direct(upsample_zero_insert(x, 2));
    const auto base = oracle::dft_direct(x);
    for (std::size_t u = 0; u < up.size(); ++u)
      CHECK(std::abs(up[u] - 0.5 * base[u % n]) < 1e-10);
  }
}

TEST_CASE("verify_duplication on elementary signals") {
  CHECK(verify_duplication({1.0, 1.0, 1.0, 1.0}) < 1e-12);
  CHECK(verify_duplication({1.0, 0.0, 0.0, 0.0}) < 1e-12);
}

TEST_CASE("verify_duplication across random signals and sizes") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(4, 64));
    CHECK(verify_duplication(oracle::random_signal(rng, n)) < 1e-9);
  }
}

TEST_CASE("count_significant on elementary spectra") {
  CHECK(count_significant(dft1(Signal(8, 1.0)), 1e-3) == 1);  // constant
  Signal impulse(8, 0.0);
  impulse[0] = 1.0;
  CHECK(count_significant(dft1(impulse), 1e-3) == 8);
  CHECK(count_significant(Spectrum(5, {0.0, 0.0}), 1e-3) == 0);
  CHECK_THROWS_AS(count_significant(dft1(impulse), 0.0), InvalidInput);
}

TEST_CASE("1/f-decay signals keep few amplitude components; their phase-only "
          "counterparts keep all") {
  Rng rng(17);
  const std::size_t n = 64;
  // synthesize from a 1/f^2 amplitude profile with random phases
  Spectrum spec(n);
  spec[0] = {1.0, 0.0};
  for (std::size_t u = 1; u <= n / 2; ++u) {
    const double amp = std::pow(static_cast<double>(u), -2.0);
    const double ph = rng.uniform(-oracle::kPi, oracle::kPi);
    spec[u] = std::polar(amp, ph);
    if (u < n - u) spec[n - u] = std::conj(spec[u]);
  }
  const Signal x = idft1(spec);
  const Spectrum sx = dft1(x);
  const int amp_count = count_significant(sx, 1e-3);
  CHECK(amp_count < static_cast<int>(n) / 4);

  Spectrum phase_only(n);
  for (std::size_t u = 0; u < n; ++u) {
    const double m = std::abs(sx[u]);
    phase_only[u] = m == 0.0 ? std::complex<double>(1.0, 0.0) : sx[u] / m;
  }
  CHECK(count_significant(phase_only, 1e-3) == static_cast<int>(n));
}

TEST_CASE("predicted_counts reproduces the item bookkeeping") {
  const ComponentCounts c = predicted_counts({8, 0, 1e-3});
  CHECK(c.x_amp == 1);
  CHECK(c.x_phase == 8);
  CHECK(c.x_amp_up == 2);
  CHECK(c.x_phase_up == 16);
  CHECK(c.y_amp == 8);
  CHECK(c.y_amp_phase == 15);
  CHECK(c.y_amp_phase_up == 23);

  const ComponentCounts one = predicted_counts({1, 0, 1e-3});
  CHECK(one.x_amp == 1);
  CHECK(one.x_phase == 1);

  CHECK(predicted_counts({16, 3, 1e-3}, AmpUpCount::kStated).y_amp_up == 32);
  CHECK(predicted_counts({16, 3, 1e-3}, AmpUpCount::kByIndex).y_amp_up == 35);

  CHECK_THROWS_AS(predicted_counts({8, 8, 1e-3}), InvalidInput);
  CHECK_THROWS_AS(predicted_counts({8, -1, 1e-3}), InvalidInput);
}

TEST_CASE("predicted counts difference identity: y_amp_phase - y_amp = N-1-k") {
  for (int n : {2, 8, 16, 33})
    for (int k = 0; k < n; k += 3) {
      const ComponentCounts c = predicted_counts({n, k, 1e-3});
      CHECK(c.y_amp_phase - c.y_amp == n - 1 - k);
    }
}

TEST_CASE("counts cross-checked by an explicit linear-convolution oracle") {
  // Sequences with positive entries at the written-out item positions; the
  // nonzero support of their linear convolution with a dense kernel counts
  // the output items.
  Rng rng(23);
  const int n = 16, k = 3;
  auto lin_conv_support = [](const std::vector<double>& a,
                             const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    int nz = 0;
    for (double v : out)
      if (v != 0.0) ++nz;
    return nz;
  };
  std::vector<double> kernel(n);
  for (double& v : kernel) v = rng.uniform(0.5, 1.0);

  std::vector<double> amp(k + 1);
  for (double& v : amp) v = rng.uniform(0.5, 1.0);
  std::vector<double> amp_up(n + k + 1, 0.0);
  for (int i = 0; i <= k; ++i) {
    amp_up[i] = rng.uniform(0.5, 1.0);
    amp_up[n + i] = rng.uniform(0.5, 1.0);
  }
  std::vector<double> phase(n);
  for (double& v : phase) v = rng.uniform(0.5, 1.0);
  std::vector<double> phase_up(2 * n);
  for (double& v : phase_up) v = rng.uniform(0.5, 1.0);

  const ComponentCounts c = predicted_counts({n, k, 1e-3}, AmpUpCount::kByIndex);
  CHECK(lin_conv_support(amp, kernel) == c.y_amp);
  CHECK(lin_conv_support(amp_up, kernel) == c.y_amp_up);
  CHECK(lin_conv_support(phase, kernel) == c.y_amp_phase);
  CHECK(lin_conv_support(phase_up, kernel) == c.y_amp_phase_up);
}

TEST_CASE("circular convolution identities") {
  Rng rng(31);
  const Signal x = oracle::random_signal(rng, 12);
  Signal identity(1, 1.0);
  CHECK(convolve_circular(x, identity) == x);

  Signal shift(3, 0.0);
  shift[2] = 1.0;
  const Signal shifted = convolve_circular(x, shift);
  for (std::size_t i = 0; i < x.size(); ++i)
    CHECK(shifted[(i + 2) % x.size()] == doctest::Approx(x[i]));

  CHECK_THROWS_AS(convolve_circular(x, {}), InvalidInput);
}

TEST_CASE("convolution theorem holds with the factor N") {
  Rng rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 32;
    const Signal x = oracle::random_signal(rng, n);
    Signal c = oracle::random_signal(rng, 9);
    const Spectrum lhs = dft1(convolve_circular(x, c));
    c.resize(n, 0.0);
    const Spectrum fx = dft1(x), fc = dft1(c);
    for (std::size_t u = 0; u < n; ++u)
      CHECK(std::abs(lhs[u] - static_cast<double>(n) * fx[u] * fc[u]) < 1e-10);
  }
}

TEST_CASE("distributive law of convolution") {
  Rng rng(41);
  const std::size_t n = 64;
  SUBCASE("f = -g collapses to zero") {
    const Signal f = oracle::random_signal(rng, n);
    Signal g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = -f[i];
    const Signal h = oracle::random_signal(rng, n);
    CHECK(check_distributive(f, g, h) < 1e-10);
    const Signal sum_conv = [&] {
      Signal s(n, 0.0);
      return convolve_circular(s, h);
    }();
    for (double v : sum_conv) CHECK(v == 0.0);
  }
  SUBCASE("g = 0 leaves both sides equal") {
    const Signal f = oracle::random_signal(rng, n);
    const Signal g(n, 0.0);
    const Signal h = oracle::random_signal(rng, n);
    CHECK(check_distributive(f, g, h) < 1e-10);
  }
  SUBCASE("random triples") {
    for (int trial = 0; trial < 100; ++trial)
      CHECK(check_distributive(oracle::random_signal(rng, n),
                               oracle::random_signal(rng, n),
                               oracle::random_signal(rng, n)) < 1e-10);
  }
}

TEST_CASE("2D resample geometry") {
  Rng rng(47);
  std::vector<double> data(3 * 16 * 16);
  for (double& v : data) v = rng.uniform();
  const ImageGrid img = ImageGrid::from_data(16, 16, 3, data);

  for (ResampleKind kind : {ResampleKind::kZeroInsert, ResampleKind::kNearest,
                            ResampleKind::kBilinear, ResampleKind::kBicubic}) {
    const ImageGrid up = apply_resample(img, {kind, 2});
    CHECK(up.height() == 32);
    CHECK(up.width() == 32);
  }
  const ImageGrid down = apply_resample(img, {ResampleKind::kDecimate, 2});
  CHECK(down.height() == 8);
  CHECK(down.width() == 8);
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x)
      CHECK(down.at(0, y, x) == img.at(0, 2 * y, 2 * x));
}

TEST_CASE("empty chain is the identity") {
  const ImageGrid img(8, 8, 1, 0.25);
  const ImageGrid out = apply_chain(img, ResampleChain{});
  CHECK(out.data() == img.data());
}

TEST_CASE("2D zero-insert keeps originals on the even-even grid") {
  Rng rng(53);
  RealPlane p(6, 6);
  for (double& v : p.v) v = rng.uniform();
  const RealPlane up = apply_resample(p, {ResampleKind::kZeroInsert, 2});
  for (int y = 0; y < 12; ++y)
    for (int x = 0; x < 12; ++x) {
      if (y % 2 == 0 && x % 2 == 0)
        CHECK(up.at(y, x) == p.at(y / 2, x / 2));
      else
        CHECK(up.at(y, x) == 0.0);
    }
}
