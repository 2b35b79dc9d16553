#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "fwm/waveforms.hpp"

using namespace fwm;

namespace {

// independent evaluation route for the Bernstein basis
double de_casteljau(const std::vector<double>& coeffs, double z) {
  std::vector<double> b = coeffs;
  for (std::size_t r = 1; r < coeffs.size(); ++r)
    for (std::size_t i = 0; i + r < coeffs.size(); ++i)
      b[i] = (1.0 - z) * b[i] + z * b[i + 1];
  return b[0];
}

}  // namespace

TEST_CASE("linear ramp endpoints and midpoint") {
  const CouplingProfile ramp = LinearRamp{1.5, 1.5};
  auto [c0, d0] = coupling_at(ramp, 0.0);
  CHECK(c0 == 1.5);
  CHECK(d0 == 0.0);
  auto [c1, d1] = coupling_at(ramp, 1.0);
  CHECK(c1 == 0.0);
  CHECK(d1 == 1.5);
  auto [cm, dm] = coupling_at(ramp, 0.5);
  CHECK(cm == doctest::Approx(0.75));
  CHECK(dm == doctest::Approx(0.75));
}

TEST_CASE("theta endpoints are exact for the linear ramp") {
  const CouplingProfile ramp = LinearRamp{1.5, 1.5};
  CHECK(theta_at(ramp, 0.0) == 0.0);
  CHECK(theta_at(ramp, 1.0) == M_PI / 2);
  CHECK(theta_at(ramp, 0.5) == doctest::Approx(M_PI / 4));
}

TEST_CASE("theta is monotone in z for positive ramps") {
  const CouplingProfile ramp = LinearRamp{2.0, 0.7};
  double prev = -1.0;
  for (int i = 0; i <= 200; ++i) {
    const double t = theta_at(ramp, i / 200.0);
    CHECK(t >= prev);
    prev = t;
  }
}

TEST_CASE("constant-ratio profile returns the unit-norm pair") {
  const double theta = 1.1;
  auto [oc, od] = coupling_at(ConstantRatio{theta}, 0.3);
  CHECK(oc == doctest::Approx(std::cos(theta)));
  CHECK(od == doctest::Approx(std::sin(theta)));
  CHECK(oc * oc + od * od == doctest::Approx(1.0));
}

TEST_CASE("degenerate coupling is rejected") {
  CHECK_THROWS_AS(coupling_at(ConstantAmplitudes{0.0, 0.0}, 0.5), Error);
  CHECK_THROWS_AS(coupling_at(LinearRamp{}, 1.5), Error);  // z out of range
}

TEST_CASE("bernstein endpoints equal the boundary coefficients") {
  const BernsteinDetuning b = reference::large_mismatch_bernstein();
  CHECK(detuning_at(b, 0.0) == doctest::Approx(143.76));
  CHECK(detuning_at(b, 1.0) == doctest::Approx(-39.85));
}

TEST_CASE("bernstein evaluation matches de Casteljau") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-150.0, 150.0);
  std::uniform_real_distribution<double> zs(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> c(8);
    for (double& v : c) v = coef(rng);
    const BernsteinDetuning w{c};
    const double z = zs(rng);
    CHECK(detuning_at(w, z) ==
          doctest::Approx(de_casteljau(c, z)).epsilon(1e-12));
  }
}

TEST_CASE("fourier value at z = 0 is the cosine-coefficient sum") {
  const FourierDetuning f = reference::broadband_fourier();
  const double expected =
      f.a0 + std::accumulate(f.a.begin(), f.a.end(), 0.0);
  CHECK(detuning_at(f, 0.0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("fourier parity: sine part vanishes at both ends") {
  FourierDetuning f;
  f.a = {0.0, 0.0, 0.0};
  f.b = {3.0, -2.0, 0.5};
  CHECK(detuning_at(f, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(detuning_at(f, 1.0)) <= 1e-12);
}

TEST_CASE("constant waveform") {
  CHECK(detuning_at(ConstantDetuning{0.0}, 0.3) == 0.0);
  CHECK(detuning_at(ConstantDetuning{-45.5}, 0.9) == -45.5);
}

TEST_CASE("waveform JSON round trip preserves coefficients exactly") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-150.0, 150.0);
  for (int trial = 0; trial < 20; ++trial) {
    DetuningWaveform w;
    if (trial % 3 == 0) {
      w = ConstantDetuning{coef(rng)};
    } else if (trial % 3 == 1) {
      FourierDetuning f;
      f.a0 = coef(rng);
      for (int i = 0; i < 3; ++i) {
        f.a.push_back(coef(rng));
        f.b.push_back(coef(rng));
      }
      w = f;
    } else {
      std::vector<double> c(8);
      for (double& v : c) v = coef(rng);
      w = BernsteinDetuning{c};
    }
    const DetuningWaveform back = waveform_from_json(waveform_to_json(w));
    CHECK(waveform_coefficients(back) == waveform_coefficients(w));
    CHECK(back.index() == w.index());
  }
}

TEST_CASE("make_waveform validates its inputs") {
  CHECK_THROWS_AS(make_waveform("fourier", {1.0, 2.0}), Error);
  CHECK_THROWS_AS(make_waveform("bernstein", {1.0}), Error);
  CHECK_THROWS_AS(make_waveform("sawtooth", {1.0, 2.0}), Error);
  CHECK_NOTHROW(make_waveform("fourier", {1, 2, 3, 4, 5, 6, 7}));
}

TEST_CASE("weak-probe check") {
  CHECK(weak_probe_ok({200.0, 0.0, 0.03}, LinearRamp{1.5, 1.5}));
  CHECK_FALSE(weak_probe_ok({200.0, 0.0, 0.5}, LinearRamp{1.5, 1.5}));
}
