#include "fwm/waveforms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "json.hpp"

namespace fwm {

namespace {

void check_z(double z) {
  if (!(z >= 0.0 && z <= 1.0))
    throw Error(ErrorCode::OutOfRangeZ,
                "z must lie in [0, 1], got " + std::to_string(z));
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace

std::pair<double, double> coupling_at(const CouplingProfile& profile,
                                      double z) {
  check_z(z);
  return std::visit(
      [&](const auto& p) -> std::pair<double, double> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ConstantRatio>) {
          return {std::cos(p.theta), std::sin(p.theta)};
        } else if constexpr (std::is_same_v<T, ConstantAmplitudes>) {
          if (p.omega_c == 0.0 && p.omega_d == 0.0)
            throw Error(ErrorCode::DegenerateCoupling,
                        "both coupling amplitudes are zero");
          return {p.omega_c, p.omega_d};
        } else {
          return {p.omega_c0 * (1.0 - z), p.omega_d0 * z};
        }
      },
      profile);
}

double theta_at(const CouplingProfile& profile, double z) {
  auto [oc, od] = coupling_at(profile, z);
  if (oc == 0.0 && od == 0.0)
    throw Error(ErrorCode::DegenerateCoupling,
                "coupling amplitudes both vanish at z = " + std::to_string(z));
  return std::atan2(od, oc);
}

double detuning_at(const DetuningWaveform& w, double z) {
  check_z(z);
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConstantDetuning>) {
          return v.delta;
        } else if constexpr (std::is_same_v<T, FourierDetuning>) {
          double d = v.a0;
          for (int n = 1; n <= v.order(); ++n) {
            d += v.a[n - 1] * std::cos(n * M_PI * z);
            d += v.b[n - 1] * std::sin(n * M_PI * z);
          }
          return d;
        } else {
          const int deg = v.degree();
          double d = 0.0;
          for (int n = 0; n <= deg; ++n) {
            d += v.coeffs[n] * static_cast<double>(binomial(deg, n)) *
                 std::pow(z, n) * std::pow(1.0 - z, deg - n);
          }
          return d;
        }
      },
      w);
}

bool weak_probe_ok(const MediumParams& p, const CouplingProfile& profile) {
  double peak = 0.0;
  for (double z : {0.0, 0.5, 1.0}) {
    auto [oc, od] = coupling_at(profile, z);
    peak = std::max({peak, oc, od});
  }
  return p.omega_p0 <= 0.1 * peak;
}

std::vector<double> waveform_coefficients(const DetuningWaveform& w) {
  return std::visit(
      [](const auto& v) -> std::vector<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConstantDetuning>) {
          return {v.delta};
        } else if constexpr (std::is_same_v<T, FourierDetuning>) {
          std::vector<double> c;
          c.push_back(v.a0);
          c.insert(c.end(), v.a.begin(), v.a.end());
          c.insert(c.end(), v.b.begin(), v.b.end());
          return c;
        } else {
          return v.coeffs;
        }
      },
      w);
}

DetuningWaveform make_waveform(const std::string& family,
                               const std::vector<double>& coefficients) {
  if (family == "constant") {
    if (coefficients.size() != 1)
      throw Error(ErrorCode::ConfigError,
                  "constant waveform takes exactly one coefficient");
    return ConstantDetuning{coefficients[0]};
  }
  if (family == "fourier") {
    // [a0, a1..an, b1..bn] requires odd length >= 3
    if (coefficients.size() < 3 || coefficients.size() % 2 == 0)
      throw Error(ErrorCode::ConfigError,
                  "fourier waveform needs 2n+1 coefficients, n >= 1");
    const int n = static_cast<int>(coefficients.size()) / 2;
    FourierDetuning f;
    f.a0 = coefficients[0];
    f.a.assign(coefficients.begin() + 1, coefficients.begin() + 1 + n);
    f.b.assign(coefficients.begin() + 1 + n, coefficients.end());
    return f;
  }
  if (family == "bernstein") {
    if (coefficients.size() < 2)
      throw Error(ErrorCode::ConfigError,
                  "bernstein waveform needs degree >= 1");
    return BernsteinDetuning{coefficients};
  }
  throw Error(ErrorCode::ConfigError, "unknown waveform family: " + family);
}

std::string waveform_to_json(const DetuningWaveform& w) {
  nlohmann::json j;
  j["family"] = std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ConstantDetuning>) return "constant";
        else if constexpr (std::is_same_v<T, FourierDetuning>) return "fourier";
        else return "bernstein";
      },
      w);
  j["coefficients"] = waveform_coefficients(w);
  return j.dump();
}

DetuningWaveform waveform_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("bad waveform JSON: ") + e.what());
  }
  if (!j.contains("family") || !j.contains("coefficients"))
    throw Error(ErrorCode::ConfigError,
                "waveform JSON needs 'family' and 'coefficients'");
  return make_waveform(j["family"].get<std::string>(),
                       j["coefficients"].get<std::vector<double>>());
}

namespace reference {

FourierDetuning broadband_fourier() {
  FourierDetuning f;
  f.a0 = -13.55;
  f.a = {20.15, -8.93, 2.86};
  f.b = {6.17, -0.91, 1.45};
  return f;
}

FourierDetuning large_mismatch_fourier() {
  FourierDetuning f;
  f.a0 = -1.73;
  f.a = {-2.32, -13.04, 43.09};
  f.b = {-9.08, 67.86, 1.74};
  return f;
}

BernsteinDetuning large_mismatch_bernstein() {
  return BernsteinDetuning{
      {143.76, 71.73, -42.35, -53.98, 111.60, -59.90, -59.94, -39.85}};
}

}  // namespace reference

}  // namespace fwm
