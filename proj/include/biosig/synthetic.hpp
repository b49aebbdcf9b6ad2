// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "biosig/signal.hpp"

namespace biosig {

/// Seeded generator with platform-independent output: mt19937_64 bits
/// mapped to doubles and normals by hand rather than through the
/// implementation-defined standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n), unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % n;
  }

  /// Standard normal via Box-Muller.
  double normal() {
    if (spare_) {
      spare_ = false;
      return cached_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(2.0 * std::numbers::pi * u2);
    spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
  bool spare_ = false;
  double cached_ = 0.0;
};

inline double mean_power(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return acc / static_cast<double>(x.size());
}

/// Adds white Gaussian noise scaled so 10 log10(P_signal / P_noise) = snr_db.
inline std::vector<double> add_white_noise(std::span<const double> clean, double snr_db, Rng& rng) {
  const double sigma = std::sqrt(mean_power(clean) / std::pow(10.0, snr_db / 10.0));
  std::vector<double> out(clean.begin(), clean.end());
  for (auto& v : out) v += sigma * rng.normal();
  return out;
}

inline std::vector<double> sine_wave(std::size_t n, double fs, double freq, double amplitude = 1.0,
                                     double phase = 0.0) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = amplitude * std::sin(2.0 * std::numbers::pi * freq * static_cast<double>(i) / fs + phase);
  }
  return out;
}

/// Linear chirp sweeping f0 -> f1 over the n samples.
inline std::vector<double> linear_chirp(std::size_t n, double fs, double f0, double f1, double amplitude = 1.0,
                                        double phase = 0.0) {
  std::vector<double> out(n);
  const double duration = static_cast<double>(n) / fs;
  const double rate = (f1 - f0) / duration;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / fs;
    out[i] = amplitude * std::sin(2.0 * std::numbers::pi * (f0 * t + 0.5 * rate * t * t) + phase);
  }
  return out;
}

/// Train of Gaussian bumps (width `sigma_s`) every 1/rate_hz seconds.
inline std::vector<double> pulse_train(std::size_t n, double fs, double rate_hz, double sigma_s = 0.01,
                                       double amplitude = 1.0) {
  std::vector<double> out(n, 0.0);
  const double period = fs / rate_hz;
  const double sigma = sigma_s * fs;
  for (double centre = period / 2.0; centre < static_cast<double>(n); centre += period) {
    const auto lo = static_cast<std::ptrdiff_t>(std::floor(centre - 6.0 * sigma));
    const auto hi = static_cast<std::ptrdiff_t>(std::ceil(centre + 6.0 * sigma));
    for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(0, lo); i <= hi && i < static_cast<std::ptrdiff_t>(n); ++i) {
      const double z = (static_cast<double>(i) - centre) / sigma;
      out[static_cast<std::size_t>(i)] += amplitude * std::exp(-0.5 * z * z);
    }
  }
  return out;
}

struct SyntheticEcg {
  std::vector<double> clean;
  std::vector<double> noisy;
  std::vector<std::size_t> r_peaks;  // ground truth sample indices
};

struct EcgOptions {
  double fs = 360.0;
  double duration_s = 30.0;
  double bpm = 72.0;
  double snr_db = 10.0;            // infinite => no noise
  double rr_jitter = 0.0;          // relative std-dev of each RR interval
  double first_beat_s = 0.4;
};

/// P-QRS-T beats built from Gaussian waves; each R-wave is centred on an
/// integer sample so the ground-truth index is exact.
inline SyntheticEcg synthetic_ecg(const EcgOptions& o, Rng& rng) {
  struct Wave {
    double offset_s, sigma_s, amplitude;
  };
  static constexpr Wave waves[] = {
      {-0.200, 0.025, 0.15},  // P
      {-0.025, 0.008, -0.10}, // Q
      {0.000, 0.010, 1.00},   // R
      {0.025, 0.008, -0.20},  // S
      {0.250, 0.040, 0.30},   // T
  };
  const auto n = static_cast<std::size_t>(std::llround(o.duration_s * o.fs));
  SyntheticEcg ecg;
  ecg.clean.assign(n, 0.0);
  const double rr = 60.0 / o.bpm;
  double t = o.first_beat_s;
  while (t < o.duration_s - 0.4) {
    const auto r_index = static_cast<std::size_t>(std::llround(t * o.fs));
    ecg.r_peaks.push_back(r_index);
    for (const auto& w : waves) {
      const double centre = static_cast<double>(r_index) + w.offset_s * o.fs;
      const double sigma = w.sigma_s * o.fs;
      const auto lo = static_cast<std::ptrdiff_t>(std::floor(centre - 6.0 * sigma));
      const auto hi = static_cast<std::ptrdiff_t>(std::ceil(centre + 6.0 * sigma));
      for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(0, lo); i <= hi && i < static_cast<std::ptrdiff_t>(n); ++i) {
        const double z = (static_cast<double>(i) - centre) / sigma;
        ecg.clean[static_cast<std::size_t>(i)] += w.amplitude * std::exp(-0.5 * z * z);
      }
    }
    t += rr * (1.0 + o.rr_jitter * rng.normal());
  }
  ecg.noisy = std::isfinite(o.snr_db) ? add_white_noise(ecg.clean, o.snr_db, rng) : ecg.clean;
  return ecg;
}

/// Paired noisy/clean labelled records.
struct SyntheticSet {
  std::vector<Signal> noisy;
  std::vector<Signal> clean;
};

/// Two-class set: a sine at sine_hz ("sine") and a linear chirp from chirp_f0
/// to chirp_f1 ("chirp"), both with random phase, classes interleaved.
struct SineChirpOptions {
  std::size_t per_class = 100;
  std::size_t length = 256;
  double fs = 128.0;
  double sine_hz = 5.0;
  double chirp_f0 = 1.0;
  double chirp_f1 = 20.0;
  double snr_db = 5.0;
};

inline SyntheticSet sine_chirp_dataset(const SineChirpOptions& o, Rng& rng) {
  SyntheticSet set;
  for (std::size_t i = 0; i < o.per_class; ++i) {
    for (int cls = 0; cls < 2; ++cls) {
      const auto clean = cls == 0 ? sine_wave(o.length, o.fs, o.sine_hz, 1.0, rng.uniform(0.0, 2.0 * std::numbers::pi))
                                  : linear_chirp(o.length, o.fs, o.chirp_f0, o.chirp_f1, 1.0,
                                                 rng.uniform(0.0, 2.0 * std::numbers::pi));
      const std::string label = cls == 0 ? "sine" : "chirp";
      const auto id = detail::record_id("syn", set.noisy.size());
      set.noisy.emplace_back(add_white_noise(clean, o.snr_db, rng), o.fs, id, label);
      set.clean.emplace_back(clean, o.fs, id, label);
    }
  }
  return set;
}

}  // namespace biosig
