// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "biosig/error.hpp"

namespace biosig {

/// Second-order IIR section, a0 normalized to 1:
///   y[n] = b0 x[n] + b1 x[n-1] + b2 x[n-2] - a1 y[n-1] - a2 y[n-2]
struct Biquad {
  double b0 = 1.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;

  [[nodiscard]] double dc_gain() const { return (b0 + b1 + b2) / (1.0 + a1 + a2); }

  /// Complex response at `freq_hz` for sampling rate `fs`.
  [[nodiscard]] std::complex<double> response(double freq_hz, double fs) const {
    const double w = 2.0 * std::numbers::pi * freq_hz / fs;
    const std::complex<double> z1 = std::polar(1.0, -w);
    const std::complex<double> z2 = z1 * z1;
    return (b0 + b1 * z1 + b2 * z2) / (1.0 + a1 * z1 + a2 * z2);
  }

  /// Filters `x` in direct form II transposed. The state starts at the
  /// steady state for a constant input equal to x[0], so a constant signal
  /// passes through with the DC gain and no start-up transient.
  [[nodiscard]] std::vector<double> apply(std::span<const double> x) const {
    std::vector<double> y(x.size());
    if (x.empty()) return y;
    const double x0 = x.front();
    const double y0 = dc_gain() * x0;
    double z2 = b2 * x0 - a2 * y0;
    double z1 = b1 * x0 - a1 * y0 + z2;
    for (std::size_t n = 0; n < x.size(); ++n) {
      const double out = b0 * x[n] + z1;
      z1 = b1 * x[n] - a1 * out + z2;
      z2 = b2 * x[n] - a2 * out;
      y[n] = out;
    }
    return y;
  }
};

// RBJ audio-EQ-cookbook designs.

inline Biquad design_notch(double f0, double q, double fs) {
  const double w0 = 2.0 * std::numbers::pi * f0 / fs;
  const double alpha = std::sin(w0) / (2.0 * q);
  const double c = std::cos(w0);
  const double a0 = 1.0 + alpha;
  return {1.0 / a0, -2.0 * c / a0, 1.0 / a0, -2.0 * c / a0, (1.0 - alpha) / a0};
}

inline Biquad design_lowpass(double fc, double q, double fs) {
  const double w0 = 2.0 * std::numbers::pi * fc / fs;
  const double alpha = std::sin(w0) / (2.0 * q);
  const double c = std::cos(w0);
  const double a0 = 1.0 + alpha;
  const double b0 = (1.0 - c) / 2.0 / a0;
  return {b0, 2.0 * b0, b0, -2.0 * c / a0, (1.0 - alpha) / a0};
}

inline Biquad design_highpass(double fc, double q, double fs) {
  const double w0 = 2.0 * std::numbers::pi * fc / fs;
  const double alpha = std::sin(w0) / (2.0 * q);
  const double c = std::cos(w0);
  const double a0 = 1.0 + alpha;
  const double b0 = (1.0 + c) / 2.0 / a0;
  return {b0, -2.0 * b0, b0, -2.0 * c / a0, (1.0 - alpha) / a0};
}

inline std::vector<double> apply_cascade(std::span<const Biquad> sections,
                                         std::span<const double> x) {
  std::vector<double> y(x.begin(), x.end());
  for (const auto& s : sections) y = s.apply(y);
  return y;
}

/// Forward-backward filtering; zero phase, squared magnitude response.
inline std::vector<double> filtfilt(std::span<const Biquad> sections, std::span<const double> x) {
  std::vector<double> y = apply_cascade(sections, x);
  std::reverse(y.begin(), y.end());
  y = apply_cascade(sections, y);
  std::reverse(y.begin(), y.end());
  return y;
}

}  // namespace biosig
