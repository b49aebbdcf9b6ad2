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
#include "biosig/fft.hpp"
#include "biosig/matrix.hpp"
#include "biosig/signal.hpp"

namespace biosig {

enum class TfKind { stft, spectrogram, cwt, scalogram };

/// Rows are frequency bins (or scales), columns are time frames. Magnitude
/// kinds carry zero imaginary parts.
struct TimeFrequencyMap {
  TfKind kind = TfKind::stft;
  Matrix<Complex> values;
  std::vector<double> time_axis;  // seconds, one per column
  std::vector<double> freq_axis;  // Hz, one per row
  std::vector<double> scales;     // cwt/scalogram only

  /// Real part of every cell; the map itself for magnitude kinds.
  [[nodiscard]] Matrix<double> real() const {
    Matrix<double> out(values.rows(), values.cols());
    for (std::size_t r = 0; r < values.rows(); ++r) {
      for (std::size_t c = 0; c < values.cols(); ++c) out(r, c) = values(r, c).real();
    }
    return out;
  }
};

/// Windowed DFT of length `w.length` at frames starting every `hop`
/// samples. All `w.length` bins are kept (two-sided), bin k at k fs / win.
inline TimeFrequencyMap stft(const Signal& s, const WindowSpec& w, std::size_t hop) {
  detail::require(hop >= 1, ErrorCode::InvalidArgument, "hop must be >= 1");
  detail::require(w.length <= s.size(), ErrorCode::WindowTooLong,
                  "window of " + std::to_string(w.length) + " samples exceeds signal length " +
                      std::to_string(s.size()));
  const auto weights = window_weights(w);
  const std::size_t win = w.length;
  const std::size_t frames = (s.size() - win) / hop + 1;
  const auto x = s.samples();

  TimeFrequencyMap map;
  map.kind = TfKind::stft;
  map.values = Matrix<Complex>(win, frames);
  std::vector<Complex> frame(win);
  for (std::size_t m = 0; m < frames; ++m) {
    for (std::size_t n = 0; n < win; ++n) frame[n] = x[m * hop + n] * weights[n];
    const auto spectrum = fft(std::span<const Complex>(frame));
    for (std::size_t k = 0; k < win; ++k) map.values(k, m) = spectrum[k];
    map.time_axis.push_back(static_cast<double>(m * hop) / s.fs());
  }
  for (std::size_t k = 0; k < win; ++k) {
    map.freq_axis.push_back(static_cast<double>(k) * s.fs() / static_cast<double>(win));
  }
  return map;
}

/// |X|^2 of an STFT.
inline TimeFrequencyMap spectrogram(const TimeFrequencyMap& m) {
  detail::require(m.kind == TfKind::stft, ErrorCode::WrongKind, "spectrogram needs an stft map");
  TimeFrequencyMap out = m;
  out.kind = TfKind::spectrogram;
  for (auto& v : out.values.flat()) v = std::norm(v);
  return out;
}

// ---------------------------------------------------------------------------
// Continuous wavelet transform

enum class MotherWavelet { morlet, mexican_hat, gaussian_derivative };

/// Centre frequency in cycles per unit time of the mother wavelet, at the
/// peak of its Fourier magnitude.
inline double mother_center_frequency(MotherWavelet mother) {
  constexpr double morlet_omega0 = 6.0;
  switch (mother) {
    case MotherWavelet::morlet: return morlet_omega0 / (2.0 * std::numbers::pi);
    case MotherWavelet::mexican_hat: return std::numbers::sqrt2 / (2.0 * std::numbers::pi);
    case MotherWavelet::gaussian_derivative: return 1.0 / (2.0 * std::numbers::pi);
  }
  return 0.0;
}

/// Mother wavelet value at time t (unit Gaussian envelope).
/// morlet: complex, pi^-1/4 exp(i 6 t) exp(-t^2/2)
/// mexican_hat: 2/(sqrt(3) pi^1/4) (1 - t^2) exp(-t^2/2)
/// gaussian_derivative: -sqrt(2) pi^-1/4 t exp(-t^2/2)
inline Complex mother_value(MotherWavelet mother, double t) {
  const double envelope = std::exp(-0.5 * t * t);
  const double quarter = std::pow(std::numbers::pi, -0.25);
  switch (mother) {
    case MotherWavelet::morlet: return quarter * envelope * std::polar(1.0, 6.0 * t);
    case MotherWavelet::mexican_hat:
      return 2.0 / std::sqrt(3.0) * quarter * (1.0 - t * t) * envelope;
    case MotherWavelet::gaussian_derivative: return -std::numbers::sqrt2 * quarter * t * envelope;
  }
  return 0.0;
}

/// Scale (in samples) whose pseudo-frequency is `freq_hz`.
inline double scale_for_frequency(MotherWavelet mother, double freq_hz, double fs) {
  detail::require(freq_hz > 0.0, ErrorCode::InvalidFrequency, "frequency must be positive");
  return mother_center_frequency(mother) * fs / freq_hz;
}

/// |CWT| by direct convolution with the dilated mother wavelet, truncated
/// at 8 envelope widths. Row r corresponds to scales[r] (in samples).
inline TimeFrequencyMap cwt_scalogram(const Signal& s, MotherWavelet mother, std::span<const double> scales) {
  detail::require(!scales.empty(), ErrorCode::EmptyScales, "no scales given");
  for (double a : scales) {
    detail::require(a > 0.0, ErrorCode::NonPositiveScale, "scales must be positive");
  }
  const auto x = s.samples();
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  TimeFrequencyMap map;
  map.kind = TfKind::scalogram;
  map.values = Matrix<Complex>(scales.size(), x.size());
  map.scales.assign(scales.begin(), scales.end());
  const double fc = mother_center_frequency(mother);

  for (std::size_t r = 0; r < scales.size(); ++r) {
    const double a = scales[r];
    const auto half = static_cast<std::ptrdiff_t>(std::ceil(8.0 * a));
    // kernel[j] = conj(psi(j / a)) / sqrt(a), j in [-half, half]
    std::vector<Complex> kernel(static_cast<std::size_t>(2 * half + 1));
    for (std::ptrdiff_t j = -half; j <= half; ++j) {
      kernel[static_cast<std::size_t>(j + half)] =
          std::conj(mother_value(mother, static_cast<double>(j) / a)) / std::sqrt(a);
    }
    for (std::ptrdiff_t tau = 0; tau < n; ++tau) {
      Complex acc = 0.0;
      const std::ptrdiff_t lo = std::max(-half, -tau);
      const std::ptrdiff_t hi = std::min(half, n - 1 - tau);
      for (std::ptrdiff_t j = lo; j <= hi; ++j) {
        acc += x[static_cast<std::size_t>(tau + j)] * kernel[static_cast<std::size_t>(j + half)];
      }
      map.values(r, static_cast<std::size_t>(tau)) = std::abs(acc);
    }
    map.freq_axis.push_back(fc * s.fs() / a);
  }
  for (std::ptrdiff_t t = 0; t < n; ++t) map.time_axis.push_back(static_cast<double>(t) / s.fs());
  return map;
}

// ---------------------------------------------------------------------------
// Variance changepoints

namespace detail {

// Zero-mean Gaussian log-likelihood gain of splitting [a, b) at k, in
// natural-log units: (n ln v - n1 ln v1 - n2 ln v2) / 2 with v the mean
// square of each part.
struct SplitCandidate {
  std::size_t index = 0;
  double gain = -std::numeric_limits<double>::infinity();
};

inline SplitCandidate best_variance_split(std::span<const double> prefix_sq, std::size_t a, std::size_t b,
                                          std::size_t min_segment) {
  SplitCandidate best;
  const std::size_t n = b - a;
  if (n < 2 * min_segment) return best;
  const double total = prefix_sq[b] - prefix_sq[a];
  if (total <= 0.0) return best;
  const double whole = static_cast<double>(n) * std::log(total / static_cast<double>(n));
  for (std::size_t k = a + min_segment; k + min_segment <= b; ++k) {
    const double left = prefix_sq[k] - prefix_sq[a];
    const double right = prefix_sq[b] - prefix_sq[k];
    if (left <= 0.0 || right <= 0.0) continue;
    const auto n1 = static_cast<double>(k - a);
    const auto n2 = static_cast<double>(b - k);
    const double gain = 0.5 * (whole - n1 * std::log(left / n1) - n2 * std::log(right / n2));
    if (gain > best.gain) best = {k, gain};
  }
  return best;
}

}  // namespace detail

struct ChangepointOptions {
  std::size_t min_segment = 8;
  /// Penalty per split in log-likelihood units; <= 0 selects ln N.
  double penalty = 0.0;
};

/// Binary segmentation on the variance of (zero-mean) coefficients. Each
/// step splits the segment with the largest likelihood gain; splits whose
/// gain is below the penalty (default ln N, BIC for one location and one
/// variance) are rejected. Returns at most `max_changes` indices, sorted;
/// index k means a new regime starts at sample k.
inline std::vector<std::size_t> variance_changepoints(std::span<const double> coeffs, std::size_t max_changes,
                                                      ChangepointOptions options = {}) {
  detail::require(coeffs.size() >= 4, ErrorCode::TooShort, "changepoint search needs at least 4 samples");
  const std::size_t n = coeffs.size();
  const double penalty = options.penalty > 0.0 ? options.penalty : std::log(static_cast<double>(n));
  const std::size_t min_segment = std::max<std::size_t>(2, std::min(options.min_segment, n / 2));

  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + coeffs[i] * coeffs[i];

  std::vector<std::size_t> bounds{0, n};
  std::vector<std::size_t> accepted;
  while (accepted.size() < max_changes) {
    detail::SplitCandidate best;
    for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
      const auto cand = detail::best_variance_split(prefix, bounds[s], bounds[s + 1], min_segment);
      if (cand.gain > best.gain) best = cand;
    }
    if (!(best.gain >= penalty)) break;
    accepted.push_back(best.index);
    bounds.insert(std::upper_bound(bounds.begin(), bounds.end(), best.index), best.index);
  }
  std::sort(accepted.begin(), accepted.end());
  return accepted;
}

}  // namespace biosig
