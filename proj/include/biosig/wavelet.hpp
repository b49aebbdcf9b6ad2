// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "biosig/detail/wavelet_tables.hpp"
#include "biosig/error.hpp"
#include "biosig/fft.hpp"

namespace biosig {

enum class WaveletFamily { orthogonal };

/// Orthogonal two-channel filter bank.
///
/// Conventions: rec_lo is dec_lo reversed, rec_hi is dec_hi reversed, and
/// dec_hi[n] = (-1)^(n+1) dec_lo[nw-1-n], which is equivalently
/// rec_hi[n] = (-1)^n rec_lo[nw-1-n].
struct WaveletSpec {
  std::string name;
  std::vector<double> dec_lo, dec_hi, rec_lo, rec_hi;
  WaveletFamily family = WaveletFamily::orthogonal;

  [[nodiscard]] std::size_t nw() const noexcept { return dec_lo.size(); }
};

/// Builds the full bank from a decomposition low-pass filter.
inline WaveletSpec make_orthogonal_wavelet(std::string name, std::span<const double> dec_lo) {
  const std::size_t nw = dec_lo.size();
  detail::require(nw >= 2 && nw % 2 == 0, ErrorCode::InvalidArgument,
                  "orthogonal filters need an even tap count");
  WaveletSpec w;
  w.name = std::move(name);
  w.dec_lo.assign(dec_lo.begin(), dec_lo.end());
  w.rec_lo.assign(dec_lo.rbegin(), dec_lo.rend());
  w.dec_hi.resize(nw);
  for (std::size_t n = 0; n < nw; ++n) {
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    w.dec_hi[n] = sign * dec_lo[nw - 1 - n];
  }
  w.rec_hi.assign(w.dec_hi.rbegin(), w.dec_hi.rend());
  return w;
}

inline std::vector<std::string> wavelet_names() {
  std::vector<std::string> names;
  for (const auto& t : detail::k_lowpass_tables) names.emplace_back(t.name);
  return names;
}

/// Registry lookup: haar, db2..db10, sym2..sym8 (case-insensitive; "db1"
/// is accepted as an alias of haar).
inline WaveletSpec get_wavelet(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "db1") key = "haar";
  for (const auto& t : detail::k_lowpass_tables) {
    if (t.name == key) return make_orthogonal_wavelet(key, t.dec_lo);
  }
  throw Error(ErrorCode::UnknownWavelet, "unknown wavelet '" + std::string(name) + "'");
}

/// Samples of the wavelet function psi obtained by running the synthesis
/// cascade `depth` times from a unit detail impulse. The grid step is
/// 2^-depth; one zero guard sample precedes the cascade and zeros pad the
/// tail to cover the support [0, nw-1] (at least one trailing guard).
inline std::vector<double> wavelet_function(const WaveletSpec& w, int depth) {
  detail::require(depth >= 1, ErrorCode::InvalidArgument, "cascade depth must be >= 1");
  auto upsample_convolve = [](const std::vector<double>& c, const std::vector<double>& f) {
    std::vector<double> out(2 * c.size() - 1 + f.size() - 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) out[2 * i + j] += c[i] * f[j];
    }
    return out;
  };
  std::vector<double> c{std::pow(std::sqrt(2.0), depth)};
  c = upsample_convolve(c, w.rec_hi);
  for (int i = 1; i < depth; ++i) c = upsample_convolve(c, w.rec_lo);

  const std::size_t p = std::size_t{1} << depth;
  const std::size_t length = std::max((w.nw() - 1) * p + 1, c.size() + 2);
  std::vector<double> psi(length, 0.0);
  std::copy(c.begin(), c.end(), psi.begin() + 1);
  return psi;
}

/// Dominant frequency of psi in cycles per unit of the wavelet's own time
/// axis, taken from the peak-magnitude non-DC bin of the spectrum of psi
/// sampled at cascade depth 8 (bins above Nyquist fold back).
inline double center_frequency(const WaveletSpec& w) {
  constexpr int depth = 8;
  const auto psi = wavelet_function(w, depth);
  const auto spectrum = fft(std::span<const double>(psi));
  const std::size_t n = psi.size();
  std::size_t best = 1;
  double best_mag = -1.0;
  for (std::size_t k = 1; k < n; ++k) {
    const double mag = std::abs(spectrum[k]);
    if (mag > best_mag) {
      best_mag = mag;
      best = k;
    }
  }
  if (2 * (best + 1) > n) best = n - best;
  const double domain = static_cast<double>(n - 1) / static_cast<double>(std::size_t{1} << depth);
  return static_cast<double>(best) / domain;
}

/// Hz associated with scale `a` at sampling rate `fs`: f_c * fs / a.
inline double pseudo_frequency(double center_freq, double scale, double fs) {
  detail::require(scale > 0.0, ErrorCode::NonPositiveScale, "scale must be positive");
  return center_freq * fs / scale;
}

inline double pseudo_frequency(const WaveletSpec& w, double scale, double fs) {
  detail::require(scale > 0.0, ErrorCode::NonPositiveScale, "scale must be positive");
  return pseudo_frequency(center_frequency(w), scale, fs);
}

/// Normalized form (cycles/sample): f_c / a.
inline double pseudo_frequency_normalized(const WaveletSpec& w, double scale) {
  return pseudo_frequency(w, scale, 1.0);
}

}  // namespace biosig
