// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace biosig {

using Complex = std::complex<double>;

namespace detail {

// In-place iterative radix-2 transform; size must be a power of two.
inline void fft_pow2(std::vector<Complex>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * std::numbers::pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex w = std::polar(1.0, ang * static_cast<double>(k));
        const Complex u = a[i + k];
        const Complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
  if (inverse) {
    for (auto& v : a) v /= static_cast<double>(n);
  }
}

}  // namespace detail

/// Forward DFT, X[k] = sum_n x[n] exp(-2 pi i k n / N), any length.
/// Non-power-of-two sizes go through Bluestein's chirp-z algorithm.
inline std::vector<Complex> fft(std::span<const Complex> x) {
  const std::size_t n = x.size();
  std::vector<Complex> a(x.begin(), x.end());
  if (n <= 1) return a;
  if (std::has_single_bit(n)) {
    detail::fft_pow2(a, false);
    return a;
  }
  const std::size_t m = std::bit_ceil(2 * n - 1);
  std::vector<Complex> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k^2 mod 2n keeps the phase argument small.
    const auto kk = static_cast<double>((k * k) % (2 * n));
    chirp[k] = std::polar(1.0, -std::numbers::pi * kk / static_cast<double>(n));
  }
  std::vector<Complex> u(m), v(m);
  for (std::size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
  v[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) v[k] = v[m - k] = std::conj(chirp[k]);
  detail::fft_pow2(u, false);
  detail::fft_pow2(v, false);
  for (std::size_t k = 0; k < m; ++k) u[k] *= v[k];
  detail::fft_pow2(u, true);
  for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * chirp[k];
  return a;
}

inline std::vector<Complex> fft(std::span<const double> x) {
  std::vector<Complex> c(x.begin(), x.end());
  return fft(std::span<const Complex>(c));
}

}  // namespace biosig
