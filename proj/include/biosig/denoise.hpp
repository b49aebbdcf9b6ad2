// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "biosig/dwt.hpp"
#include "biosig/error.hpp"
#include "biosig/signal.hpp"

namespace biosig {

enum class ThresholdFn { soft, hard };
enum class ThresholdRule { rigrsure, sqtwolog, heursure, minimax };
enum class Rescale { one, sln, mln };
enum class Band { alpha, beta };

struct DenoiseParams {
  std::string wavelet = "db6";
  ThresholdFn threshold_fn = ThresholdFn::soft;
  int level = 3;
  ThresholdRule rule = ThresholdRule::sqtwolog;
  Rescale rescale = Rescale::sln;

  friend bool operator==(const DenoiseParams&, const DenoiseParams&) = default;
};

namespace detail {

inline double median(std::vector<double> v) {
  require(!v.empty(), ErrorCode::EmptyCoefficients, "median of empty sequence");
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

// Thresholds below operate on unit-noise coefficients.

inline double universal_threshold(std::size_t m) {
  return std::sqrt(2.0 * std::log(static_cast<double>(m)));
}

// SURE(t) = M - 2 #{|c| <= t} + sum min(c^2, t^2), minimized over t in {|c_k|}.
// Evaluated for all candidates at once from the sorted squares.
inline double sure_threshold(std::span<const double> c) {
  const std::size_t m = c.size();
  std::vector<double> sq(m);
  std::transform(c.begin(), c.end(), sq.begin(), [](double v) { return v * v; });
  std::sort(sq.begin(), sq.end());
  double cumulative = 0.0;
  double best_risk = std::numeric_limits<double>::infinity();
  double best = 0.0;
  const auto md = static_cast<double>(m);
  for (std::size_t k = 0; k < m; ++k) {
    cumulative += sq[k];
    const auto kd = static_cast<double>(k);
    const double risk = (md - 2.0 * (kd + 1.0) + cumulative + (md - kd - 1.0) * sq[k]) / md;
    if (risk < best_risk) {
      best_risk = risk;
      best = sq[k];
    }
  }
  return std::sqrt(best);
}

}  // namespace detail

/// Threshold for `coeffs` under `rule`, scaled by the noise level `sigma`.
inline double threshold_value(std::span<const double> coeffs, ThresholdRule rule, double sigma) {
  detail::require(!coeffs.empty(), ErrorCode::EmptyCoefficients, "no coefficients to threshold");
  detail::require(sigma >= 0.0, ErrorCode::InvalidArgument, "noise scale must be nonnegative");
  if (sigma == 0.0) return 0.0;
  const std::size_t m = coeffs.size();
  const auto md = static_cast<double>(m);
  std::vector<double> unit(m);
  std::transform(coeffs.begin(), coeffs.end(), unit.begin(), [sigma](double v) { return v / sigma; });

  double t = 0.0;
  switch (rule) {
    case ThresholdRule::sqtwolog:
      t = detail::universal_threshold(m);
      break;
    case ThresholdRule::rigrsure:
      t = detail::sure_threshold(unit);
      break;
    case ThresholdRule::heursure: {
      const double energy = std::inner_product(unit.begin(), unit.end(), unit.begin(), 0.0);
      const double sparsity = (energy - md) / md;
      const double critical = std::pow(std::log(md), 1.5) / std::sqrt(md);
      const double universal = detail::universal_threshold(m);
      t = sparsity <= critical ? universal : std::min(detail::sure_threshold(unit), universal);
      break;
    }
    case ThresholdRule::minimax:
      t = m > 32 ? 0.3936 + 0.1829 * std::log2(md) : 0.0;
      break;
  }
  return sigma * t;
}

inline std::vector<double> apply_threshold(std::span<const double> coeffs, double t, ThresholdFn fn) {
  detail::require(t >= 0.0, ErrorCode::NegativeThreshold, "threshold must be nonnegative");
  std::vector<double> out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double c = coeffs[i];
    if (fn == ThresholdFn::soft) {
      const double mag = std::max(std::abs(c) - t, 0.0);
      out[i] = mag == 0.0 ? 0.0 : std::copysign(mag, c);
    } else {
      out[i] = std::abs(c) > t ? c : 0.0;
    }
  }
  return out;
}

/// Noise level per detail level (index 0 is cD_1), from the median absolute
/// deviation of the detail coefficients.
inline std::vector<double> noise_sigma(const MultilevelDecomposition& d, Rescale rescale) {
  constexpr double mad_to_sigma = 0.6745;
  const auto levels = static_cast<std::size_t>(d.levels);
  auto mad_sigma = [](const std::vector<double>& c) {
    std::vector<double> a(c.size());
    std::transform(c.begin(), c.end(), a.begin(), [](double v) { return std::abs(v); });
    return detail::median(std::move(a)) / mad_to_sigma;
  };
  switch (rescale) {
    case Rescale::one:
      return std::vector<double>(levels, 1.0);
    case Rescale::sln:
      return std::vector<double>(levels, mad_sigma(d.details.at(0)));
    case Rescale::mln: {
      std::vector<double> out;
      out.reserve(levels);
      for (const auto& c : d.details) out.push_back(mad_sigma(c));
      return out;
    }
  }
  return {};
}

/// Decompose, shrink every detail level with its own threshold, rebuild.
/// The approximation coefficients pass through untouched.
inline std::vector<double> denoise(std::span<const double> x, const DenoiseParams& p) {
  auto d = wavedec(x, get_wavelet(p.wavelet), p.level);
  const auto sigmas = noise_sigma(d, p.rescale);
  for (std::size_t i = 0; i < d.details.size(); ++i) {
    const double t = threshold_value(d.details[i], p.rule, sigmas[i]);
    d.details[i] = apply_threshold(d.details[i], t, p.threshold_fn);
  }
  return waverec(d);
}

inline Signal denoise(const Signal& s, const DenoiseParams& p) {
  return s.with_samples(denoise(s.samples(), p));
}

/// 10 log10(sum x^2 / sum (x - xhat)^2), in dB.
inline double snr(std::span<const double> x, std::span<const double> xhat) {
  detail::require(x.size() == xhat.size(), ErrorCode::LengthMismatch,
                  "snr inputs differ in length (" + std::to_string(x.size()) + " vs " +
                      std::to_string(xhat.size()) + ")");
  double signal = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    signal += x[i] * x[i];
    const double e = x[i] - xhat[i];
    error += e * e;
  }
  detail::require(signal > 0.0, ErrorCode::ZeroSignal, "reference signal is all zero");
  detail::require(error > 0.0, ErrorCode::IdenticalSignals, "estimate equals reference; SNR unbounded");
  return 10.0 * std::log10(signal / error);
}

inline double mse(std::span<const double> x, std::span<const double> xhat) {
  detail::require(x.size() == xhat.size(), ErrorCode::LengthMismatch, "mse inputs differ in length");
  detail::require(!x.empty(), ErrorCode::EmptyInput, "mse of empty sequences");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += (x[i] - xhat[i]) * (x[i] - xhat[i]);
  return acc / static_cast<double>(x.size());
}

/// EEG rhythm bands from a deep decomposition: alpha is cD_7, beta is cD_6.
inline std::vector<double> extract_band(const MultilevelDecomposition& d, Band band) {
  const int needed = band == Band::alpha ? 7 : 6;
  detail::require(d.levels >= needed, ErrorCode::InsufficientLevels,
                  std::string(band == Band::alpha ? "alpha" : "beta") + " band needs " +
                      std::to_string(needed) + " levels, decomposition has " + std::to_string(d.levels));
  return d.detail_coeffs(needed);
}

struct GridSearchResult {
  DenoiseParams best;
  double mse = 0.0;
  std::vector<double> all_mse;  // in declaration order
};

/// Exhaustive search for the parameter set minimizing MSE against `clean`.
/// A later candidate wins only if it beats the incumbent by more than a
/// relative 1e-12 of the clean signal power, so ties keep declaration order.
inline GridSearchResult grid_search_params(std::span<const double> clean, std::span<const double> noisy,
                                           std::span<const DenoiseParams> space) {
  detail::require(!space.empty(), ErrorCode::EmptySpace, "parameter space is empty");
  detail::require(clean.size() == noisy.size(), ErrorCode::LengthMismatch,
                  "clean and noisy signals differ in length");
  const double power =
      std::inner_product(clean.begin(), clean.end(), clean.begin(), 0.0) / static_cast<double>(clean.size());
  const double tie_tol = 1e-12 * std::max(power, std::numeric_limits<double>::min());

  GridSearchResult result;
  result.all_mse.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const double e = mse(clean, denoise(noisy, space[i]));
    result.all_mse.push_back(e);
    if (i == 0 || e < result.mse - tie_tol) {
      result.best = space[i];
      result.mse = e;
    }
  }
  return result;
}

inline GridSearchResult grid_search_params(const Signal& clean, const Signal& noisy,
                                           std::span<const DenoiseParams> space) {
  return grid_search_params(clean.samples(), noisy.samples(), space);
}

// Names used by the CLI and config files.

inline std::string_view to_string(ThresholdFn v) { return v == ThresholdFn::soft ? "soft" : "hard"; }
inline std::string_view to_string(ThresholdRule v) {
  switch (v) {
    case ThresholdRule::rigrsure: return "rigrsure";
    case ThresholdRule::sqtwolog: return "sqtwolog";
    case ThresholdRule::heursure: return "heursure";
    case ThresholdRule::minimax: return "minimax";
  }
  return "";
}
inline std::string_view to_string(Rescale v) {
  switch (v) {
    case Rescale::one: return "one";
    case Rescale::sln: return "sln";
    case Rescale::mln: return "mln";
  }
  return "";
}

inline ThresholdFn parse_threshold_fn(std::string_view s) {
  if (s == "soft") return ThresholdFn::soft;
  if (s == "hard") return ThresholdFn::hard;
  throw Error(ErrorCode::ConfigError, "unknown threshold function '" + std::string(s) + "'");
}
inline ThresholdRule parse_threshold_rule(std::string_view s) {
  if (s == "rigrsure") return ThresholdRule::rigrsure;
  if (s == "sqtwolog") return ThresholdRule::sqtwolog;
  if (s == "heursure") return ThresholdRule::heursure;
  if (s == "minimax") return ThresholdRule::minimax;
  throw Error(ErrorCode::ConfigError, "unknown threshold rule '" + std::string(s) + "'");
}
inline Rescale parse_rescale(std::string_view s) {
  if (s == "one") return Rescale::one;
  if (s == "sln") return Rescale::sln;
  if (s == "mln") return Rescale::mln;
  throw Error(ErrorCode::ConfigError, "unknown rescale mode '" + std::string(s) + "'");
}

}  // namespace biosig
