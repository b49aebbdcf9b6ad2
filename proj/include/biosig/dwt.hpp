// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "biosig/error.hpp"
#include "biosig/signal.hpp"
#include "biosig/wavelet.hpp"

namespace biosig {

enum class Boundary { symmetric };

/// Half-point symmetric extension: x[-1] = x[0], x[N] = x[N-1], repeated
/// as often as needed for filters longer than the signal.
inline double symmetric_at(std::span<const double> x, std::ptrdiff_t k) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  std::ptrdiff_t p = k % (2 * n);
  if (p < 0) p += 2 * n;
  return x[static_cast<std::size_t>(p < n ? p : 2 * n - 1 - p)];
}

/// Number of coefficients one analysis step produces from `n` samples.
constexpr std::size_t dwt_coeff_len(std::size_t n, std::size_t nw) { return (n + nw - 1) / 2; }

struct DwtLevel {
  std::vector<double> approx;
  std::vector<double> detail;
};

/// One analysis step: symmetric extension, filtering with dec_lo/dec_hi,
/// keep every second output.
inline DwtLevel dwt_single(std::span<const double> x, const WaveletSpec& w) {
  detail::require(x.size() >= 2, ErrorCode::TooShort, "dwt needs at least two samples");
  const std::size_t nw = w.nw();
  const std::size_t out_len = dwt_coeff_len(x.size(), nw);
  DwtLevel level{std::vector<double>(out_len), std::vector<double>(out_len)};
  for (std::size_t k = 0; k < out_len; ++k) {
    double a = 0.0;
    double d = 0.0;
    const auto centre = static_cast<std::ptrdiff_t>(2 * k + 1);
    for (std::size_t j = 0; j < nw; ++j) {
      const double v = symmetric_at(x, centre - static_cast<std::ptrdiff_t>(j));
      a += w.dec_lo[j] * v;
      d += w.dec_hi[j] * v;
    }
    level.approx[k] = a;
    level.detail[k] = d;
  }
  return level;
}

/// One synthesis step producing `out_len` samples.
inline std::vector<double> idwt_single(std::span<const double> approx, std::span<const double> det,
                                       const WaveletSpec& w, std::size_t out_len) {
  const std::size_t nw = w.nw();
  detail::require(approx.size() == det.size(), ErrorCode::ShapeMismatch,
                  "approximation and detail lengths differ");
  detail::require(dwt_coeff_len(out_len, nw) == approx.size(), ErrorCode::ShapeMismatch,
                  "coefficient length " + std::to_string(approx.size()) +
                      " is inconsistent with output length " + std::to_string(out_len));
  std::vector<double> out(out_len, 0.0);
  for (std::size_t i = 0; i < approx.size(); ++i) {
    // out[n] += c[i] * rec[n + nw - 2 - 2i]  for 0 <= n + nw - 2 - 2i < nw
    for (std::size_t m = 0; m < nw; ++m) {
      const auto n = static_cast<std::ptrdiff_t>(2 * i + m) - static_cast<std::ptrdiff_t>(nw - 2);
      if (n < 0 || n >= static_cast<std::ptrdiff_t>(out_len)) continue;
      out[static_cast<std::size_t>(n)] += approx[i] * w.rec_lo[m] + det[i] * w.rec_hi[m];
    }
  }
  return out;
}

/// Deepest admissible level: round(log2(N/nw - 1)), 0 when the argument
/// is not above 1.
inline int max_level(std::size_t n, std::size_t nw) {
  detail::require(nw >= 2, ErrorCode::InvalidArgument, "filter needs at least two taps");
  const double arg = static_cast<double>(n) / static_cast<double>(nw) - 1.0;
  if (arg <= 1.0) return 0;
  return static_cast<int>(std::lround(std::log2(arg)));
}

/// cA_L plus cD_1..cD_L (details[0] is the finest level).
struct MultilevelDecomposition {
  WaveletSpec wavelet;
  int levels = 0;
  std::vector<double> approx;
  std::vector<std::vector<double>> details;
  std::size_t orig_len = 0;
  Boundary boundary = Boundary::symmetric;

  /// cD_i for i in 1..levels.
  [[nodiscard]] const std::vector<double>& detail_coeffs(int i) const {
    detail::require(i >= 1 && i <= levels, ErrorCode::InsufficientLevels,
                    "detail level " + std::to_string(i) + " not present");
    return details[static_cast<std::size_t>(i - 1)];
  }

  /// Signal length entering level i (len_0 = orig_len).
  [[nodiscard]] std::size_t input_len(int i) const {
    std::size_t n = orig_len;
    for (int k = 1; k < i; ++k) n = dwt_coeff_len(n, wavelet.nw());
    return n;
  }
};

namespace detail {

inline MultilevelDecomposition wavedec_unchecked(std::span<const double> x, const WaveletSpec& w,
                                                 int levels) {
  MultilevelDecomposition d;
  d.wavelet = w;
  d.levels = levels;
  d.orig_len = x.size();
  std::vector<double> current(x.begin(), x.end());
  for (int i = 0; i < levels; ++i) {
    auto step = dwt_single(current, w);
    d.details.push_back(std::move(step.detail));
    current = std::move(step.approx);
  }
  d.approx = std::move(current);
  return d;
}

}  // namespace detail

inline MultilevelDecomposition wavedec(std::span<const double> x, const WaveletSpec& w, int levels) {
  const int limit = max_level(x.size(), w.nw());
  detail::require(levels >= 1 && levels <= limit, ErrorCode::LevelOutOfRange,
                  "level " + std::to_string(levels) + " outside [1, " + std::to_string(limit) +
                      "] for " + std::to_string(x.size()) + " samples and " + w.name);
  return detail::wavedec_unchecked(x, w, levels);
}

inline MultilevelDecomposition wavedec(const Signal& s, std::string_view wavelet, int levels) {
  return wavedec(s.samples(), get_wavelet(wavelet), levels);
}

inline std::vector<double> waverec(const MultilevelDecomposition& d) {
  detail::require(d.levels >= 1 && d.details.size() == static_cast<std::size_t>(d.levels),
                  ErrorCode::ShapeMismatch, "detail list does not match level count");
  const std::size_t nw = d.wavelet.nw();
  std::vector<std::size_t> lens{d.orig_len};
  for (int i = 0; i < d.levels; ++i) lens.push_back(dwt_coeff_len(lens.back(), nw));
  for (int i = 1; i <= d.levels; ++i) {
    detail::require(d.details[static_cast<std::size_t>(i - 1)].size() == lens[static_cast<std::size_t>(i)],
                    ErrorCode::ShapeMismatch,
                    "cD_" + std::to_string(i) + " has length " +
                        std::to_string(d.details[static_cast<std::size_t>(i - 1)].size()) + ", expected " +
                        std::to_string(lens[static_cast<std::size_t>(i)]));
  }
  detail::require(d.approx.size() == lens.back(), ErrorCode::ShapeMismatch,
                  "approximation length inconsistent with orig_len");
  std::vector<double> current = d.approx;
  for (int i = d.levels; i >= 1; --i) {
    const auto idx = static_cast<std::size_t>(i);
    current = idwt_single(current, d.details[idx - 1], d.wavelet, lens[idx - 1]);
  }
  return current;
}

// ---------------------------------------------------------------------------
// Text serialization (JSON): wavelet name, levels, orig_len, boundary,
// approx, details (finest first). Doubles are written with round-trip
// precision.

inline nlohmann::json to_json(const MultilevelDecomposition& d) {
  nlohmann::json j;
  j["wavelet"] = d.wavelet.name;
  j["levels"] = d.levels;
  j["orig_len"] = d.orig_len;
  j["boundary"] = "symmetric";
  j["approx"] = d.approx;
  j["details"] = d.details;
  return j;
}

inline MultilevelDecomposition decomposition_from_json(const nlohmann::json& j) {
  try {
    MultilevelDecomposition d;
    d.wavelet = get_wavelet(j.at("wavelet").get<std::string>());
    d.levels = j.at("levels").get<int>();
    d.orig_len = j.at("orig_len").get<std::size_t>();
    detail::require(j.value("boundary", std::string("symmetric")) == "symmetric",
                    ErrorCode::InvalidArgument, "only symmetric boundary is supported");
    d.approx = j.at("approx").get<std::vector<double>>();
    d.details = j.at("details").get<std::vector<std::vector<double>>>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed decomposition: ") + e.what());
  }
}

}  // namespace biosig
