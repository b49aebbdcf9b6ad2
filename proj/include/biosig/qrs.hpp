// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "biosig/error.hpp"
#include "biosig/filters.hpp"
#include "biosig/signal.hpp"

namespace biosig {

/// Intermediate Pan-Tompkins signals. Every stage is zero-phase or centred,
/// so index n in any stage lines up with sample n of the input.
struct PtStages {
  std::vector<double> bandpassed;
  std::vector<double> derivative;
  std::vector<double> squared;
  std::vector<double> integrated;
  std::size_t integration_window = 0;  // samples
};

struct ThresholdPoint {
  double signal = 0.0;  // primary threshold
  double noise = 0.0;   // search-back threshold (half the primary)
};

struct QrsResult {
  std::vector<std::size_t> peaks;      // sample indices of R-waves
  std::vector<double> rr_intervals;    // seconds
  double heart_rate_bpm = 0.0;         // 0 when fewer than two peaks
  std::vector<ThresholdPoint> threshold_trace;
  double fs = 0.0;
};

inline constexpr double k_refractory_s = 0.200;
inline constexpr double k_integration_s = 0.150;

inline std::size_t refractory_samples(double fs) {
  return static_cast<std::size_t>(std::llround(k_refractory_s * fs));
}

inline PtStages pt_stages(const Signal& s) {
  detail::require(s.fs() >= 100.0, ErrorCode::SamplingTooLow, "QRS detection needs fs >= 100 Hz");
  detail::require(static_cast<double>(s.size()) >= 2.0 * s.fs(), ErrorCode::TooShort,
                  "QRS detection needs at least two seconds of signal");
  const double fs = s.fs();
  const auto n = static_cast<std::ptrdiff_t>(s.size());
  PtStages st;

  // 5-15 Hz band-pass, applied forward and backward.
  const std::array<Biquad, 2> band{design_highpass(5.0, std::numbers::sqrt2 / 2.0, fs),
                                   design_lowpass(15.0, std::numbers::sqrt2 / 2.0, fs)};
  st.bandpassed = filtfilt(band, s.samples());

  // Centred five-point derivative (2, 1, 0, -1, -2) / 8 T.
  auto at = [&](std::ptrdiff_t i) { return st.bandpassed[static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(i, 0, n - 1))]; };
  st.derivative.resize(s.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    st.derivative[static_cast<std::size_t>(i)] =
        (2.0 * at(i + 2) + at(i + 1) - at(i - 1) - 2.0 * at(i - 2)) * fs / 8.0;
  }

  st.squared.resize(s.size());
  std::transform(st.derivative.begin(), st.derivative.end(), st.squared.begin(), [](double v) { return v * v; });

  // Moving-window integration, window centred on each sample.
  const auto w = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(k_integration_s * fs)));
  st.integration_window = w;
  std::vector<double> prefix(s.size() + 1, 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) prefix[i + 1] = prefix[i] + st.squared[i];
  st.integrated.resize(s.size());
  const auto half = static_cast<std::ptrdiff_t>(w / 2);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, i - half);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(n, i - half + static_cast<std::ptrdiff_t>(w));
    st.integrated[static_cast<std::size_t>(i)] =
        std::max(0.0, prefix[static_cast<std::size_t>(hi)] - prefix[static_cast<std::size_t>(lo)]) /
        static_cast<double>(w);
  }
  return st;
}

namespace detail {

struct PtCandidate {
  std::size_t index;
  double value;
};

// Local maxima of the integrated signal, thinned so no two survivors are
// closer than `min_distance` (larger peaks claim their neighbourhood first).
inline std::vector<PtCandidate> integrated_peaks(std::span<const double> y, std::size_t min_distance) {
  std::vector<PtCandidate> raw;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] > y[i - 1] && y[i] >= y[i + 1] && y[i] > 0.0) raw.push_back({i, y[i]});
  }
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a].value > raw[b].value; });
  std::vector<bool> removed(raw.size(), false);
  for (std::size_t oi : order) {
    if (removed[oi]) continue;
    for (std::size_t j = oi + 1; j < raw.size() && raw[j].index - raw[oi].index < min_distance; ++j) {
      removed[j] = true;
    }
    for (std::size_t j = oi; j-- > 0 && raw[oi].index - raw[j].index < min_distance;) removed[j] = true;
  }
  std::vector<PtCandidate> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!removed[i]) out.push_back(raw[i]);
  }
  return out;
}

}  // namespace detail

/// Pan-Tompkins R-peak detector.
///
/// Learning phase 1 seeds the running signal and noise peak levels from the
/// first two seconds of the integrated signal (0.25 x max and 0.5 x mean).
/// Learning phase 2 seeds the RR averages from the first two accepted
/// beats. During detection each integrated peak above
///   threshold = noise + 0.25 (signal - noise)
/// is a beat (signal <- 0.125 peak + 0.875 signal), anything else updates
/// the noise level the same way. When no beat has been found for 1.66 x
/// the RR average, the largest skipped peak above half the threshold is
/// taken (search-back). Peaks closer than 200 ms to the previous beat are
/// never accepted. Each beat is reported at the largest input sample
/// within half an integration window of its integrated peak.
inline QrsResult detect_qrs(const Signal& s) {
  const auto st = pt_stages(s);
  const double fs = s.fs();
  const auto x = s.samples();
  const std::size_t refractory = refractory_samples(fs);
  const auto candidates = detail::integrated_peaks(st.integrated, refractory);

  QrsResult result;
  result.fs = fs;

  const auto learn_len = std::min(s.size(), static_cast<std::size_t>(std::llround(2.0 * fs)));
  const auto learn = std::span(st.integrated).first(learn_len);
  double signal_level = 0.25 * *std::max_element(learn.begin(), learn.end());
  double noise_level = 0.5 * std::accumulate(learn.begin(), learn.end(), 0.0) / static_cast<double>(learn_len);
  auto threshold = [&] { return noise_level + 0.25 * (signal_level - noise_level); };

  const std::size_t half_window = st.integration_window / 2;
  auto locate_r = [&](std::size_t centre) {
    const std::size_t lo = centre > half_window ? centre - half_window : 0;
    const std::size_t hi = std::min(x.size() - 1, centre + half_window);
    return static_cast<std::size_t>(std::max_element(x.begin() + static_cast<std::ptrdiff_t>(lo),
                                                     x.begin() + static_cast<std::ptrdiff_t>(hi) + 1) -
                                    x.begin());
  };

  std::optional<std::size_t> last_integrated;  // integrated index of last beat
  std::vector<double> rr_recent;                // samples
  std::vector<double> rr_regular;
  std::optional<double> rr_average;
  std::vector<bool> used(candidates.size(), false);

  auto mean_last8 = [](const std::vector<double>& v) {
    const std::size_t k = std::min<std::size_t>(8, v.size());
    return std::accumulate(v.end() - static_cast<std::ptrdiff_t>(k), v.end(), 0.0) / static_cast<double>(k);
  };

  // Returns false when the refined R location violates the refractory period.
  auto accept = [&](std::size_t ci, double weight) {
    const auto& c = candidates[ci];
    const std::size_t r = locate_r(c.index);
    if (!result.peaks.empty() && (r <= result.peaks.back() || r - result.peaks.back() < refractory)) return false;
    used[ci] = true;
    signal_level = weight * c.value + (1.0 - weight) * signal_level;
    if (last_integrated) {
      const auto rr = static_cast<double>(c.index - *last_integrated);
      rr_recent.push_back(rr);
      if (!rr_average) {
        rr_average = rr;  // learning phase 2
        rr_regular.push_back(rr);
      } else if (rr >= 0.92 * *rr_average && rr <= 1.16 * *rr_average) {
        rr_regular.push_back(rr);
        rr_average = mean_last8(rr_regular);
      } else {
        rr_average = mean_last8(rr_recent);
      }
    }
    last_integrated = c.index;
    result.peaks.push_back(r);
    return true;
  };

  auto search_back = [&](std::size_t until) {
    if (!rr_average || !last_integrated) return;
    if (static_cast<double>(until - *last_integrated) <= 1.66 * *rr_average) return;
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      const auto& c = candidates[j];
      if (used[j] || c.index <= *last_integrated + refractory || c.index >= until) continue;
      if (!best || c.value > candidates[*best].value) best = j;
    }
    if (best && candidates[*best].value > 0.5 * threshold()) {
      if (accept(*best, 0.25)) result.threshold_trace.push_back({threshold(), 0.5 * threshold()});
    }
  };

  for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
    const auto& c = candidates[ci];
    search_back(c.index);
    bool is_beat = false;
    if (c.value >= threshold()) {
      const bool too_close = last_integrated && c.index - *last_integrated < refractory;
      if (!too_close) is_beat = accept(ci, 0.125);
    }
    if (!is_beat) noise_level = 0.125 * c.value + 0.875 * noise_level;
    result.threshold_trace.push_back({threshold(), 0.5 * threshold()});
  }
  search_back(s.size());

  for (std::size_t k = 1; k < result.peaks.size(); ++k) {
    result.rr_intervals.push_back(static_cast<double>(result.peaks[k] - result.peaks[k - 1]) / fs);
  }
  if (!result.rr_intervals.empty()) {
    result.heart_rate_bpm =
        60.0 / (std::accumulate(result.rr_intervals.begin(), result.rr_intervals.end(), 0.0) /
                static_cast<double>(result.rr_intervals.size()));
  }
  return result;
}

/// 60 / mean RR.
inline double heart_rate(const QrsResult& r) {
  detail::require(!r.rr_intervals.empty(), ErrorCode::TooFewPeaks, "heart rate needs at least two peaks");
  const double mean = std::accumulate(r.rr_intervals.begin(), r.rr_intervals.end(), 0.0) /
                      static_cast<double>(r.rr_intervals.size());
  return 60.0 / mean;
}

/// Baseline comparator: local maxima above `min_height`, scanned left to
/// right; within the refractory distance only the taller peak survives.
inline std::vector<std::size_t> find_r_peaks_simple(const Signal& s, double min_height, double refractory_s) {
  detail::require(refractory_s >= 0.0, ErrorCode::InvalidArgument, "refractory period must be >= 0");
  const auto x = s.samples();
  const auto refractory = static_cast<std::size_t>(std::llround(refractory_s * s.fs()));
  std::vector<std::size_t> peaks;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    if (!(x[i] > x[i - 1] && x[i] >= x[i + 1] && x[i] > min_height)) continue;
    if (!peaks.empty() && i - peaks.back() < refractory) {
      if (x[i] > x[peaks.back()]) peaks.back() = i;
      continue;
    }
    peaks.push_back(i);
  }
  return peaks;
}

/// CSV report: peak_index,time_s,rr_s (rr_s empty on the first beat).
inline std::string qrs_to_csv(const QrsResult& r) {
  std::ostringstream out;
  out.precision(17);
  out << "peak_index,time_s,rr_s\n";
  for (std::size_t k = 0; k < r.peaks.size(); ++k) {
    out << r.peaks[k] << ',' << static_cast<double>(r.peaks[k]) / r.fs << ',';
    if (k > 0) out << r.rr_intervals[k - 1];
    out << '\n';
  }
  return out.str();
}

}  // namespace biosig
