// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biosig/error.hpp"
#include "biosig/filters.hpp"

namespace biosig {

/// Uniformly sampled real waveform. Immutable once constructed.
class Signal {
 public:
  Signal(std::vector<double> samples, double fs, std::string id = {},
         std::optional<std::string> label = std::nullopt)
      : samples_(std::move(samples)), fs_(fs), id_(std::move(id)), label_(std::move(label)) {
    detail::require(fs_ > 0.0 && std::isfinite(fs_), ErrorCode::InvalidArgument,
                    "sampling rate must be positive");
    detail::require(!samples_.empty(), ErrorCode::EmptyInput, "signal has no samples");
    for (std::size_t i = 0; i < samples_.size(); ++i) {
      detail::require(std::isfinite(samples_[i]), ErrorCode::InvalidArgument,
                      "sample " + std::to_string(i) + " is not finite");
    }
  }

  [[nodiscard]] std::span<const double> samples() const noexcept { return samples_; }
  [[nodiscard]] std::size_t size() const noexcept { return samples_.size(); }
  [[nodiscard]] double fs() const noexcept { return fs_; }
  [[nodiscard]] const std::string& id() const noexcept { return id_; }
  [[nodiscard]] const std::optional<std::string>& label() const noexcept { return label_; }
  [[nodiscard]] double duration() const noexcept { return static_cast<double>(size()) / fs_; }

  /// Same metadata, new samples and rate.
  [[nodiscard]] Signal with_samples(std::vector<double> samples, std::optional<double> fs = {}) const {
    return Signal(std::move(samples), fs.value_or(fs_), id_, label_);
  }

 private:
  std::vector<double> samples_;
  double fs_;
  std::string id_;
  std::optional<std::string> label_;
};

// ---------------------------------------------------------------------------
// Windows

enum class WindowKind { rectangular, hamming, hann, blackman, kaiser };

struct WindowSpec {
  WindowKind kind = WindowKind::hann;
  std::size_t length = 1;
  double beta = 0.0;  // kaiser only
};

/// Symmetric window weights, all nonnegative.
inline std::vector<double> window_weights(const WindowSpec& spec) {
  detail::require(spec.length >= 1, ErrorCode::InvalidArgument, "window length must be >= 1");
  detail::require(spec.kind != WindowKind::kaiser || spec.beta >= 0.0, ErrorCode::InvalidArgument,
                  "kaiser beta must be >= 0");
  const std::size_t n = spec.length;
  std::vector<double> w(n, 1.0);
  if (n == 1 || spec.kind == WindowKind::rectangular) return w;
  const double denom = static_cast<double>(n - 1);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < n; ++i) {
    // Evaluate on the mirrored index so w[i] == w[n-1-i] bit for bit.
    const double k = static_cast<double>(std::min(i, n - 1 - i));
    double v = 1.0;
    switch (spec.kind) {
      case WindowKind::hamming: v = 0.54 - 0.46 * std::cos(two_pi * k / denom); break;
      case WindowKind::hann: v = 0.5 - 0.5 * std::cos(two_pi * k / denom); break;
      case WindowKind::blackman:
        v = 0.42 - 0.5 * std::cos(two_pi * k / denom) + 0.08 * std::cos(2.0 * two_pi * k / denom);
        break;
      case WindowKind::kaiser: {
        const double r = 2.0 * k / denom - 1.0;
        v = std::cyl_bessel_i(0.0, spec.beta * std::sqrt(std::max(0.0, 1.0 - r * r))) /
            std::cyl_bessel_i(0.0, spec.beta);
        break;
      }
      case WindowKind::rectangular: break;
    }
    w[i] = std::max(v, 0.0);
  }
  return w;
}

// ---------------------------------------------------------------------------
// CSV ingestion
//
// One record per line: decimal samples separated by commas, optionally a
// label column. Lines starting with '#' are comments, except `# fs=<Hz>`
// which declares the sampling rate. When a label column is requested and
// the first data line is a header naming it, that column holds the label;
// otherwise the final column does.

struct CsvOptions {
  std::optional<double> fs;                 // overrides a `# fs=` header
  std::optional<std::string> label_column;  // request label parsing
  std::string id_prefix = "rec";
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::optional<double> parse_double(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || ptr != cell.data() + cell.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

inline std::string record_id(std::string_view prefix, std::size_t index) {
  std::string digits = std::to_string(index);
  if (digits.size() < 4) digits.insert(0, 4 - digits.size(), '0');
  return std::string(prefix) + "_" + digits;
}

}  // namespace detail

/// Parses CSV text. Row and column numbers in errors are 1-based.
inline std::vector<Signal> parse_csv(std::string_view text, const CsvOptions& options = {}) {
  std::optional<double> header_fs;
  std::optional<std::size_t> label_index;
  bool saw_data = false;
  struct Row {
    std::vector<double> samples;
    std::optional<std::string> label;
  };
  std::vector<Row> rows;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = detail::trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;

    if (!line.empty() && line.front() == '#') {
      auto body = detail::trim(line.substr(1));
      if (body.starts_with("fs=")) {
        const auto v = detail::parse_double(detail::trim(body.substr(3)));
        detail::require(v && *v > 0.0, ErrorCode::NonNumericCell,
                        "row " + std::to_string(line_no) + ": invalid fs header");
        header_fs = v;
      }
      continue;
    }
    if (line.empty()) {
      // Trailing blank lines are tolerated; interior ones are not.
      const auto rest = text.substr(std::min(start, text.size()));
      if (rest.find_first_not_of(" \t\r\n") == std::string_view::npos) break;
      throw Error(ErrorCode::EmptyRow, "row " + std::to_string(line_no) + " is empty");
    }

    auto cells = detail::split_commas(line);
    if (!saw_data && options.label_column) {
      const auto it = std::find(cells.begin(), cells.end(), std::string_view(*options.label_column));
      if (it != cells.end()) {
        label_index = static_cast<std::size_t>(it - cells.begin());
        saw_data = true;
        continue;  // header line
      }
    }
    saw_data = true;

    Row row;
    std::size_t label_at = cells.size();
    if (options.label_column) label_at = label_index.value_or(cells.size() - 1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c == label_at) {
        row.label = std::string(cells[c]);
        continue;
      }
      const auto v = detail::parse_double(cells[c]);
      if (!v) {
        throw Error(ErrorCode::NonNumericCell, "row " + std::to_string(line_no) + ", col " +
                                                   std::to_string(c + 1) + ": '" + std::string(cells[c]) +
                                                   "' is not a number");
      }
      row.samples.push_back(*v);
    }
    detail::require(!row.samples.empty(), ErrorCode::EmptyRow,
                    "row " + std::to_string(line_no) + " has no samples");
    rows.push_back(std::move(row));
  }

  const auto fs = options.fs ? options.fs : header_fs;
  detail::require(fs.has_value(), ErrorCode::MissingSampleRate,
                  "no sampling rate given and no '# fs=' header present");
  std::vector<Signal> out;
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.emplace_back(std::move(rows[i].samples), *fs, detail::record_id(options.id_prefix, i),
                     std::move(rows[i].label));
  }
  return out;
}

inline std::vector<Signal> load_csv(const std::filesystem::path& path, CsvOptions options = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open input file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (options.id_prefix == "rec") options.id_prefix = path.stem().string();
  return parse_csv(buffer.str(), options);
}

/// Inverse of parse_csv: `# fs=` header from the first record, one record per
/// row, shortest round-trip decimals, label last when present.
inline std::string format_csv(std::span<const Signal> records) {
  std::string out;
  auto put = [&out](double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
  };
  if (!records.empty()) {
    out += "# fs=";
    put(records.front().fs());
    out += "\n";
  }
  for (const auto& r : records) {
    const auto x = r.samples();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) out += ",";
      put(x[i]);
    }
    if (r.label()) out += "," + *r.label();
    out += "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normalization, windowing, resampling, filtering

enum class NormalRange { neg_one_one, zero_one };

inline std::vector<double> normalize_minmax(std::span<const double> x, NormalRange range) {
  detail::require(!x.empty(), ErrorCode::EmptyInput, "cannot normalize an empty series");
  const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  detail::require(hi > lo, ErrorCode::DegenerateRange, "max equals min");
  const double span = hi - lo;
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = range == NormalRange::neg_one_one ? ((x[i] - hi) + (x[i] - lo)) / span
                                                       : (x[i] - lo) / span;
    out[i] = range == NormalRange::neg_one_one ? std::clamp(v, -1.0, 1.0) : std::clamp(v, 0.0, 1.0);
  }
  return out;
}

inline Signal normalize_minmax(const Signal& s, NormalRange range) {
  return s.with_samples(normalize_minmax(s.samples(), range));
}

/// Fixed-width windows of `window` samples every `hop` samples. A trailing
/// partial window is dropped.
inline std::vector<Signal> segment_samples(const Signal& s, std::size_t window, std::size_t hop) {
  detail::require(window >= 1, ErrorCode::InvalidArgument, "window must be at least one sample");
  detail::require(hop >= 1, ErrorCode::InvalidArgument, "hop must be at least one sample");
  detail::require(window <= s.size(), ErrorCode::WindowTooLong,
                  "window of " + std::to_string(window) + " samples exceeds signal length " +
                      std::to_string(s.size()));
  const std::size_t count = (s.size() - window) / hop + 1;
  std::vector<Signal> out;
  out.reserve(count);
  const auto x = s.samples();
  for (std::size_t k = 0; k < count; ++k) {
    const auto first = x.begin() + static_cast<std::ptrdiff_t>(k * hop);
    out.emplace_back(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(window)), s.fs(),
                     s.id() + "#" + std::to_string(k), s.label());
  }
  return out;
}

inline std::vector<Signal> segment(const Signal& s, double window_seconds, double overlap_fraction) {
  detail::require(overlap_fraction >= 0.0 && overlap_fraction < 1.0, ErrorCode::InvalidArgument,
                  "overlap must lie in [0, 1)");
  detail::require(window_seconds > 0.0, ErrorCode::InvalidArgument, "window must be positive");
  const auto window = static_cast<std::size_t>(std::llround(window_seconds * s.fs()));
  const auto hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::llround(static_cast<double>(window) * (1.0 - overlap_fraction))));
  return segment_samples(s, window, hop);
}

enum class ResampleDirection { up, down };

struct ResampleOptions {
  bool antialias = false;  // zero-phase low-pass at 0.9 x the new Nyquist before decimating
};

inline Signal resample_by2(const Signal& s, ResampleDirection direction, ResampleOptions options = {}) {
  detail::require(s.size() >= 2, ErrorCode::TooShort, "resampling needs at least two samples");
  const auto x = s.samples();
  std::vector<double> out;
  if (direction == ResampleDirection::down) {
    std::vector<double> src(x.begin(), x.end());
    if (options.antialias) {
      const Biquad lp = design_lowpass(0.9 * s.fs() / 4.0, std::numbers::sqrt2 / 2.0, s.fs());
      src = filtfilt(std::span(&lp, 1), src);
    }
    out.reserve((src.size() + 1) / 2);
    for (std::size_t i = 0; i < src.size(); i += 2) out.push_back(src[i]);
    return s.with_samples(std::move(out), s.fs() / 2.0);
  }
  out.reserve(2 * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.push_back(x[i]);
    out.push_back(i + 1 < x.size() ? 0.5 * (x[i] + x[i + 1]) : x[i]);
  }
  return s.with_samples(std::move(out), s.fs() * 2.0);
}

/// Second-order IIR notch at `f0` with quality factor `q`; unity DC gain.
inline Signal notch_filter(const Signal& s, double f0, double q) {
  detail::require(f0 > 0.0 && f0 < s.fs() / 2.0, ErrorCode::InvalidFrequency,
                  "notch frequency must lie in (0, fs/2)");
  detail::require(q > 0.0, ErrorCode::InvalidArgument, "quality factor must be positive");
  return s.with_samples(design_notch(f0, q, s.fs()).apply(s.samples()));
}

}  // namespace biosig
