// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biosig/error.hpp"
#include "biosig/matrix.hpp"

namespace biosig {

struct PolarSeries {
  std::vector<double> phi;  // radians in [0, pi]
  std::vector<double> r;    // i/N, i = 1..N
};

enum class ImageKind { gasf, gadf, rp_raw, rp_binary, mtf };

struct EncodedImage {
  Matrix<double> values;
  ImageKind kind = ImageKind::gasf;

  [[nodiscard]] std::size_t size() const noexcept { return values.rows(); }
};

inline constexpr double k_normalized_slack = 1e-12;

inline PolarSeries to_polar(std::span<const double> x) {
  detail::require(!x.empty(), ErrorCode::EmptyInput, "empty series");
  PolarSeries p;
  p.phi.reserve(x.size());
  p.r.reserve(x.size());
  const auto n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    detail::require(std::abs(x[i]) <= 1.0 + k_normalized_slack, ErrorCode::NotNormalized,
                    "sample " + std::to_string(i) + " lies outside [-1, 1]");
    p.phi.push_back(std::acos(std::clamp(x[i], -1.0, 1.0)));
    p.r.push_back(static_cast<double>(i + 1) / n);
  }
  return p;
}

enum class GafKind { gasf, gadf };

/// Gramian angular field: cos(phi_i + phi_j) or sin(phi_i - phi_j).
/// Computed on the upper triangle and mirrored, so GASF is exactly
/// symmetric and GADF exactly antisymmetric.
inline EncodedImage gaf(std::span<const double> x, GafKind kind) {
  const auto polar = to_polar(x);
  const std::size_t n = x.size();
  EncodedImage img{Matrix<double>(n, n), kind == GafKind::gasf ? ImageKind::gasf : ImageKind::gadf};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (kind == GafKind::gasf) {
        const double v = std::cos(polar.phi[i] + polar.phi[j]);
        img.values(i, j) = v;
        img.values(j, i) = v;
      } else {
        const double v = i == j ? 0.0 : std::sin(polar.phi[i] - polar.phi[j]);
        img.values(i, j) = v;
        img.values(j, i) = -v;
      }
    }
  }
  return img;
}

/// Recurrence plot with embedding dimension 1. Without `eps` the raw
/// distance |x_i - x_j|; with `eps` the indicator H(eps - |x_i - x_j|),
/// where H(0) = 1.
inline EncodedImage recurrence_plot(std::span<const double> x, std::optional<double> eps = std::nullopt) {
  detail::require(!x.empty(), ErrorCode::EmptyInput, "empty series");
  if (eps) detail::require(*eps > 0.0, ErrorCode::NonPositiveEpsilon, "epsilon must be positive");
  const std::size_t n = x.size();
  EncodedImage img{Matrix<double>(n, n), eps ? ImageKind::rp_binary : ImageKind::rp_raw};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double d = std::abs(x[i] - x[j]);
      const double v = eps ? (*eps - d >= 0.0 ? 1.0 : 0.0) : d;
      img.values(i, j) = v;
      img.values(j, i) = v;
    }
  }
  return img;
}

// ---------------------------------------------------------------------------
// Markov transition field

struct QuantileBinning {
  std::size_t q = 0;
  std::vector<double> edges;       // q - 1 thresholds, nondecreasing
  std::vector<std::size_t> bins;   // 1-based bin per sample
};

/// Empirical quantile of sorted data at probability p, linear interpolation
/// between order statistics (position p (n - 1)).
inline double quantile_sorted(std::span<const double> sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

/// Edges at the k/Q quantiles; a sample equal to an edge falls in the lower
/// bin, i.e. bin = 1 + #{edges below the sample}.
inline QuantileBinning quantile_bins(std::span<const double> x, std::size_t q) {
  detail::require(q >= 2, ErrorCode::InvalidArgument, "need at least two bins");
  detail::require(x.size() >= q, ErrorCode::TooFewSamples,
                  std::to_string(x.size()) + " samples cannot fill " + std::to_string(q) + " bins");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  detail::require(*hi > *lo, ErrorCode::DegenerateData, "all samples are equal");

  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  QuantileBinning b;
  b.q = q;
  for (std::size_t k = 1; k < q; ++k) {
    b.edges.push_back(quantile_sorted(sorted, static_cast<double>(k) / static_cast<double>(q)));
  }
  b.bins.reserve(x.size());
  for (double v : x) {
    const auto above = static_cast<std::size_t>(std::lower_bound(b.edges.begin(), b.edges.end(), v) -
                                                 b.edges.begin());
    b.bins.push_back(1 + above);
  }
  return b;
}

/// Row-stochastic first-order transition matrix between quantile bins:
/// W(a, b) is the share of samples in bin a followed by a sample in bin b.
/// Bins with no outgoing transition get a uniform row.
inline Matrix<double> transition_matrix(const QuantileBinning& b) {
  Matrix<double> w(b.q, b.q, 0.0);
  for (std::size_t t = 0; t + 1 < b.bins.size(); ++t) w(b.bins[t] - 1, b.bins[t + 1] - 1) += 1.0;
  for (std::size_t a = 0; a < b.q; ++a) {
    double total = 0.0;
    for (double v : w.row(a)) total += v;
    for (auto& v : w.row(a)) v = total > 0.0 ? v / total : 1.0 / static_cast<double>(b.q);
  }
  return w;
}

struct MarkovTransitionField {
  QuantileBinning binning;
  Matrix<double> transitions;  // Q x Q
  EncodedImage image;          // N x N
};

inline MarkovTransitionField markov_transition_field(std::span<const double> x, std::size_t q) {
  MarkovTransitionField f;
  f.binning = quantile_bins(x, q);
  f.transitions = transition_matrix(f.binning);
  const std::size_t n = x.size();
  f.image = {Matrix<double>(n, n), ImageKind::mtf};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      f.image.values(i, j) = f.transitions(f.binning.bins[i] - 1, f.binning.bins[j] - 1);
    }
  }
  return f;
}

inline EncodedImage mtf(std::span<const double> x, std::size_t q) {
  return markov_transition_field(x, q).image;
}

// ---------------------------------------------------------------------------
// Fusion

/// Area-weighted mean pooling of a square matrix onto size x size. When
/// `size` divides N every output cell is the plain mean of an (N/size)^2
/// block.
inline Matrix<double> mean_pool(const Matrix<double>& m, std::size_t size) {
  detail::require(m.is_square() && !m.empty(), ErrorCode::NonSquareChannel, "channel is not square");
  detail::require(size >= 1, ErrorCode::InvalidArgument, "target size must be >= 1");
  const std::size_t n = m.rows();
  if (n == size) return m;
  // Overlap of source cell s with output cell o along one axis, in units
  // where the whole axis has length n * size.
  std::vector<std::vector<std::pair<std::size_t, double>>> weights(size);
  for (std::size_t o = 0; o < size; ++o) {
    const std::size_t lo = o * n;
    const std::size_t hi = (o + 1) * n;
    for (std::size_t s = lo / size; s < n && s * size < hi; ++s) {
      const std::size_t a = std::max(lo, s * size);
      const std::size_t b = std::min(hi, (s + 1) * size);
      if (b > a) weights[o].emplace_back(s, static_cast<double>(b - a) / static_cast<double>(n));
    }
  }
  Matrix<double> out(size, size, 0.0);
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      double acc = 0.0;
      for (const auto& [sr, wr] : weights[r]) {
        for (const auto& [sc, wc] : weights[c]) acc += wr * wc * m(sr, sc);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

/// Three equally sized channels in the order (gaf, rp, mtf).
struct FusedImage {
  std::array<EncodedImage, 3> channels;

  [[nodiscard]] std::size_t size() const noexcept { return channels[0].size(); }

  /// Channel-major concatenation of all pixels.
  [[nodiscard]] std::vector<double> flatten() const {
    std::vector<double> out;
    out.reserve(3 * size() * size());
    for (const auto& ch : channels) out.insert(out.end(), ch.values.flat().begin(), ch.values.flat().end());
    return out;
  }
};

inline FusedImage fuse(const EncodedImage& gaf_img, const EncodedImage& rp_img, const EncodedImage& mtf_img,
                       std::size_t size) {
  FusedImage f;
  const std::array<const EncodedImage*, 3> src{&gaf_img, &rp_img, &mtf_img};
  for (std::size_t c = 0; c < 3; ++c) {
    detail::require(src[c]->values.is_square() && !src[c]->values.empty(), ErrorCode::NonSquareChannel,
                    "channel " + std::to_string(c) + " is not square");
    f.channels[c] = {mean_pool(src[c]->values, size), src[c]->kind};
  }
  return f;
}

}  // namespace biosig
