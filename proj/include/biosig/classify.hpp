// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "biosig/encoders.hpp"
#include "biosig/error.hpp"
#include "biosig/matrix.hpp"
#include "biosig/synthetic.hpp"

namespace biosig {

struct LabeledFeatures {
  std::vector<double> features;
  std::string label;
};

/// k-nearest-neighbour vote under Euclidean distance. Neighbours are ranked
/// by (distance, training index). A vote tie goes to the label whose tied
/// neighbours have the smaller mean distance, then to the lexically smaller
/// label.
inline std::vector<std::string> knn_classify(std::span<const LabeledFeatures> train,
                                             std::span<const std::vector<double>> test, std::size_t k) {
  detail::require(k >= 1, ErrorCode::InvalidArgument, "k must be >= 1");
  detail::require(k <= train.size(), ErrorCode::KTooLarge,
                  "k = " + std::to_string(k) + " exceeds training set size " + std::to_string(train.size()));
  const std::size_t dim = train.front().features.size();
  for (const auto& t : train) {
    detail::require(t.features.size() == dim, ErrorCode::DimensionMismatch, "training vectors differ in size");
  }
  std::vector<std::string> out;
  out.reserve(test.size());
  std::vector<std::pair<double, std::size_t>> dist(train.size());
  for (const auto& q : test) {
    detail::require(q.size() == dim, ErrorCode::DimensionMismatch,
                    "query has " + std::to_string(q.size()) + " features, expected " + std::to_string(dim));
    for (std::size_t i = 0; i < train.size(); ++i) {
      double acc = 0.0;
      for (std::size_t d = 0; d < dim; ++d) {
        const double diff = q[d] - train[i].features[d];
        acc += diff * diff;
      }
      dist[i] = {std::sqrt(acc), i};
    }
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());

    struct Vote {
      std::size_t count = 0;
      double total = 0.0;
    };
    std::map<std::string, Vote> votes;
    for (std::size_t j = 0; j < k; ++j) {
      auto& v = votes[train[dist[j].second].label];
      ++v.count;
      v.total += dist[j].first;
    }
    // std::map iterates lexically, so strict comparisons keep the smaller label.
    const std::string* best = nullptr;
    Vote best_vote;
    for (const auto& [label, v] : votes) {
      const bool better = !best || v.count > best_vote.count ||
                          (v.count == best_vote.count &&
                           v.total / static_cast<double>(v.count) <
                               best_vote.total / static_cast<double>(best_vote.count));
      if (better) {
        best = &label;
        best_vote = v;
      }
    }
    out.push_back(*best);
  }
  return out;
}

struct LabeledImage {
  FusedImage image;
  std::string label;
};

inline std::vector<std::string> knn_classify(std::span<const LabeledImage> train, std::span<const FusedImage> test,
                                             std::size_t k) {
  detail::require(k <= train.size(), ErrorCode::KTooLarge,
                  "k = " + std::to_string(k) + " exceeds training set size " + std::to_string(train.size()));
  std::vector<LabeledFeatures> tf;
  tf.reserve(train.size());
  for (const auto& t : train) tf.push_back({t.image.flatten(), t.label});
  std::vector<std::vector<double>> qf;
  qf.reserve(test.size());
  for (const auto& q : test) qf.push_back(q.flatten());
  return knn_classify(tf, qf, k);
}

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // true count
};

struct EvaluationReport {
  std::vector<std::string> labels;   // sorted; indexes the confusion matrix
  Matrix<std::size_t> confusion;     // rows truth, columns prediction
  std::vector<ClassMetrics> per_class;
  double accuracy = 0.0;
  double macro_f1 = 0.0;
};

inline EvaluationReport evaluate(std::span<const std::string> truth, std::span<const std::string> pred) {
  detail::require(truth.size() == pred.size(), ErrorCode::LengthMismatch, "truth and prediction lengths differ");
  detail::require(!truth.empty(), ErrorCode::EmptyInput, "nothing to evaluate");
  EvaluationReport r;
  r.labels.assign(truth.begin(), truth.end());
  r.labels.insert(r.labels.end(), pred.begin(), pred.end());
  std::sort(r.labels.begin(), r.labels.end());
  r.labels.erase(std::unique(r.labels.begin(), r.labels.end()), r.labels.end());
  auto index_of = [&](const std::string& l) {
    return static_cast<std::size_t>(std::lower_bound(r.labels.begin(), r.labels.end(), l) - r.labels.begin());
  };
  const std::size_t c = r.labels.size();
  r.confusion = Matrix<std::size_t>(c, c, 0);
  for (std::size_t i = 0; i < truth.size(); ++i) ++r.confusion(index_of(truth[i]), index_of(pred[i]));

  auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  std::size_t diagonal = 0;
  for (std::size_t a = 0; a < c; ++a) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t b = 0; b < c; ++b) {
      row += r.confusion(a, b);
      col += r.confusion(b, a);
    }
    ClassMetrics m;
    m.support = row;
    m.precision = ratio(r.confusion(a, a), col);
    m.recall = ratio(r.confusion(a, a), row);
    m.f1 = (m.precision + m.recall) > 0.0 ? 2.0 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
    r.per_class.push_back(m);
    r.macro_f1 += m.f1;
    diagonal += r.confusion(a, a);
  }
  r.macro_f1 /= static_cast<double>(c);
  r.accuracy = ratio(diagonal, truth.size());
  return r;
}

struct Split {
  std::vector<std::size_t> train;  // ascending indices
  std::vector<std::size_t> test;
};

/// Seeded split stratified by label: each class (in label order) is
/// shuffled and round(fraction * n) of it goes to training, keeping at
/// least one item on each side when the class has two or more.
inline Split stratified_split(std::span<const std::string> labels, double train_fraction, std::uint64_t seed) {
  detail::require(train_fraction > 0.0 && train_fraction < 1.0, ErrorCode::InvalidArgument,
                  "train fraction must lie in (0, 1)");
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(i);
  Rng rng(seed);
  Split s;
  for (auto& [label, idx] : groups) {
    rng.shuffle(idx);
    auto n_train = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(idx.size())));
    if (idx.size() >= 2) n_train = std::clamp<std::size_t>(n_train, 1, idx.size() - 1);
    else n_train = idx.size();
    s.train.insert(s.train.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
    s.test.insert(s.test.end(), idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
  }
  std::sort(s.train.begin(), s.train.end());
  std::sort(s.test.begin(), s.test.end());
  return s;
}

}  // namespace biosig
