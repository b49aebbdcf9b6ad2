// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#pragma once

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "biosig/classify.hpp"
#include "biosig/denoise.hpp"
#include "biosig/encoders.hpp"
#include "biosig/error.hpp"
#include "biosig/image_io.hpp"
#include "biosig/signal.hpp"

namespace biosig {

struct PipelineConfig {
  std::filesystem::path input;
  std::optional<std::filesystem::path> reference;  // clean records for SNR, row-aligned with input
  std::optional<double> fs;
  std::string label_column = "label";
  bool denoise = false;
  DenoiseParams denoise_params;
  GafKind gaf = GafKind::gasf;
  std::optional<double> rp_eps;
  std::size_t mtf_bins = 8;
  std::size_t fuse_size = 32;
  std::size_t k = 3;
  double train_fraction = 0.7;
  std::uint64_t seed = 42;
  std::filesystem::path output_dir = "biosig_out";
  bool write_images = true;
  bool png = false;
};

/// Ordered key=value pairs; values already formatted.
using Metrics = std::vector<std::pair<std::string, std::string>>;

/// Shortest decimal text that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// ---------------------------------------------------------------------------
// Config file: one `key = value` per line, '#' starts a comment, unknown
// keys are rejected.

namespace detail {

inline double config_double(const std::string& key, std::string_view v) {
  const auto d = parse_double(v);
  require(d.has_value(), ErrorCode::ConfigError, "key '" + key + "': '" + std::string(v) + "' is not a number");
  return *d;
}

inline std::uint64_t config_uint(const std::string& key, std::string_view v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  require(ec == std::errc{} && ptr == v.data() + v.size(), ErrorCode::ConfigError,
          "key '" + key + "': '" + std::string(v) + "' is not a nonnegative integer");
  return out;
}

inline bool config_bool(const std::string& key, std::string_view v) {
  if (v == "true" || v == "on" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "off" || v == "no" || v == "0") return false;
  throw Error(ErrorCode::ConfigError, "key '" + key + "': '" + std::string(v) + "' is not a boolean");
}

}  // namespace detail

inline void set_config_value(PipelineConfig& cfg, const std::string& key, std::string_view value) {
  using namespace detail;
  if (key == "input") cfg.input = std::string(value);
  else if (key == "reference") cfg.reference = std::string(value);
  else if (key == "fs") cfg.fs = config_double(key, value);
  else if (key == "label_column") cfg.label_column = std::string(value);
  else if (key == "denoise") cfg.denoise = config_bool(key, value);
  else if (key == "wavelet") cfg.denoise_params.wavelet = std::string(value);
  else if (key == "level") cfg.denoise_params.level = static_cast<int>(config_uint(key, value));
  else if (key == "threshold_fn") cfg.denoise_params.threshold_fn = parse_threshold_fn(value);
  else if (key == "rule") cfg.denoise_params.rule = parse_threshold_rule(value);
  else if (key == "rescale") cfg.denoise_params.rescale = parse_rescale(value);
  else if (key == "gaf") {
    if (value == "gasf") cfg.gaf = GafKind::gasf;
    else if (value == "gadf") cfg.gaf = GafKind::gadf;
    else throw Error(ErrorCode::ConfigError, "key 'gaf' must be gasf or gadf");
  } else if (key == "rp_eps") {
    if (value == "none" || value.empty()) cfg.rp_eps.reset();
    else cfg.rp_eps = config_double(key, value);
  } else if (key == "mtf_bins") cfg.mtf_bins = config_uint(key, value);
  else if (key == "fuse_size") cfg.fuse_size = config_uint(key, value);
  else if (key == "k") cfg.k = config_uint(key, value);
  else if (key == "train_fraction") cfg.train_fraction = config_double(key, value);
  else if (key == "seed") cfg.seed = config_uint(key, value);
  else if (key == "output_dir") cfg.output_dir = std::string(value);
  else if (key == "write_images") cfg.write_images = config_bool(key, value);
  else if (key == "png") cfg.png = config_bool(key, value);
  else throw Error(ErrorCode::ConfigError, "unknown config key '" + key + "'");
}

/// Invariants a config must satisfy before a run.
inline void validate(const PipelineConfig& cfg) {
  auto fail = [](const std::string& m) { throw Error(ErrorCode::ConfigError, m); };
  if (cfg.input.empty()) fail("input path is required");
  if (!(cfg.train_fraction > 0.0 && cfg.train_fraction < 1.0)) fail("train_fraction must lie in (0, 1)");
  if (cfg.k < 1) fail("k must be >= 1");
  if (cfg.mtf_bins < 2) fail("mtf_bins must be >= 2");
  if (cfg.fuse_size < 1) fail("fuse_size must be >= 1");
  if (cfg.fs && !(*cfg.fs > 0.0)) fail("fs must be positive");
  if (cfg.rp_eps && !(*cfg.rp_eps > 0.0)) fail("rp_eps must be positive");
  if (cfg.denoise_params.level < 1) fail("level must be >= 1");
  try {
    (void)get_wavelet(cfg.denoise_params.wavelet);
  } catch (const Error& e) {
    fail(e.message());
  }
}

inline PipelineConfig parse_config(std::string_view text) {
  PipelineConfig cfg;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    detail::require(eq != std::string_view::npos, ErrorCode::ConfigError,
                    "line " + std::to_string(line_no) + ": expected key = value");
    set_config_value(cfg, std::string(detail::trim(line.substr(0, eq))), detail::trim(line.substr(eq + 1)));
  }
  return cfg;
}

inline PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

// ---------------------------------------------------------------------------
// Metrics file: `key=value` per line.

inline std::string format_metrics(const Metrics& m) {
  std::string out;
  for (const auto& [k, v] : m) out += k + "=" + v + "\n";
  return out;
}

inline Metrics parse_metrics(std::string_view text) {
  Metrics m;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = detail::trim(text.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    detail::require(eq != std::string_view::npos, ErrorCode::InvalidArgument,
                    "malformed metrics line '" + std::string(line) + "'");
    m.emplace_back(std::string(line.substr(0, eq)), std::string(line.substr(eq + 1)));
  }
  return m;
}

inline Metrics load_metrics(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MissingFile, "cannot open metrics file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_metrics(buf.str());
}

inline Metrics report_metrics(const EvaluationReport& r) {
  Metrics m;
  std::string classes;
  for (const auto& l : r.labels) classes += (classes.empty() ? "" : ",") + l;
  m.emplace_back("classes", classes);
  m.emplace_back("accuracy", format_double(r.accuracy));
  m.emplace_back("macro_f1", format_double(r.macro_f1));
  for (std::size_t a = 0; a < r.labels.size(); ++a) {
    const auto& c = r.per_class[a];
    const std::string p = "class." + r.labels[a] + ".";
    m.emplace_back(p + "precision", format_double(c.precision));
    m.emplace_back(p + "recall", format_double(c.recall));
    m.emplace_back(p + "f1", format_double(c.f1));
    m.emplace_back(p + "support", std::to_string(c.support));
  }
  for (std::size_t a = 0; a < r.labels.size(); ++a) {
    for (std::size_t b = 0; b < r.labels.size(); ++b) {
      m.emplace_back("confusion." + r.labels[a] + "." + r.labels[b], std::to_string(r.confusion(a, b)));
    }
  }
  return m;
}

/// Human-readable summary rendered from a metrics file.
inline std::string format_report(const Metrics& m) {
  std::map<std::string, std::string> kv(m.begin(), m.end());
  auto get = [&](const std::string& k) {
    const auto it = kv.find(k);
    return it == kv.end() ? std::string("-") : it->second;
  };
  std::vector<std::string> labels;
  {
    std::string classes = get("classes");
    std::size_t s = 0;
    while (classes != "-" && s <= classes.size()) {
      const auto e = std::min(classes.find(',', s), classes.size());
      labels.push_back(classes.substr(s, e - s));
      s = e + 1;
    }
  }
  std::ostringstream out;
  out << "records: " << get("records") << "  train: " << get("train_size") << "  test: " << get("test_size")
      << "  k: " << get("k") << "\n";
  out << "accuracy: " << get("accuracy") << "\nmacro F1: " << get("macro_f1") << "\n";
  if (get("denoise") == "on" && kv.count("snr.mean_gain_db")) {
    out << "mean SNR in/out/gain (dB): " << get("snr.mean_input_db") << " / " << get("snr.mean_output_db")
        << " / " << get("snr.mean_gain_db") << "\n";
  }
  out << "\nconfusion (rows = truth, columns = prediction)\n" << std::setw(14) << "";
  for (const auto& l : labels) out << std::setw(12) << l;
  out << "\n";
  for (const auto& a : labels) {
    out << std::setw(14) << a;
    for (const auto& b : labels) out << std::setw(12) << get("confusion." + a + "." + b);
    out << "\n";
  }
  out << "\n" << std::setw(14) << "class" << std::setw(12) << "precision" << std::setw(12) << "recall"
      << std::setw(12) << "f1" << std::setw(10) << "support\n";
  for (const auto& a : labels) {
    auto fixed = [&](const std::string& key) {
      const auto v = detail::parse_double(get(key));
      if (!v) return std::string("-");
      std::ostringstream s;
      s << std::fixed << std::setprecision(4) << *v;
      return s.str();
    };
    out << std::setw(14) << a << std::setw(12) << fixed("class." + a + ".precision") << std::setw(12)
        << fixed("class." + a + ".recall") << std::setw(12) << fixed("class." + a + ".f1") << std::setw(10)
        << get("class." + a + ".support") << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

/// Encodes one normalized record into the fused (gaf, rp, mtf) image.
inline FusedImage encode_fused(std::span<const double> normalized, const PipelineConfig& cfg) {
  return fuse(gaf(normalized, cfg.gaf), recurrence_plot(normalized, cfg.rp_eps), mtf(normalized, cfg.mtf_bins),
              cfg.fuse_size);
}

struct PipelineResult {
  EvaluationReport report;
  Metrics metrics;
  std::vector<std::string> record_ids;
  std::vector<std::string> predictions;  // aligned with the test split
  Split split;
};

/// load -> (denoise) -> normalize -> encode -> fuse -> split -> k-NN ->
/// evaluate. Writes metrics.txt, report.txt, predictions.csv and, when
/// enabled, one fused image per record under images/.
inline PipelineResult run_pipeline(const PipelineConfig& cfg) {
  validate(cfg);
  CsvOptions csv;
  csv.fs = cfg.fs;
  csv.label_column = cfg.label_column;
  const auto records = load_csv(cfg.input, csv);
  detail::require(!records.empty(), ErrorCode::EmptyInput, "input '" + cfg.input.string() + "' has no records");

  std::vector<Signal> references;
  if (cfg.reference) {
    CsvOptions ref_csv = csv;
    references = load_csv(*cfg.reference, ref_csv);
    detail::require(references.size() == records.size(), ErrorCode::LengthMismatch,
                    "reference has " + std::to_string(references.size()) + " records, input has " +
                        std::to_string(records.size()));
  }

  auto with_context = [](const Signal& rec, auto&& fn) {
    try {
      return fn();
    } catch (const Error& e) {
      throw Error(e.code(), "record " + rec.id() + ": " + e.message());
    }
  };

  std::vector<FusedImage> images;
  std::vector<std::string> labels;
  double snr_in_sum = 0.0;
  double snr_out_sum = 0.0;
  images.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    with_context(rec, [&] {
      detail::require(rec.label().has_value(), ErrorCode::InvalidArgument, "record has no label");
      std::vector<double> x(rec.samples().begin(), rec.samples().end());
      if (cfg.denoise) {
        x = denoise(rec.samples(), cfg.denoise_params);
        if (cfg.reference) {
          snr_in_sum += snr(references[i].samples(), rec.samples());
          snr_out_sum += snr(references[i].samples(), x);
        }
      }
      const auto normalized = normalize_minmax(x, NormalRange::neg_one_one);
      images.push_back(encode_fused(normalized, cfg));
      labels.push_back(*rec.label());
      return 0;
    });
  }

  PipelineResult result;
  for (const auto& r : records) result.record_ids.push_back(r.id());
  result.split = stratified_split(labels, cfg.train_fraction, cfg.seed);
  detail::require(!result.split.test.empty(), ErrorCode::InvalidArgument, "test split is empty");
  std::vector<LabeledImage> train;
  for (auto i : result.split.train) train.push_back({images[i], labels[i]});
  std::vector<FusedImage> test;
  std::vector<std::string> truth;
  for (auto i : result.split.test) {
    test.push_back(images[i]);
    truth.push_back(labels[i]);
  }
  result.predictions = knn_classify(train, test, cfg.k);
  result.report = evaluate(truth, result.predictions);

  auto& m = result.metrics;
  m.emplace_back("records", std::to_string(records.size()));
  m.emplace_back("train_size", std::to_string(train.size()));
  m.emplace_back("test_size", std::to_string(test.size()));
  m.emplace_back("k", std::to_string(cfg.k));
  m.emplace_back("seed", std::to_string(cfg.seed));
  m.emplace_back("fuse_size", std::to_string(cfg.fuse_size));
  m.emplace_back("denoise", cfg.denoise ? "on" : "off");
  if (cfg.denoise && cfg.reference) {
    const auto n = static_cast<double>(records.size());
    m.emplace_back("snr.mean_input_db", format_double(snr_in_sum / n));
    m.emplace_back("snr.mean_output_db", format_double(snr_out_sum / n));
    m.emplace_back("snr.mean_gain_db", format_double((snr_out_sum - snr_in_sum) / n));
  }
  for (auto& kv : report_metrics(result.report)) m.push_back(std::move(kv));

  write_file_atomic(cfg.output_dir / "metrics.txt", format_metrics(m));
  write_file_atomic(cfg.output_dir / "report.txt", format_report(m));
  std::string preds = "id,truth,prediction\n";
  for (std::size_t j = 0; j < result.split.test.size(); ++j) {
    preds += records[result.split.test[j]].id() + "," + truth[j] + "," + result.predictions[j] + "\n";
  }
  write_file_atomic(cfg.output_dir / "predictions.csv", preds);
  if (cfg.write_images) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      export_image(images[i], cfg.output_dir / "images" / (records[i].id() + ".pgm"));
      if (cfg.png) export_image(images[i], cfg.output_dir / "images" / (records[i].id() + ".png"), ImageFormat::png);
    }
  }
  return result;
}

}  // namespace biosig
