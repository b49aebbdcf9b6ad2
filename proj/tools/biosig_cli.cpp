// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

// biosig: batch front end over the header-only library.
//
// Exit codes: 0 success, 2 configuration error, 3 data error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biosig/biosig.hpp"

namespace fs = std::filesystem;
using namespace biosig;

namespace {

constexpr int k_exit_ok = 0;
constexpr int k_exit_config = 2;
constexpr int k_exit_data = 3;

struct InputOptions {
  fs::path input;
  std::optional<double> fs;
  std::optional<std::string> label_column;
};

void add_input_options(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("--input,-i", in.input, "CSV file, one record per row")->required();
  cmd.add_option("--fs", in.fs, "sampling rate in Hz; overrides a '# fs=' header");
  cmd.add_option("--label-column", in.label_column, "label column name (header) or last column");
}

std::vector<Signal> load_records(const InputOptions& in) {
  CsvOptions opts;
  opts.fs = in.fs;
  opts.label_column = in.label_column;
  auto records = load_csv(in.input, opts);
  detail::require(!records.empty(), ErrorCode::EmptyInput, "input '" + in.input.string() + "' has no records");
  return records;
}

struct DenoiseOptions {
  std::string wavelet = "db6";
  int level = 3;
  std::string threshold_fn = "soft";
  std::string rule = "sqtwolog";
  std::string rescale = "sln";
};

void add_denoise_options(CLI::App& cmd, DenoiseOptions& d) {
  cmd.add_option("--wavelet", d.wavelet, "wavelet name")->capture_default_str();
  cmd.add_option("--level", d.level, "decomposition depth")->capture_default_str();
  cmd.add_option("--threshold-fn", d.threshold_fn, "soft | hard")->capture_default_str();
  cmd.add_option("--rule", d.rule, "rigrsure | sqtwolog | heursure | minimax")->capture_default_str();
  cmd.add_option("--rescale", d.rescale, "one | sln | mln")->capture_default_str();
}

DenoiseParams to_params(const DenoiseOptions& d) {
  DenoiseParams p;
  try {
    p.wavelet = get_wavelet(d.wavelet).name;
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, e.message());
  }
  if (d.level < 1) throw Error(ErrorCode::ConfigError, "level must be >= 1");
  p.level = d.level;
  p.threshold_fn = parse_threshold_fn(d.threshold_fn);
  p.rule = parse_threshold_rule(d.rule);
  p.rescale = parse_rescale(d.rescale);
  return p;
}

// Error codes that stem from user-supplied settings rather than data.
bool is_config_error(ErrorCode c) {
  return c == ErrorCode::ConfigError || c == ErrorCode::UnknownWavelet;
}

// ---------------------------------------------------------------------------

int run_denoise(const InputOptions& in, const DenoiseOptions& dopt, const fs::path& output,
                const std::optional<fs::path>& reference) {
  const auto params = to_params(dopt);
  const auto records = load_records(in);
  std::vector<Signal> refs;
  if (reference) {
    CsvOptions ro;
    ro.fs = in.fs;
    ro.label_column = in.label_column;
    refs = load_csv(*reference, ro);
    detail::require(refs.size() == records.size(), ErrorCode::LengthMismatch,
                    "reference has " + std::to_string(refs.size()) + " records, input has " +
                        std::to_string(records.size()));
  }
  std::vector<Signal> out;
  out.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    try {
      out.push_back(denoise(records[i], params));
      if (reference) {
        const double in_db = snr(refs[i].samples(), records[i].samples());
        const double out_db = snr(refs[i].samples(), out.back().samples());
        std::cout << records[i].id() << " snr_in_db=" << format_double(in_db)
                  << " snr_out_db=" << format_double(out_db) << "\n";
      }
    } catch (const Error& e) {
      throw Error(e.code(), "record " + records[i].id() + ": " + e.message());
    }
  }
  write_file_atomic(output, format_csv(out));
  std::cerr << "denoised " << out.size() << " record(s) -> " << output.string() << "\n";
  return k_exit_ok;
}

struct EncodeOptions {
  std::string kind = "fused";
  std::string gaf = "gasf";
  std::optional<double> rp_eps;
  std::size_t mtf_bins = 8;
  std::size_t fuse_size = 32;
  std::size_t window_length = 64;
  std::size_t hop = 16;
  std::size_t scales = 32;
  bool png = false;
  fs::path output_dir = "biosig_images";
};

int run_encode(const InputOptions& in, const EncodeOptions& e) {
  PipelineConfig cfg;
  cfg.input = in.input;
  set_config_value(cfg, "gaf", e.gaf);
  cfg.rp_eps = e.rp_eps;
  cfg.mtf_bins = e.mtf_bins;
  cfg.fuse_size = e.fuse_size;
  validate(cfg);
  if (e.window_length < 2 || e.hop < 1 || e.scales < 1) {
    throw Error(ErrorCode::ConfigError, "window-length >= 2, hop >= 1 and scales >= 1 are required");
  }
  const auto records = load_records(in);
  const auto format = e.png ? ImageFormat::png : ImageFormat::pgm;
  const std::string ext = e.png ? ".png" : ".pgm";
  for (const auto& rec : records) {
    const auto path = e.output_dir / (rec.id() + ext);
    try {
      if (e.kind == "spectrogram") {
        export_image(spectrogram(stft(rec, {WindowKind::hann, e.window_length, 0.0}, e.hop)), path, format);
        continue;
      }
      if (e.kind == "scalogram") {
        std::vector<double> scales(e.scales);
        for (std::size_t k = 0; k < scales.size(); ++k) scales[k] = static_cast<double>(k + 1);
        export_image(cwt_scalogram(rec, MotherWavelet::morlet, scales), path, format);
        continue;
      }
      const auto x = normalize_minmax(rec.samples(), NormalRange::neg_one_one);
      if (e.kind == "fused") export_image(encode_fused(x, cfg), path, format);
      else if (e.kind == "gaf") export_image(gaf(x, cfg.gaf), path, format);
      else if (e.kind == "rp") export_image(recurrence_plot(x, cfg.rp_eps), path, format);
      else if (e.kind == "mtf") export_image(mtf(x, cfg.mtf_bins), path, format);
      else throw Error(ErrorCode::ConfigError, "unknown image kind '" + e.kind + "'");
    } catch (const Error& err) {
      if (is_config_error(err.code())) throw;
      throw Error(err.code(), "record " + rec.id() + ": " + err.what());
    }
  }
  std::cerr << "encoded " << records.size() << " record(s) -> " << e.output_dir.string() << "\n";
  return k_exit_ok;
}

int run_detect_qrs(const InputOptions& in, const fs::path& output_dir) {
  const auto records = load_records(in);
  fs::create_directories(output_dir);
  for (const auto& rec : records) {
    try {
      const auto r = detect_qrs(rec);
      write_file_atomic(output_dir / (rec.id() + ".qrs.csv"), qrs_to_csv(r));
      std::cout << rec.id() << " beats=" << r.peaks.size() << " heart_rate_bpm=" << format_double(r.heart_rate_bpm)
                << "\n";
    } catch (const Error& e) {
      throw Error(e.code(), "record " + rec.id() + ": " + e.message());
    }
  }
  return k_exit_ok;
}

int run_classify(const std::optional<fs::path>& config_path, const std::map<std::string, std::string>& overrides) {
  PipelineConfig cfg = config_path ? load_config(*config_path) : PipelineConfig{};
  for (const auto& [key, value] : overrides) set_config_value(cfg, key, value);
  const auto result = run_pipeline(cfg);
  std::cout << format_report(result.metrics);
  std::cerr << "artifacts -> " << cfg.output_dir.string() << "\n";
  return k_exit_ok;
}

int run_report(const fs::path& metrics) {
  const auto path = fs::is_directory(metrics) ? metrics / "metrics.txt" : metrics;
  std::cout << format_report(load_metrics(path));
  return k_exit_ok;
}

int run_inspect(const InputOptions& in, const std::string& wavelet, int level, std::size_t record,
                const std::optional<fs::path>& output) {
  std::string text;
  if (in.input.extension() == ".json") {
    std::ifstream f(in.input);
    if (!f) throw Error(ErrorCode::MissingFile, "cannot open input file '" + in.input.string() + "'");
    nlohmann::json j;
    try {
      f >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::InvalidArgument, std::string("malformed JSON: ") + e.what());
    }
    const auto d = decomposition_from_json(j);
    const auto x = waverec(d);
    std::ostringstream s;
    s << "wavelet=" << d.wavelet.name << "\nlevels=" << d.levels << "\norig_len=" << d.orig_len
      << "\napprox_len=" << d.approx.size() << "\n";
    for (int i = 1; i <= d.levels; ++i) s << "detail" << i << "_len=" << d.detail_coeffs(i).size() << "\n";
    s << "reconstructed_len=" << x.size() << "\n";
    text = s.str();
  } else {
    try {
      (void)get_wavelet(wavelet);
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, e.message());
    }
    const auto records = load_records(in);
    detail::require(record < records.size(), ErrorCode::InvalidArgument,
                    "record index " + std::to_string(record) + " out of range (" + std::to_string(records.size()) +
                        " records)");
    const auto& rec = records[record];
    try {
      text = to_json(wavedec(rec, wavelet, level)).dump(2) + "\n";
    } catch (const Error& e) {
      throw Error(e.code(), "record " + rec.id() + ": " + e.message());
    }
  }
  if (output) write_file_atomic(*output, text);
  else std::cout << text;
  return k_exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biosig: wavelet denoising, time-series imaging and QRS detection"};
  app.require_subcommand(1);

  InputOptions in;
  DenoiseOptions dopt;

  auto* denoise_cmd = app.add_subcommand("denoise", "wavelet-denoise every record of a CSV file");
  fs::path denoise_out;
  std::optional<fs::path> reference;
  add_input_options(*denoise_cmd, in);
  add_denoise_options(*denoise_cmd, dopt);
  denoise_cmd->add_option("--output,-o", denoise_out, "output CSV")->required();
  denoise_cmd->add_option("--reference", reference, "clean CSV, row-aligned, for per-record SNR");

  auto* encode_cmd = app.add_subcommand("encode", "render each record as an image");
  EncodeOptions eopt;
  add_input_options(*encode_cmd, in);
  encode_cmd->add_option("--kind", eopt.kind, "fused | gaf | rp | mtf | spectrogram | scalogram")
      ->capture_default_str();
  encode_cmd->add_option("--gaf", eopt.gaf, "gasf | gadf")->capture_default_str();
  encode_cmd->add_option("--rp-eps", eopt.rp_eps, "binarize the recurrence plot at this distance");
  encode_cmd->add_option("--mtf-bins", eopt.mtf_bins, "quantile bins")->capture_default_str();
  encode_cmd->add_option("--fuse-size", eopt.fuse_size, "pooled channel size")->capture_default_str();
  encode_cmd->add_option("--window-length", eopt.window_length, "STFT Hann window")->capture_default_str();
  encode_cmd->add_option("--hop", eopt.hop, "STFT hop")->capture_default_str();
  encode_cmd->add_option("--scales", eopt.scales, "CWT scales 1..N")->capture_default_str();
  encode_cmd->add_flag("--png", eopt.png, "write PNG instead of PGM");
  encode_cmd->add_option("--output-dir,-o", eopt.output_dir, "image directory")->capture_default_str();

  auto* qrs_cmd = app.add_subcommand("detect-qrs", "Pan-Tompkins R-peak detection");
  fs::path qrs_out = "biosig_qrs";
  add_input_options(*qrs_cmd, in);
  qrs_cmd->add_option("--output-dir,-o", qrs_out, "directory for <id>.qrs.csv")->capture_default_str();

  auto* classify_cmd = app.add_subcommand("classify", "run the full encode + k-NN pipeline");
  std::optional<fs::path> config_path;
  std::map<std::string, std::string> overrides;
  classify_cmd->add_option("--config,-c", config_path, "key = value config file");
  const std::vector<std::string> keys = {"input", "reference", "fs", "label_column", "denoise", "wavelet", "level",
                                         "threshold_fn", "rule", "rescale", "gaf", "rp_eps", "mtf_bins",
                                         "fuse_size", "k", "train_fraction", "seed", "output_dir",
                                         "write_images", "png"};
  std::map<std::string, std::string> raw;
  for (const auto& key : keys) {
    std::string flag = "--" + key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    classify_cmd->add_option(flag, raw[key], "config key '" + key + "'");
  }

  auto* report_cmd = app.add_subcommand("report", "print a report from a metrics file or output directory");
  fs::path metrics_path;
  report_cmd->add_option("metrics", metrics_path, "metrics.txt or its directory")->required();

  auto* inspect_cmd = app.add_subcommand("inspect", "dump a DWT decomposition as JSON, or summarize one");
  std::string inspect_wavelet = "db4";
  int inspect_level = 3;
  std::size_t inspect_record = 0;
  std::optional<fs::path> inspect_out;
  add_input_options(*inspect_cmd, in);
  inspect_cmd->add_option("--wavelet", inspect_wavelet, "wavelet name")->capture_default_str();
  inspect_cmd->add_option("--level", inspect_level, "decomposition depth")->capture_default_str();
  inspect_cmd->add_option("--record", inspect_record, "0-based record index")->capture_default_str();
  inspect_cmd->add_option("--output,-o", inspect_out, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return k_exit_config;
  }

  try {
    if (*denoise_cmd) return run_denoise(in, dopt, denoise_out, reference);
    if (*encode_cmd) return run_encode(in, eopt);
    if (*qrs_cmd) return run_detect_qrs(in, qrs_out);
    if (*classify_cmd) {
      for (const auto& key : keys) {
        std::string flag = "--" + key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        if (classify_cmd->count(flag) > 0) overrides[key] = raw[key];
      }
      return run_classify(config_path, overrides);
    }
    if (*report_cmd) return run_report(metrics_path);
    if (*inspect_cmd) return run_inspect(in, inspect_wavelet, inspect_level, inspect_record, inspect_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_config_error(e.code()) ? k_exit_config : k_exit_data;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: IoFailure: " << e.what() << "\n";
    return k_exit_data;
  }
  return k_exit_config;
}
