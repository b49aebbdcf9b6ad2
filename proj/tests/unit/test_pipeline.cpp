// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

#include "test_support.hpp"

#include <sys/wait.h>

using namespace biosig;
using biosig::test::error_code_of;
namespace fs = std::filesystem;

namespace {

// Writes a small noisy/clean two-class corpus and returns its directory.
fs::path write_corpus(const std::string& name, std::size_t per_class = 12) {
  const auto dir = test::scratch_dir(name);
  Rng rng(99);
  SineChirpOptions o;
  o.per_class = per_class;
  o.length = 128;
  const auto set = sine_chirp_dataset(o, rng);
  write_file_atomic(dir / "records.csv", format_csv(set.noisy));
  write_file_atomic(dir / "clean.csv", format_csv(set.clean));
  return dir;
}

int run_cli(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string(BIOSIG_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string metric(const Metrics& m, const std::string& key) {
  for (const auto& [k, v] : m) {
    if (k == key) return v;
  }
  FAIL("missing metric " << key);
  return {};
}

}  // namespace

TEST_CASE("config parsing", "[pipeline][config]") {
  const auto cfg = parse_config(
      "# comment\n"
      "input = data.csv  # trailing comment\n"
      "fs=250\n"
      "denoise = true\n"
      "wavelet = sym4\n"
      "rule = rigrsure\n"
      "gaf = gadf\n"
      "rp_eps = 0.25\n"
      "k = 5\n"
      "train_fraction = 0.6\n"
      "seed = 7\n");
  CHECK(cfg.input == "data.csv");
  CHECK(*cfg.fs == 250.0);
  CHECK(cfg.denoise);
  CHECK(cfg.denoise_params.wavelet == "sym4");
  CHECK(cfg.denoise_params.rule == ThresholdRule::rigrsure);
  CHECK(cfg.gaf == GafKind::gadf);
  CHECK(*cfg.rp_eps == 0.25);
  CHECK(cfg.k == 5);
  CHECK(cfg.train_fraction == 0.6);
  CHECK(cfg.seed == 7);
  CHECK_NOTHROW(validate(cfg));

  CHECK(error_code_of([] { parse_config("colour = blue\n"); }) == ErrorCode::ConfigError);
  CHECK(error_code_of([] { parse_config("k = three\n"); }) == ErrorCode::ConfigError);
  CHECK(error_code_of([] { parse_config("just words\n"); }) == ErrorCode::ConfigError);
  auto bad = cfg;
  bad.train_fraction = 1.0;
  CHECK(error_code_of([&] { validate(bad); }) == ErrorCode::ConfigError);
  bad = cfg;
  bad.k = 0;
  CHECK(error_code_of([&] { validate(bad); }) == ErrorCode::ConfigError);
  bad = cfg;
  bad.denoise_params.wavelet = "nope";
  CHECK(error_code_of([&] { validate(bad); }) == ErrorCode::ConfigError);
}

TEST_CASE("metrics text round-trips doubles exactly", "[pipeline]") {
  Rng rng(61);
  Metrics m;
  std::vector<double> values;
  for (int i = 0; i < 100; ++i) {
    values.push_back(rng.normal() * std::pow(10.0, rng.uniform(-20, 20)));
    m.emplace_back("v" + std::to_string(i), format_double(values.back()));
  }
  const auto back = parse_metrics(format_metrics(m));
  REQUIRE(back.size() == m.size());
  for (std::size_t i = 0; i < values.size(); ++i) CHECK(*detail::parse_double(back[i].second) == values[i]);
}

TEST_CASE("run_pipeline end to end", "[pipeline]") {
  const auto dir = write_corpus("pipeline");
  PipelineConfig cfg;
  cfg.input = dir / "records.csv";
  cfg.reference = dir / "clean.csv";
  cfg.denoise = true;
  cfg.fuse_size = 16;
  cfg.output_dir = dir / "out";
  cfg.png = true;
  const auto r = run_pipeline(cfg);
  CHECK(r.record_ids.size() == 24);
  CHECK(r.split.test.size() == r.predictions.size());
  CHECK(fs::exists(dir / "out" / "metrics.txt"));
  CHECK(fs::exists(dir / "out" / "report.txt"));
  CHECK(fs::exists(dir / "out" / "predictions.csv"));
  CHECK(fs::exists(dir / "out" / "images" / "records_0000.pgm"));
  CHECK(fs::exists(dir / "out" / "images" / "records_0000.png"));
  const auto img = read_pgm(dir / "out" / "images" / "records_0000.pgm");
  CHECK(img.width == 48);
  CHECK(img.height == 16);

  const auto m = load_metrics(dir / "out" / "metrics.txt");
  CHECK(metric(m, "records") == "24");
  CHECK(std::stod(metric(m, "snr.mean_gain_db")) > 0.0);
  CHECK(std::stod(metric(m, "accuracy")) == r.report.accuracy);
  CHECK(format_report(m).find("accuracy") != std::string::npos);
}

TEST_CASE("run_pipeline is deterministic", "[pipeline]") {
  const auto dir = write_corpus("determinism");
  PipelineConfig cfg;
  cfg.input = dir / "records.csv";
  cfg.seed = 42;
  cfg.fuse_size = 16;
  for (const char* run : {"a", "b"}) {
    cfg.output_dir = dir / run;
    run_pipeline(cfg);
  }
  CHECK(test::slurp(dir / "a" / "metrics.txt") == test::slurp(dir / "b" / "metrics.txt"));
  for (const auto& e : fs::directory_iterator(dir / "a" / "images")) {
    CHECK(test::slurp(e.path()) == test::slurp(dir / "b" / "images" / e.path().filename()));
  }
}

TEST_CASE("run_pipeline errors carry context", "[pipeline]") {
  PipelineConfig cfg;
  cfg.input = "/no/such/dir/records.csv";
  try {
    run_pipeline(cfg);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingFile);
    CHECK(std::string(e.what()).find("/no/such/dir/records.csv") != std::string::npos);
  }
  const auto dir = test::scratch_dir("ctx");
  write_file_atomic(dir / "r.csv", std::string("# fs=10\n1,2,3,4,5,6,7,8,9,a\n2,2,2,2,2,2,2,2,2,b\n"));
  cfg.input = dir / "r.csv";
  cfg.output_dir = dir / "out";
  try {
    run_pipeline(cfg);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateRange);
    CHECK(std::string(e.what()).starts_with("DegenerateRange: record r_0001: "));
    CHECK(e.message().find("DegenerateRange") == std::string::npos);
  }
}

TEST_CASE("CLI exit codes and outputs", "[cli]") {
  const auto dir = write_corpus("cli");
  const auto log = dir / "log.txt";
  const std::string in = (dir / "records.csv").string();

  CHECK(run_cli("denoise -i " + in + " -o " + (dir / "den.csv").string() + " --reference " +
                    (dir / "clean.csv").string() + " --label-column label",
                log) == 0);
  CsvOptions lo;
  lo.label_column = "label";
  CHECK(load_csv(dir / "den.csv", lo).size() == 24);
  CHECK(test::slurp(log).find("snr_out_db=") != std::string::npos);

  CHECK(run_cli("encode -i " + in + " --label-column label --fuse-size 8 -o " + (dir / "img").string(), log) == 0);
  CHECK(read_pgm(dir / "img" / "records_0000.pgm").width == 24);
  CHECK(run_cli("encode -i " + in + " --label-column label --kind spectrogram --window-length 32 --hop 8 -o " +
                    (dir / "spec").string(),
                log) == 0);

  const std::string cfg_path = (dir / "c.cfg").string();
  write_file_atomic(cfg_path, "input = " + in + "\nfuse_size = 8\noutput_dir = " + (dir / "run").string() + "\n");
  CHECK(run_cli("classify -c " + cfg_path + " --k 1", log) == 0);
  CHECK(test::slurp(dir / "run" / "metrics.txt").find("k=1\n") != std::string::npos);
  CHECK(run_cli("report " + (dir / "run").string(), log) == 0);
  CHECK(test::slurp(log).find("macro F1") != std::string::npos);

  CHECK(run_cli("inspect -i " + in + " --label-column label --wavelet db2 --level 2 -o " + (dir / "d.json").string(),
                log) == 0);
  const auto d = decomposition_from_json(nlohmann::json::parse(test::slurp(dir / "d.json")));
  CHECK(d.levels == 2);
  CHECK(run_cli("inspect -i " + (dir / "d.json").string(), log) == 0);
  CHECK(test::slurp(log).find("orig_len=128") != std::string::npos);

  // QRS on a synthetic ECG.
  Rng rng(5);
  EcgOptions eo;
  eo.duration_s = 10.0;
  const auto ecg = synthetic_ecg(eo, rng);
  write_file_atomic(dir / "ecg.csv", format_csv(std::vector<Signal>{Signal(ecg.noisy, eo.fs, "e")}));
  CHECK(run_cli("detect-qrs -i " + (dir / "ecg.csv").string() + " -o " + (dir / "qrs").string(), log) == 0);
  CHECK(test::slurp(dir / "qrs" / "ecg_0000.qrs.csv").rfind("peak_index,time_s,rr_s\n", 0) == 0);

  // Config errors -> 2.
  CHECK(run_cli("classify --colour blue", log) == 2);
  write_file_atomic(dir / "bad.cfg", std::string("input = x.csv\nunknown_key = 1\n"));
  CHECK(run_cli("classify -c " + (dir / "bad.cfg").string(), log) == 2);
  CHECK(run_cli("denoise -i " + in + " -o x.csv --wavelet nope", log) == 2);
  CHECK(run_cli("classify --input " + in + " --train-fraction 1.5", log) == 2);
  CHECK(run_cli("frobnicate", log) == 2);

  // Data errors -> 3, naming the missing path.
  CHECK(run_cli("detect-qrs -i " + (dir / "missing.csv").string(), log) == 3);
  CHECK(test::slurp(log).find((dir / "missing.csv").string()) != std::string::npos);
  write_file_atomic(dir / "nonnum.csv", std::string("# fs=100\n1,2,x\n"));
  CHECK(run_cli("denoise -i " + (dir / "nonnum.csv").string() + " -o " + (dir / "y.csv").string(), log) == 3);
  CHECK(test::slurp(log).find("NonNumericCell: row 2, col 3") != std::string::npos);
}
