// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

// Acceptance suite: one PASS/FAIL line per criterion. Usage:
//   biosig_acceptance [work_dir]

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "biosig/biosig.hpp"

namespace fs = std::filesystem;
using namespace biosig;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // 0 = none
  std::function<Outcome()> run;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

// Smallest length that admits `levels` levels for a filter of length nw.
std::size_t min_length_for(std::size_t nw, int levels) {
  std::size_t n = 1;
  while (max_level(n, nw) < levels) ++n;
  return n;
}

Outcome ac1_perfect_reconstruction() {
  Rng rng(20260101);
  double worst = 0.0;
  std::size_t count = 0;
  for (const char* name : {"haar", "db4", "db6", "db8", "sym4"}) {
    const auto w = get_wavelet(name);
    const std::size_t lo = std::max<std::size_t>(64, min_length_for(w.nw(), 3));
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = lo + rng.below(4096 - lo + 1);
      std::vector<double> x(n);
      for (auto& v : x) v = rng.normal();
      const auto y = waverec(wavedec(x, w, 3));
      for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(y[i] - x[i]));
      ++count;
    }
  }
  return {worst < 1e-8, std::to_string(count) + " signals, max |error| = " + fmt(worst)};
}

Outcome ac2_filter_bank() {
  double worst_sum = 0.0, worst_energy = 0.0, worst_qmf = 0.0, worst_orth = 0.0;
  const auto names = wavelet_names();
  for (const auto& name : names) {
    const auto w = get_wavelet(name);
    const std::size_t nw = w.nw();
    double sum = 0.0, energy = 0.0;
    for (double h : w.dec_lo) {
      sum += h;
      energy += h * h;
    }
    worst_sum = std::max(worst_sum, std::abs(sum - std::numbers::sqrt2));
    worst_energy = std::max(worst_energy, std::abs(energy - 1.0));
    for (std::size_t n = 0; n < nw; ++n) {
      const double sign = (n % 2 == 0) ? -1.0 : 1.0;
      worst_qmf = std::max(worst_qmf, std::abs(w.dec_hi[n] - sign * w.dec_lo[nw - 1 - n]));
      worst_qmf = std::max(worst_qmf, std::abs(w.rec_lo[n] - w.dec_lo[nw - 1 - n]));
      worst_qmf = std::max(worst_qmf, std::abs(w.rec_hi[n] - w.dec_hi[nw - 1 - n]));
    }
    for (std::size_t k = 1; 2 * k < nw; ++k) {
      double acc = 0.0, cross = 0.0;
      for (std::size_t n = 0; n + 2 * k < nw; ++n) acc += w.dec_lo[n] * w.dec_lo[n + 2 * k];
      for (std::size_t n = 0; n < nw; ++n) {
        if (n + 2 * k < nw) cross += w.dec_lo[n] * w.dec_hi[n + 2 * k];
      }
      worst_orth = std::max({worst_orth, std::abs(acc), std::abs(cross)});
    }
  }
  const bool ok = worst_sum < 1e-10 && worst_energy < 1e-10 && worst_qmf < 1e-14 && worst_orth < 1e-10;
  return {ok, std::to_string(names.size()) + " wavelets, |sum - sqrt2| <= " + fmt(worst_sum) +
                  ", |energy - 1| <= " + fmt(worst_energy) + ", qmf <= " + fmt(worst_qmf) +
                  ", shifted orthogonality <= " + fmt(worst_orth)};
}

Outcome ac3_max_level() {
  const int a = max_level(1024, 16);
  const int b = max_level(256, 8);
  return {a == 6 && b == 5, "max_level(1024,16)=" + std::to_string(a) + ", max_level(256,8)=" + std::to_string(b)};
}

Outcome ac4_denoising_gain() {
  Rng rng(404);
  const double fs = 256.0;
  const std::size_t n = 1024;
  DenoiseParams p;
  p.wavelet = "db6";
  p.threshold_fn = ThresholdFn::soft;
  p.level = 3;
  p.rule = ThresholdRule::sqtwolog;
  p.rescale = Rescale::sln;
  double in_sum = 0.0, out_sum = 0.0;
  const int records = 20;
  for (int r = 0; r < records; ++r) {
    std::vector<double> clean;
    switch (r % 3) {
      case 0: clean = sine_wave(n, fs, rng.uniform(2.0, 10.0), 1.0, rng.uniform(0.0, 6.28)); break;
      case 1: clean = linear_chirp(n, fs, rng.uniform(1.0, 3.0), rng.uniform(12.0, 20.0)); break;
      default: clean = pulse_train(n, fs, rng.uniform(1.0, 2.0), 0.02); break;
    }
    const auto noisy = add_white_noise(clean, 5.0, rng);
    in_sum += snr(clean, noisy);
    out_sum += snr(clean, denoise(noisy, p));
  }
  const double in_mean = in_sum / records, out_mean = out_sum / records;
  return {out_mean >= in_mean + 3.0,
          "mean input SNR " + fmt(in_mean) + " dB, mean output SNR " + fmt(out_mean) + " dB, gain " +
              fmt(out_mean - in_mean) + " dB"};
}

// Independent type-7 quantile binning and transition counting.
Matrix<double> mtf_oracle(const std::vector<double>& x, std::size_t q) {
  std::vector<double> s = x;
  std::sort(s.begin(), s.end());
  std::vector<double> edges;
  for (std::size_t k = 1; k < q; ++k) {
    const double h = static_cast<double>(s.size() - 1) * static_cast<double>(k) / static_cast<double>(q);
    const auto fl = static_cast<std::size_t>(h);
    const double upper = fl + 1 < s.size() ? s[fl + 1] : s[fl];
    edges.push_back(s[fl] + (h - static_cast<double>(fl)) * (upper - s[fl]));
  }
  std::vector<std::size_t> bin(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t b = 0;
    for (double e : edges) {
      if (e < x[i]) ++b;
    }
    bin[i] = b;
  }
  Matrix<double> m(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double from = 0.0;
    for (std::size_t t = 0; t + 1 < x.size(); ++t) {
      if (bin[t] == bin[i]) from += 1.0;
    }
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (from == 0.0) {
        m(i, j) = 1.0 / static_cast<double>(q);
        continue;
      }
      double count = 0.0;
      for (std::size_t t = 0; t + 1 < x.size(); ++t) {
        if (bin[t] == bin[i] && bin[t + 1] == bin[j]) count += 1.0;
      }
      m(i, j) = count / from;
    }
  }
  return m;
}

Outcome ac5_encoder_invariants() {
  Rng rng(55);
  double gasf_err = 0.0, gasf_sym = 0.0, gadf_err = 0.0, rp_err = 0.0, row_err = 0.0;
  std::size_t triangle_violations = 0, mtf_mismatch = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 8 + rng.below(249);
    std::vector<double> raw(n);
    for (auto& v : raw) v = rng.normal();
    const auto x = normalize_minmax(raw, NormalRange::neg_one_one);

    const auto gs = gaf(x, GafKind::gasf).values;
    const auto gd = gaf(x, GafKind::gadf).values;
    const auto rp = recurrence_plot(x).values;
    for (std::size_t i = 0; i < n; ++i) {
      const double si = std::sqrt(std::max(0.0, 1.0 - x[i] * x[i]));
      gadf_err = std::max(gadf_err, std::abs(gd(i, i)));
      rp_err = std::max(rp_err, std::abs(rp(i, i)));
      for (std::size_t j = 0; j < n; ++j) {
        const double sj = std::sqrt(std::max(0.0, 1.0 - x[j] * x[j]));
        gasf_err = std::max(gasf_err, std::abs(gs(i, j) - (x[i] * x[j] - si * sj)));
        gasf_sym = std::max(gasf_sym, std::abs(gs(i, j) - gs(j, i)));
        gadf_err = std::max(gadf_err, std::abs(gd(i, j) + gd(j, i)));
        rp_err = std::max(rp_err, std::abs(rp(i, j) - rp(j, i)));
      }
    }
    // Triangle inequality: exhaustive for small series, sampled otherwise.
    auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
      if (rp(i, k) > rp(i, j) + rp(j, k) + 1e-12) ++triangle_violations;
    };
    if (n <= 48) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) check(i, j, k);
    } else {
      for (int s = 0; s < 20000; ++s) check(rng.below(n), rng.below(n), rng.below(n));
    }

    const std::size_t q = 2 + rng.below(9);
    const auto field = markov_transition_field(x, q);
    for (std::size_t a = 0; a < q; ++a) {
      double sum = 0.0;
      for (double v : field.transitions.row(a)) sum += v;
      row_err = std::max(row_err, std::abs(sum - 1.0));
    }
    const auto oracle = mtf_oracle(x, q);
    if (!(oracle == field.image.values)) ++mtf_mismatch;
  }
  const bool ok = gasf_err < 1e-10 && gasf_sym == 0.0 && gadf_err < 1e-12 && rp_err == 0.0 &&
                  triangle_violations == 0 && row_err < 1e-12 && mtf_mismatch == 0;
  return {ok, "gasf form gap " + fmt(gasf_err) + ", gadf antisymmetry " + fmt(gadf_err) + ", triangle violations " +
                  std::to_string(triangle_violations) + ", mtf row-sum gap " + fmt(row_err) +
                  ", mtf oracle mismatches " + std::to_string(mtf_mismatch)};
}

Outcome ac6_mtf_small() {
  const std::vector<double> up{1, 2, 3, 4}, down{4, 3, 2, 1};
  const auto wu = markov_transition_field(up, 2).transitions;
  const auto wd = markov_transition_field(down, 2).transitions;
  Matrix<double> eu(2, 2), ed(2, 2);
  eu(0, 0) = 0.5; eu(0, 1) = 0.5; eu(1, 0) = 0.0; eu(1, 1) = 1.0;
  ed(0, 0) = 1.0; ed(0, 1) = 0.0; ed(1, 0) = 0.5; ed(1, 1) = 0.5;
  auto show = [](const Matrix<double>& m) {
    return "[[" + fmt(m(0, 0)) + "," + fmt(m(0, 1)) + "],[" + fmt(m(1, 0)) + "," + fmt(m(1, 1)) + "]]";
  };
  return {wu == eu && wd == ed, "W(1,2,3,4) = " + show(wu) + ", W(4,3,2,1) = " + show(wd)};
}

Outcome ac7_pan_tompkins() {
  Rng rng(7777);
  std::size_t truth = 0, tp = 0, detected = 0, refractory_violations = 0;
  for (int r = 0; r < 50; ++r) {
    EcgOptions o;
    o.fs = 360.0;
    o.duration_s = 30.0;
    o.bpm = rng.uniform(60.0, 120.0);
    o.snr_db = 10.0;
    o.rr_jitter = 0.03;
    const auto ecg = synthetic_ecg(o, rng);
    const auto res = detect_qrs(Signal(ecg.noisy, o.fs, "ecg"));
    const auto tol = static_cast<std::size_t>(std::llround(0.050 * o.fs));
    const auto refr = refractory_samples(o.fs);
    for (std::size_t k = 1; k < res.peaks.size(); ++k) {
      if (res.peaks[k] - res.peaks[k - 1] < refr) ++refractory_violations;
    }
    // Greedy one-to-one matching in time order.
    std::size_t j = 0;
    for (auto p : ecg.r_peaks) {
      while (j < res.peaks.size() && res.peaks[j] + tol < p) ++j;
      if (j < res.peaks.size() && res.peaks[j] <= p + tol) {
        ++tp;
        ++j;
      }
    }
    truth += ecg.r_peaks.size();
    detected += res.peaks.size();
  }
  const double se = static_cast<double>(tp) / static_cast<double>(truth);
  const double ppv = detected ? static_cast<double>(tp) / static_cast<double>(detected) : 0.0;
  return {se >= 0.95 && ppv >= 0.95 && refractory_violations == 0,
          "Se " + fmt(se) + ", PPV " + fmt(ppv) + " (" + std::to_string(tp) + "/" + std::to_string(truth) +
              " beats), refractory violations " + std::to_string(refractory_violations)};
}

Outcome ac8_changepoints() {
  Rng rng(88);
  const std::size_t n = 2048;
  int hits = 0, quiet = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = rng.normal() * (i < n / 2 ? 1.0 : 5.0);
      y[i] = rng.normal();
    }
    const auto cx = variance_changepoints(x, 1);
    if (cx.size() == 1 && std::abs(static_cast<double>(cx[0]) - n / 2.0) <= 0.05 * n) ++hits;
    if (variance_changepoints(y, 1).empty()) ++quiet;
  }
  return {hits >= 95 && quiet >= 95,
          "switch detected in " + std::to_string(hits) + "/100, constant variance quiet in " + std::to_string(quiet) +
              "/100"};
}

Outcome ac9_classification() {
  Rng rng(42);
  SineChirpOptions o;
  o.per_class = 100;
  const auto set = sine_chirp_dataset(o, rng);
  PipelineConfig cfg;
  std::vector<std::string> labels;
  std::vector<FusedImage> images;
  for (const auto& rec : set.noisy) {
    labels.push_back(*rec.label());
    images.push_back(encode_fused(normalize_minmax(rec.samples(), NormalRange::neg_one_one), cfg));
  }
  const auto split = stratified_split(labels, cfg.train_fraction, cfg.seed);
  std::vector<LabeledImage> train_img;
  std::vector<LabeledFeatures> train_raw;
  for (auto i : split.train) {
    train_img.push_back({images[i], labels[i]});
    const auto s = set.noisy[i].samples();
    train_raw.push_back({std::vector<double>(s.begin(), s.end()), labels[i]});
  }
  std::vector<FusedImage> test_img;
  std::vector<std::vector<double>> test_raw;
  std::vector<std::string> truth;
  for (auto i : split.test) {
    test_img.push_back(images[i]);
    const auto s = set.noisy[i].samples();
    test_raw.push_back(std::vector<double>(s.begin(), s.end()));
    truth.push_back(labels[i]);
  }
  const double acc = evaluate(truth, knn_classify(train_img, test_img, 3)).accuracy;
  const double base = evaluate(truth, knn_classify(train_raw, test_raw, 3)).accuracy;
  return {acc >= 0.90 && acc >= base, "fused-image accuracy " + fmt(acc) + ", raw-sample baseline " + fmt(base) +
                                          " (" + std::to_string(truth.size()) + " test records)"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome ac10_determinism(const fs::path& work) {
  fs::create_directories(work);
  Rng rng(10);
  SineChirpOptions o;
  o.per_class = 20;
  const auto set = sine_chirp_dataset(o, rng);
  write_file_atomic(work / "records.csv", format_csv(set.noisy));
  write_file_atomic(work / "reference.csv", format_csv(set.clean));

  PipelineConfig cfg;
  cfg.input = work / "records.csv";
  cfg.reference = work / "reference.csv";
  cfg.denoise = true;
  cfg.seed = 42;
  std::vector<fs::path> runs{work / "run_a", work / "run_b"};
  for (const auto& dir : runs) {
    fs::remove_all(dir);
    cfg.output_dir = dir;
    run_pipeline(cfg);
  }
  std::size_t compared = 0, differing = 0;
  auto compare = [&](const fs::path& rel) {
    ++compared;
    if (!fs::exists(runs[0] / rel) || slurp(runs[0] / rel) != slurp(runs[1] / rel)) ++differing;
  };
  compare("metrics.txt");
  for (const auto& e : fs::directory_iterator(runs[0] / "images")) compare(fs::path("images") / e.path().filename());
  std::size_t images_b = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(runs[1] / "images")) ++images_b;
  const bool ok = differing == 0 && compared == 1 + set.noisy.size() && images_b == set.noisy.size();
  return {ok, std::to_string(compared) + " files compared, " + std::to_string(differing) + " differ"};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "biosig_acceptance";
  const std::vector<Criterion> criteria = {
      {"AC1", "perfect reconstruction", 10.0, ac1_perfect_reconstruction},
      {"AC2", "filter-bank invariants", 0.0, ac2_filter_bank},
      {"AC3", "max_level closed form", 0.0, ac3_max_level},
      {"AC4", "denoising gain", 30.0, ac4_denoising_gain},
      {"AC5", "encoder invariants", 0.0, ac5_encoder_invariants},
      {"AC6", "MTF small-instance oracle", 0.0, ac6_mtf_small},
      {"AC7", "Pan-Tompkins detection", 60.0, ac7_pan_tompkins},
      {"AC8", "variance changepoints", 0.0, ac8_changepoints},
      {"AC9", "desk-scale classification", 120.0, ac9_classification},
      {"AC10", "determinism", 0.0, [&] { return ac10_determinism(work); }},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0.0 && secs > c.time_limit_s) {
      out.pass = false;
      out.detail += "; exceeded " + fmt(c.time_limit_s) + " s";
    }
    if (!out.pass) ++failures;
    std::cout << c.id << " " << (out.pass ? "PASS" : "FAIL") << "  " << c.title << ": " << out.detail << " ["
              << fmt(secs) << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
