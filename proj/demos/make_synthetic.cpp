// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

// Writes the synthetic corpora used throughout the README:
//   sine_chirp.csv / sine_chirp_clean.csv  labelled two-class set
//   ecg.csv                                 one noisy synthetic ECG at 360 Hz
//   pipeline.cfg                            config for `biosig classify`

#include <filesystem>
#include <iostream>

#include "biosig/biosig.hpp"

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  using namespace biosig;
  const fs::path out = argc > 1 ? argv[1] : "synthetic";
  fs::create_directories(out);

  Rng rng(42);
  const auto set = sine_chirp_dataset({}, rng);
  write_file_atomic(out / "sine_chirp.csv", format_csv(set.noisy));
  write_file_atomic(out / "sine_chirp_clean.csv", format_csv(set.clean));

  EcgOptions ecg_opts;
  ecg_opts.rr_jitter = 0.03;
  const auto ecg = synthetic_ecg(ecg_opts, rng);
  const std::vector<Signal> ecg_rec{Signal(ecg.noisy, ecg_opts.fs, "ecg")};
  write_file_atomic(out / "ecg.csv", format_csv(ecg_rec));

  const std::string cfg = "# biosig classify config\n"
                          "input = " + (out / "sine_chirp.csv").string() + "\n"
                          "reference = " + (out / "sine_chirp_clean.csv").string() + "\n"
                          "denoise = true\n"
                          "wavelet = db6\n"
                          "level = 3\n"
                          "k = 3\n"
                          "seed = 42\n"
                          "output_dir = " + (out / "run").string() + "\n";
  write_file_atomic(out / "pipeline.cfg", cfg);
  std::cout << "wrote " << set.noisy.size() << " labelled records and one ECG to " << out.string() << "\n";
}
