// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

// Detects R-peaks on a synthetic ECG and prints the QRS CSV.

#include <iostream>

#include "biosig/biosig.hpp"

int main() {
  using namespace biosig;
  Rng rng(3);
  EcgOptions o;
  o.bpm = 80.0;
  o.duration_s = 10.0;
  o.rr_jitter = 0.04;
  const auto ecg = synthetic_ecg(o, rng);
  const auto res = detect_qrs(Signal(ecg.noisy, o.fs, "demo"));
  std::cout << qrs_to_csv(res);
  std::cerr << res.peaks.size() << " beats detected (" << ecg.r_peaks.size() << " generated), heart rate "
            << res.heart_rate_bpm << " bpm\n";
}
