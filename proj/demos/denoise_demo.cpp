// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

// Compares threshold rules on a noisy chirp and runs a small grid search.

#include <iomanip>
#include <iostream>

#include "biosig/biosig.hpp"

int main() {
  using namespace biosig;
  Rng rng(7);
  const auto clean = linear_chirp(2048, 512.0, 2.0, 40.0);
  const auto noisy = add_white_noise(clean, 5.0, rng);
  std::cout << std::fixed << std::setprecision(2) << "input SNR " << snr(clean, noisy) << " dB\n";

  std::vector<DenoiseParams> space;
  for (auto rule : {ThresholdRule::sqtwolog, ThresholdRule::rigrsure, ThresholdRule::heursure, ThresholdRule::minimax}) {
    for (auto fn : {ThresholdFn::soft, ThresholdFn::hard}) {
      DenoiseParams p;
      p.rule = rule;
      p.threshold_fn = fn;
      space.push_back(p);
      std::cout << std::setw(9) << to_string(rule) << " " << std::setw(4) << to_string(fn) << "  output SNR "
                << snr(clean, denoise(noisy, p)) << " dB\n";
    }
  }
  const auto best = grid_search_params(clean, noisy, space);
  std::cout << "best: " << to_string(best.best.rule) << "/" << to_string(best.best.threshold_fn) << " (mse "
            << std::setprecision(6) << best.mse << ")\n";
}
