#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fmq/averaging.hpp"
#include "fmq/descent.hpp"

// OpenMP batch drivers. Each has a serial reference twin with identical
// output; tests compare the two and the benchmark times them.

namespace fmq {

struct AveragingTrialConfig {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  int max_order = 12;
  std::size_t max_dim = 20;
};

struct AveragingTrial {
  std::size_t index = 0;
  int order = 0;
  std::size_t dim = 0;
  KerImReport report;
};

/// The representation for a trial depends only on (seed, index).
CyclicRep trial_rep(const AveragingTrialConfig& config, std::size_t index);

std::vector<AveragingTrial> run_averaging_trials_serial(const AveragingTrialConfig& config);
std::vector<AveragingTrial> run_averaging_trials(const AveragingTrialConfig& config);

std::vector<GcdCertificate> freeness_batch_serial(const CoverTransfer& t,
                                                  std::span<const ChernCharacter> classes);
std::vector<GcdCertificate> freeness_batch(const CoverTransfer& t,
                                           std::span<const ChernCharacter> classes);

}  // namespace fmq
