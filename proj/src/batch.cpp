#include "fmq/batch.hpp"

#include <exception>
#include <random>

namespace fmq {

namespace {

// Runs body(i) for i < count on the OpenMP team; the first exception thrown
// by any iteration is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(count); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(fmq_batch_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

AveragingTrial run_trial(const AveragingTrialConfig& config, std::size_t index) {
  const CyclicRep rep = trial_rep(config, index);
  return {index, rep.order(), rep.dim(), verify_ker_im(rep)};
}

}  // namespace

CyclicRep trial_rep(const AveragingTrialConfig& config, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  return random_cyclic_rep(rng, config.max_order, config.max_dim);
}

std::vector<AveragingTrial> run_averaging_trials_serial(const AveragingTrialConfig& config) {
  std::vector<AveragingTrial> out;
  out.reserve(config.trials);
  for (std::size_t i = 0; i < config.trials; ++i) out.push_back(run_trial(config, i));
  return out;
}

std::vector<AveragingTrial> run_averaging_trials(const AveragingTrialConfig& config) {
  std::vector<AveragingTrial> out(config.trials);
  parallel_for(config.trials, [&](std::size_t i) { out[i] = run_trial(config, i); });
  return out;
}

std::vector<GcdCertificate> freeness_batch_serial(const CoverTransfer& t,
                                                  std::span<const ChernCharacter> classes) {
  std::vector<GcdCertificate> out;
  out.reserve(classes.size());
  for (const ChernCharacter& e : classes) out.push_back(freeness_gcd(t, e));
  return out;
}

std::vector<GcdCertificate> freeness_batch(const CoverTransfer& t,
                                           std::span<const ChernCharacter> classes) {
  std::vector<GcdCertificate> out(classes.size());
  parallel_for(classes.size(), [&](std::size_t i) { out[i] = freeness_gcd(t, classes[i]); });
  return out;
}

}  // namespace fmq
