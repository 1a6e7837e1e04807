#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dualdec/channel.hpp"
#include "dualdec/code_spec.hpp"
#include "dualdec/dual_checks.hpp"
#include "dualdec/hard_decoder.hpp"
#include "dualdec/soft_decoder.hpp"

namespace dualdec {

struct DecoderConfig {
    enum class Strategy {
        IterReduce,
        InfoSet,
        NbMax,
        NbZeroRow,
        NbCombined,
        SoftFlip,
        SoftInfoSet,
    };
    Strategy strategy = Strategy::IterReduce;
    HardDecodeOptions hard;
    SoftDecodeOptions soft;

    bool wants_soft_channel() const {
        return strategy == Strategy::SoftFlip || strategy == Strategy::SoftInfoSet;
    }
};

std::string strategy_name(DecoderConfig::Strategy s);
DecoderConfig::Strategy strategy_from_name(const std::string& name);

struct WerRow {
    double param = 0.0; // p for BSC/QSC, Eb/N0 in dB for AWGN
    long long trials = 0;
    long long word_errors = 0;
    long long miscorrections = 0; // wrong valid codeword (subset of word_errors)
    double wer = 0.0;
    WilsonInterval ci;
};

// Run per-trial indices 0..trials-1 across a thread pool. The callback must
// derive all randomness from the trial index so results are independent of
// the thread count.
void parallel_trials(long long trials, int threads, const std::function<void(long long)>& fn);

// Monte-Carlo word error rate over a channel parameter grid. Counts both
// decoding failures and miscorrections as word errors; deterministic for a
// fixed seed regardless of the thread count.
std::vector<WerRow> wer_curve(const CodeSpec& spec, const DualCheckSet& checks,
                              const DecoderConfig& config, ChannelParams::Kind kind,
                              const std::vector<double>& grid, long long trials,
                              std::uint64_t seed, int threads);

// Fraction of random weight-tau errors decoded back to the transmitted
// codeword.
double tau_conditional_success(const CodeSpec& spec, const DualCheckSet& checks,
                               const DecoderConfig& config, int tau, long long trials,
                               std::uint64_t seed, int threads = 1);

// Fraction of random weight-tau errors whose tau largest counting-measure
// values sit exactly on the error positions (strictly above every non-error
// position).
double phi_ranking_success(const CodeSpec& spec, const DualCheckSet& checks, int tau,
                           long long trials, std::uint64_t seed, int threads = 1);

struct PhiAverages {
    double av_omega = 0.0;   // mean syndrome weight per check
    double av_phi_err = 0.0; // mean counting measure at error positions
    double av_phi_ok = 0.0;  // ... at non-error positions
    double av_phi_max = 0.0; // mean maximum over all positions
};

PhiAverages measure_phi_averages(const CodeSpec& spec, const DualCheckSet& checks, int tau,
                                 long long trials, std::uint64_t seed, int threads = 1);

// Binomial mixture of per-weight success rates into a word error rate;
// weights beyond the measured range count as never corrected.
double wer_from_conditional(int n, const std::vector<double>& success_by_tau, double p);

} // namespace dualdec
