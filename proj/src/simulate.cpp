#include "dualdec/simulate.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "dualdec/errors.hpp"

namespace dualdec {

namespace {

CyclicPoly random_info_word(const CodeSpec& spec, Rng& rng) {
    const Field& f = *spec.symbol_field;
    CyclicPoly info(f, spec.n);
    const std::uint32_t q = static_cast<std::uint32_t>(f.size());
    for (int i = 0; i < spec.k; ++i)
        info.set_coeff(i, static_cast<gf_elem>(rng.below(q)));
    return info;
}

DecodeReport run_decoder(const DecoderConfig& config, const CodeSpec& spec,
                         const DualCheckSet& checks, const CyclicPoly& r) {
    switch (config.strategy) {
    case DecoderConfig::Strategy::IterReduce:
        return decode_iter_reduce(r, checks, config.hard);
    case DecoderConfig::Strategy::InfoSet:
        return decode_info_set(r, spec, checks, config.hard);
    case DecoderConfig::Strategy::NbMax:
        return decode_nonbinary(r, checks, NonbinaryStrategy::MaxEntry, config.hard.max_rounds);
    case DecoderConfig::Strategy::NbZeroRow:
        return decode_nonbinary(r, checks, NonbinaryStrategy::ZeroRow, config.hard.max_rounds);
    case DecoderConfig::Strategy::NbCombined:
        return decode_nonbinary(r, checks, NonbinaryStrategy::Combined, config.hard.max_rounds);
    default:
        throw ConfigInvalid("decoder strategy needs a soft channel");
    }
}

DecodeReport run_soft_decoder(const DecoderConfig& config, const CodeSpec& spec,
                              const DualCheckSet& checks, const SoftVector& y) {
    if (config.strategy == DecoderConfig::Strategy::SoftFlip)
        return decode_soft_flip(y, spec, checks, config.soft);
    if (config.strategy == DecoderConfig::Strategy::SoftInfoSet)
        return decode_soft_infoset(y, spec, checks, config.soft);
    throw ConfigInvalid("decoder strategy needs a hard channel");
}

} // namespace

std::string strategy_name(DecoderConfig::Strategy s) {
    switch (s) {
    case DecoderConfig::Strategy::IterReduce: return "reduce";
    case DecoderConfig::Strategy::InfoSet: return "infoset";
    case DecoderConfig::Strategy::NbMax: return "nb-max";
    case DecoderConfig::Strategy::NbZeroRow: return "nb-zero";
    case DecoderConfig::Strategy::NbCombined: return "nb-combined";
    case DecoderConfig::Strategy::SoftFlip: return "soft-flip";
    case DecoderConfig::Strategy::SoftInfoSet: return "soft-infoset";
    }
    return "?";
}

DecoderConfig::Strategy strategy_from_name(const std::string& name) {
    if (name == "reduce") return DecoderConfig::Strategy::IterReduce;
    if (name == "infoset") return DecoderConfig::Strategy::InfoSet;
    if (name == "nb-max") return DecoderConfig::Strategy::NbMax;
    if (name == "nb-zero") return DecoderConfig::Strategy::NbZeroRow;
    if (name == "nb-combined") return DecoderConfig::Strategy::NbCombined;
    if (name == "soft-flip") return DecoderConfig::Strategy::SoftFlip;
    if (name == "soft-infoset") return DecoderConfig::Strategy::SoftInfoSet;
    throw ConfigInvalid("unknown decoder strategy: " + name);
}

void parallel_trials(long long trials, int threads, const std::function<void(long long)>& fn) {
    if (threads < 1)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1)
        threads = 1;
    if (threads == 1 || trials < 2 * threads) {
        for (long long t = 0; t < trials; ++t)
            fn(t);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int id = 0; id < threads; ++id) {
        pool.emplace_back([&, id]() {
            for (long long t = id; t < trials; t += threads)
                fn(t);
        });
    }
    for (auto& worker : pool)
        worker.join();
}

std::vector<WerRow> wer_curve(const CodeSpec& spec, const DualCheckSet& checks,
                              const DecoderConfig& config, ChannelParams::Kind kind,
                              const std::vector<double>& grid, long long trials,
                              std::uint64_t seed, int threads) {
    if (trials < 1)
        throw ConfigInvalid("trials must be positive");
    const bool soft = config.wants_soft_channel();
    if (soft && kind != ChannelParams::Kind::AWGN)
        throw ConfigInvalid("soft decoding requires the AWGN channel");
    if (!soft && kind == ChannelParams::Kind::AWGN)
        throw ConfigInvalid("hard decoding on AWGN is not configured here");
    const double rate = static_cast<double>(spec.k) / spec.n;

    std::vector<WerRow> rows;
    rows.reserve(grid.size());
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        ChannelParams params;
        switch (kind) {
        case ChannelParams::Kind::BSC: params = ChannelParams::bsc(grid[gi]); break;
        case ChannelParams::Kind::QSC: params = ChannelParams::qsc(grid[gi]); break;
        case ChannelParams::Kind::AWGN: params = ChannelParams::awgn(grid[gi], rate); break;
        }
        const double sigma = params.sigma();

        std::atomic<long long> word_errors{0};
        std::atomic<long long> miscorrections{0};
        parallel_trials(trials, threads, [&](long long trial) {
            Rng rng = Rng::for_trial(seed, 0x77657200ull + gi, static_cast<std::uint64_t>(trial));
            CyclicPoly c = encode(spec, random_info_word(spec, rng));
            DecodeReport report = [&]() {
                if (soft)
                    return run_soft_decoder(config, spec, checks, transmit_awgn(c, sigma, rng));
                return run_decoder(config, spec, checks, transmit_hard(c, params, rng));
            }();
            const bool exact = report.codeword && *report.codeword == c;
            if (!exact) {
                word_errors.fetch_add(1, std::memory_order_relaxed);
                if (report.status != DecodeStatus::Failed)
                    miscorrections.fetch_add(1, std::memory_order_relaxed);
            }
        });

        WerRow row;
        row.param = grid[gi];
        row.trials = trials;
        row.word_errors = word_errors.load();
        row.miscorrections = miscorrections.load();
        row.wer = static_cast<double>(row.word_errors) / static_cast<double>(trials);
        row.ci = wilson_ci(row.word_errors, trials);
        rows.push_back(row);
    }
    return rows;
}

double tau_conditional_success(const CodeSpec& spec, const DualCheckSet& checks,
                               const DecoderConfig& config, int tau, long long trials,
                               std::uint64_t seed, int threads) {
    if (config.wants_soft_channel())
        throw ConfigInvalid("per-weight success is defined for hard decoders");
    std::atomic<long long> successes{0};
    parallel_trials(trials, threads, [&](long long trial) {
        Rng rng = Rng::for_trial(seed, 0x7461755full + static_cast<std::uint64_t>(tau),
                                 static_cast<std::uint64_t>(trial));
        CyclicPoly c = encode(spec, random_info_word(spec, rng));
        CyclicPoly e = random_error(*spec.symbol_field, spec.n, tau, rng);
        DecodeReport report = run_decoder(config, spec, checks, add(c, e));
        if (report.codeword && *report.codeword == c)
            successes.fetch_add(1, std::memory_order_relaxed);
    });
    return static_cast<double>(successes.load()) / static_cast<double>(trials);
}

double phi_ranking_success(const CodeSpec& spec, const DualCheckSet& checks, int tau,
                           long long trials, std::uint64_t seed, int threads) {
    std::atomic<long long> successes{0};
    parallel_trials(trials, threads, [&](long long trial) {
        Rng rng = Rng::for_trial(seed, 0x70686972ull + static_cast<std::uint64_t>(tau),
                                 static_cast<std::uint64_t>(trial));
        // The counting measure depends only on the error pattern.
        CyclicPoly e = random_error(*spec.symbol_field, spec.n, tau, rng);
        PhiProfile prof = phi(e, checks);
        int min_error = 0;
        bool first = true;
        for (int j : e.support()) {
            int v = prof.counts[static_cast<std::size_t>(j)];
            if (first || v < min_error) {
                min_error = v;
                first = false;
            }
        }
        int max_ok = -1;
        std::vector<char> is_error(static_cast<std::size_t>(spec.n), 0);
        for (int j : e.support())
            is_error[static_cast<std::size_t>(j)] = 1;
        for (int j = 0; j < spec.n; ++j)
            if (!is_error[static_cast<std::size_t>(j)])
                max_ok = std::max(max_ok, prof.counts[static_cast<std::size_t>(j)]);
        if (tau == 0 || min_error > max_ok)
            successes.fetch_add(1, std::memory_order_relaxed);
    });
    return static_cast<double>(successes.load()) / static_cast<double>(trials);
}

PhiAverages measure_phi_averages(const CodeSpec& spec, const DualCheckSet& checks, int tau,
                                 long long trials, std::uint64_t seed, int threads) {
    std::atomic<long long> omega_sum{0};
    std::atomic<long long> phi_err_sum{0};
    std::atomic<long long> phi_ok_sum{0};
    std::atomic<long long> phi_max_sum{0};
    parallel_trials(trials, threads, [&](long long trial) {
        Rng rng = Rng::for_trial(seed, 0x61766572ull + static_cast<std::uint64_t>(tau),
                                 static_cast<std::uint64_t>(trial));
        CyclicPoly e = random_error(*spec.symbol_field, spec.n, tau, rng);
        auto ws = syndromes(e, checks);
        long long omega = 0;
        for (const CyclicPoly& w : ws)
            omega += w.weight();
        PhiProfile prof = phi_from_syndromes(ws, checks);
        std::vector<char> is_error(static_cast<std::size_t>(spec.n), 0);
        for (int j : e.support())
            is_error[static_cast<std::size_t>(j)] = 1;
        long long err = 0, ok = 0;
        for (int j = 0; j < spec.n; ++j) {
            if (is_error[static_cast<std::size_t>(j)])
                err += prof.counts[static_cast<std::size_t>(j)];
            else
                ok += prof.counts[static_cast<std::size_t>(j)];
        }
        omega_sum.fetch_add(omega, std::memory_order_relaxed);
        phi_err_sum.fetch_add(err, std::memory_order_relaxed);
        phi_ok_sum.fetch_add(ok, std::memory_order_relaxed);
        phi_max_sum.fetch_add(prof.max_value(), std::memory_order_relaxed);
    });
    PhiAverages av;
    const double t = static_cast<double>(trials);
    av.av_omega = static_cast<double>(omega_sum.load()) / (t * checks.count());
    av.av_phi_err = tau > 0 ? static_cast<double>(phi_err_sum.load()) / (t * tau) : 0.0;
    av.av_phi_ok = static_cast<double>(phi_ok_sum.load()) / (t * (spec.n - tau));
    av.av_phi_max = static_cast<double>(phi_max_sum.load()) / t;
    return av;
}

double wer_from_conditional(int n, const std::vector<double>& success_by_tau, double p) {
    if (p < 0.0 || p > 1.0)
        throw ParameterOutOfRange("channel error probability out of range");
    if (p == 0.0)
        return success_by_tau.empty() || success_by_tau[0] >= 1.0 ? 0.0 : 1.0 - success_by_tau[0];
    double term = std::pow(1.0 - p, n);
    double wer = 0.0;
    for (int tau = 0; tau <= n; ++tau) {
        double success = tau < static_cast<int>(success_by_tau.size())
                             ? success_by_tau[static_cast<std::size_t>(tau)]
                             : 0.0;
        wer += term * (1.0 - success);
        term *= static_cast<double>(n - tau) / (tau + 1) * p / (1.0 - p);
    }
    return wer;
}

} // namespace dualdec
