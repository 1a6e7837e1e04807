#include "dualdec/cli.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dualdec/channel.hpp"
#include "dualdec/errors.hpp"
#include "dualdec/io.hpp"
#include "dualdec/plotkin.hpp"
#include "dualdec/simulate.hpp"
#include "dualdec/stats.hpp"

namespace dualdec {

namespace {

// "a:b:step" inclusive grid, or a single value.
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    auto first = text.find(':');
    if (first == std::string::npos) {
        out.push_back(std::stod(text));
        return out;
    }
    auto second = text.find(':', first + 1);
    if (second == std::string::npos)
        throw ConfigInvalid("grid must be value or a:b:step");
    double a = std::stod(text.substr(0, first));
    double b = std::stod(text.substr(first + 1, second - first - 1));
    double step = std::stod(text.substr(second + 1));
    if (step <= 0)
        throw ConfigInvalid("grid step must be positive");
    for (double v = a; v <= b + step / 1e6; v += step)
        out.push_back(v);
    return out;
}

// "a..b" inclusive integer range, or a single value.
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

struct Output {
    std::string path; // empty = stdout
    void write(const std::string& content) const {
        if (path.empty())
            std::cout << content;
        else
            write_text_file(path, content);
    }
};

std::string csv_meta(const std::string& extra) {
    std::ostringstream out;
    out << "# dualdec " << kVersion << "\n";
    if (!extra.empty())
        out << "# " << extra << "\n";
    return out.str();
}

DecoderConfig make_decoder_config(const std::string& strategy, int mu, bool adaptive,
                                  int max_rounds, int k0, std::uint64_t seed, bool random_ties,
                                  bool literal_rho) {
    DecoderConfig config;
    config.strategy = strategy_from_name(strategy);
    config.hard.mu = mu;
    config.hard.adaptive = adaptive;
    config.hard.max_rounds = max_rounds;
    config.hard.k0 = k0;
    config.hard.seed = seed;
    config.hard.tie_break = random_ties ? TieBreak::SeededRandom : TieBreak::LowestIndex;
    config.soft.mu = mu;
    config.soft.max_rounds = max_rounds;
    config.soft.k0 = k0;
    config.soft.seed = seed;
    config.soft.tie_break = config.hard.tie_break;
    config.soft.rho_convention =
        literal_rho ? RhoConvention::ExtrinsicProduct : RhoConvention::CheckConsistency;
    return config;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"decoding with minimal-weight dual codewords"};
    app.require_subcommand(1);

    std::string spec_path, checks_path, out_path;
    std::uint64_t seed = 1;
    int threads = 0;

    // encode
    auto* cmd_encode = app.add_subcommand("encode", "encode an information word");
    std::string info_hex;
    cmd_encode->add_option("--spec", spec_path, "code spec JSON file")->required();
    cmd_encode->add_option("--info", info_hex, "information word, hex packed")->required();
    cmd_encode->add_option("--out", out_path, "output path (default stdout)");

    // mine
    auto* cmd_mine = app.add_subcommand("mine", "find minimal-weight dual codewords");
    int mine_weight = 0;
    long long mine_budget = 2000;
    cmd_mine->add_option("--spec", spec_path, "code spec JSON file")->required();
    cmd_mine->add_option("--weight", mine_weight, "target dual weight")->required();
    cmd_mine->add_option("--budget", mine_budget, "search restarts (binary codes)");
    cmd_mine->add_option("--seed", seed, "search seed");
    cmd_mine->add_option("--out", out_path, "checks JSON output path");

    // decode
    auto* cmd_decode = app.add_subcommand("decode", "hard-decision decoding");
    std::string received_hex, strategy = "reduce";
    int mu = 7, k0 = -1, max_rounds = 20;
    bool adaptive = false, random_ties = false;
    cmd_decode->add_option("--spec", spec_path)->required();
    cmd_decode->add_option("--checks", checks_path)->required();
    cmd_decode->add_option("--received", received_hex, "received word, hex packed")->required();
    cmd_decode->add_option("--strategy", strategy, "reduce|infoset|nb-max|nb-zero|nb-combined");
    cmd_decode->add_option("--mu", mu, "flips per round");
    cmd_decode->add_flag("--adaptive", adaptive, "flip all maxima each round");
    cmd_decode->add_option("--k0", k0, "information-set surplus (-1 = unbounded)");
    cmd_decode->add_option("--max-rounds", max_rounds);
    cmd_decode->add_option("--seed", seed);
    cmd_decode->add_flag("--random-ties", random_ties, "break rank ties with the seed");
    cmd_decode->add_option("--out", out_path);

    // decode-soft
    auto* cmd_soft = app.add_subcommand("decode-soft", "soft-decision decoding");
    std::string y_csv, soft_strategy = "soft-flip";
    bool literal_rho = false;
    int soft_mu = 7, soft_k0 = -1, soft_rounds = 20;
    cmd_soft->add_option("--spec", spec_path)->required();
    cmd_soft->add_option("--checks", checks_path)->required();
    cmd_soft->add_option("--y", y_csv, "received reals, comma separated")->required();
    cmd_soft->add_option("--strategy", soft_strategy, "soft-flip|soft-infoset");
    cmd_soft->add_option("--mu", soft_mu);
    cmd_soft->add_option("--k0", soft_k0);
    cmd_soft->add_option("--max-rounds", soft_rounds);
    cmd_soft->add_flag("--literal-rho", literal_rho, "extrinsic-product sign rule");
    cmd_soft->add_option("--seed", seed);
    cmd_soft->add_option("--out", out_path);

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "Monte-Carlo word error rates");
    std::string channel = "bsc", p_grid, ebn0_grid, sim_strategy = "reduce";
    long long trials = 10000;
    int sim_mu = 7, sim_k0 = -1, sim_rounds = 20;
    bool sim_adaptive = false, sim_random_ties = false, sim_literal_rho = false;
    cmd_sim->add_option("--spec", spec_path)->required();
    cmd_sim->add_option("--checks", checks_path)->required();
    cmd_sim->add_option("--channel", channel, "bsc|qsc|awgn");
    cmd_sim->add_option("--p", p_grid, "crossover grid a:b:step");
    cmd_sim->add_option("--ebn0", ebn0_grid, "Eb/N0 grid in dB");
    cmd_sim->add_option("--strategy", sim_strategy);
    cmd_sim->add_option("--mu", sim_mu);
    cmd_sim->add_flag("--adaptive", sim_adaptive);
    cmd_sim->add_option("--k0", sim_k0);
    cmd_sim->add_option("--max-rounds", sim_rounds);
    cmd_sim->add_flag("--random-ties", sim_random_ties);
    cmd_sim->add_flag("--literal-rho", sim_literal_rho);
    cmd_sim->add_option("--trials", trials);
    cmd_sim->add_option("--seed", seed);
    cmd_sim->add_option("--threads", threads, "0 = all cores");
    cmd_sim->add_option("--out", out_path, "CSV output path");

    // analyze
    auto* cmd_analyze = app.add_subcommand("analyze", "predicted vs measured counting measure");
    std::string tau_range = "5..9";
    long long analyze_trials = 2000;
    cmd_analyze->add_option("--spec", spec_path)->required();
    cmd_analyze->add_option("--checks", checks_path)->required();
    cmd_analyze->add_option("--tau", tau_range, "error weight range a..b");
    cmd_analyze->add_option("--trials", analyze_trials);
    cmd_analyze->add_option("--seed", seed);
    cmd_analyze->add_option("--threads", threads);
    cmd_analyze->add_option("--out", out_path);

    // plotkin
    auto* cmd_plotkin = app.add_subcommand("plotkin", "recursive Reed-Muller decoding");
    std::string rm_text = "2,6", plotkin_mode = "soft", plotkin_grid;
    long long plotkin_trials = 10000;
    cmd_plotkin->add_option("--rm", rm_text, "order and m, e.g. 2,6")->required();
    cmd_plotkin->add_option("--decode", plotkin_mode, "hard|soft");
    cmd_plotkin->add_option("--ebn0", plotkin_grid, "Eb/N0 grid (soft)");
    cmd_plotkin->add_option("--p", p_grid, "BSC grid (hard)");
    cmd_plotkin->add_option("--trials", plotkin_trials);
    cmd_plotkin->add_option("--seed", seed);
    cmd_plotkin->add_option("--threads", threads);
    cmd_plotkin->add_option("--out", out_path);

    // polarize
    auto* cmd_polarize = app.add_subcommand("polarize", "genie-aided channel polarization");
    int depth = 2, leaf_len = 64;
    double rate = 0.5, ebn0 = 2.0;
    long long polarize_trials = 20000;
    cmd_polarize->add_option("--depth", depth)->required();
    cmd_polarize->add_option("--rate", rate);
    cmd_polarize->add_option("--ebn0", ebn0);
    cmd_polarize->add_option("--trials", polarize_trials);
    cmd_polarize->add_option("--leaf-len", leaf_len);
    cmd_polarize->add_option("--seed", seed);
    cmd_polarize->add_option("--threads", threads);
    cmd_polarize->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << e.what() << "\n" << app.help();
        return 1;
    }

    Output output{out_path};

    auto load_spec = [&]() { return load_code_spec_file(spec_path); };
    auto spec_hash = [&]() { return hash_file(spec_path); };

    if (cmd_encode->parsed()) {
        CodeSpec spec = load_spec();
        CyclicPoly info = poly_from_hex(*spec.symbol_field, spec.n, info_hex);
        CyclicPoly c = encode(spec, info);
        nlohmann::json j;
        j["meta"] = {{"version", kVersion}, {"spec_hash", spec_hash()}};
        j["codeword"] = poly_to_hex(c);
        j["codeword_text"] = poly_to_text(c);
        output.write(j.dump(2) + "\n");
        return 0;
    }

    if (cmd_mine->parsed()) {
        CodeSpec spec = load_spec();
        const std::string hash = spec_hash();

        // Mined sets are cached by spec hash and weight.
        std::string cache_path;
        if (const char* cache_dir = std::getenv("DUALDEC_CACHE")) {
            std::filesystem::create_directories(cache_dir);
            cache_path = std::string(cache_dir) + "/" + hash + "-w" +
                         std::to_string(mine_weight) + ".json";
        }
        DualCheckSet checks = [&]() {
            if (!cache_path.empty() && std::filesystem::exists(cache_path))
                return load_checks_file(cache_path, spec);
            DualCheckSet mined = spec.family == CodeFamily::RS
                                     ? mds_dual_min_weight(spec)
                                     : binary_low_weight_search(spec, mine_weight, mine_budget, seed);
            if (!cache_path.empty())
                save_checks_file(cache_path, mined, hash, seed);
            return mined;
        }();
        if (checks.weight != mine_weight)
            throw ConfigInvalid("dual minimum weight is " + std::to_string(checks.weight) +
                                ", not " + std::to_string(mine_weight));
        std::string body = checks_to_json(checks, hash, seed).dump(2) + "\n";
        output.write(body);
        std::cerr << "mined " << checks.count() << " cyclically distinct weight-" << checks.weight
                  << " checks\n";
        return 0;
    }

    if (cmd_decode->parsed()) {
        CodeSpec spec = load_spec();
        DualCheckSet checks = load_checks_file(checks_path, spec);
        CyclicPoly r = poly_from_hex(*spec.symbol_field, spec.n, received_hex);
        // Punctured RM codes default to flipping all maxima per round.
        if (spec.family == CodeFamily::PuncturedRM && cmd_decode->count("--adaptive") == 0 &&
            cmd_decode->count("--mu") == 0)
            adaptive = true;
        DecoderConfig config = make_decoder_config(strategy, mu, adaptive, max_rounds, k0, seed,
                                                   random_ties, false);
        DecodeReport report = [&]() {
            switch (config.strategy) {
            case DecoderConfig::Strategy::IterReduce:
                return decode_iter_reduce(r, checks, config.hard);
            case DecoderConfig::Strategy::InfoSet:
                return decode_info_set(r, spec, checks, config.hard);
            case DecoderConfig::Strategy::NbMax:
                return decode_nonbinary(r, checks, NonbinaryStrategy::MaxEntry, max_rounds);
            case DecoderConfig::Strategy::NbZeroRow:
                return decode_nonbinary(r, checks, NonbinaryStrategy::ZeroRow, max_rounds);
            case DecoderConfig::Strategy::NbCombined:
                return decode_nonbinary(r, checks, NonbinaryStrategy::Combined, max_rounds);
            default:
                throw ConfigInvalid("use decode-soft for soft strategies");
            }
        }();
        nlohmann::json j = report_to_json(report);
        j["meta"] = {{"version", kVersion},
                     {"spec_hash", spec_hash()},
                     {"checks_hash", hash_file(checks_path)},
                     {"seed", seed}};
        output.write(j.dump(2) + "\n");
        return 0;
    }

    if (cmd_soft->parsed()) {
        CodeSpec spec = load_spec();
        DualCheckSet checks = load_checks_file(checks_path, spec);
        SoftVector y;
        std::istringstream stream(y_csv);
        std::string item;
        while (std::getline(stream, item, ','))
            y.y.push_back(std::stod(item));
        if (y.size() != spec.n)
            throw ConfigInvalid("expected " + std::to_string(spec.n) + " soft values");
        DecoderConfig config = make_decoder_config(soft_strategy, soft_mu, false, soft_rounds,
                                                   soft_k0, seed, false, literal_rho);
        DecodeReport report = config.strategy == DecoderConfig::Strategy::SoftFlip
                                  ? decode_soft_flip(y, spec, checks, config.soft)
                                  : decode_soft_infoset(y, spec, checks, config.soft);
        nlohmann::json j = report_to_json(report);
        j["meta"] = {{"version", kVersion},
                     {"spec_hash", spec_hash()},
                     {"checks_hash", hash_file(checks_path)},
                     {"seed", seed}};
        output.write(j.dump(2) + "\n");
        return 0;
    }

    if (cmd_sim->parsed()) {
        CodeSpec spec = load_spec();
        DualCheckSet checks = load_checks_file(checks_path, spec);
        if (spec.family == CodeFamily::PuncturedRM && cmd_sim->count("--adaptive") == 0 &&
            cmd_sim->count("--mu") == 0)
            sim_adaptive = true;
        DecoderConfig config = make_decoder_config(sim_strategy, sim_mu, sim_adaptive, sim_rounds,
                                                   sim_k0, seed, sim_random_ties, sim_literal_rho);
        ChannelParams::Kind kind;
        std::vector<double> grid;
        if (channel == "bsc") {
            kind = ChannelParams::Kind::BSC;
            grid = parse_grid(p_grid);
        } else if (channel == "qsc") {
            kind = ChannelParams::Kind::QSC;
            grid = parse_grid(p_grid);
        } else if (channel == "awgn") {
            kind = ChannelParams::Kind::AWGN;
            grid = parse_grid(ebn0_grid);
        } else {
            throw ConfigInvalid("unknown channel: " + channel);
        }
        auto rows = wer_curve(spec, checks, config, kind, grid, trials, seed, threads);
        std::ostringstream csv;
        csv << csv_meta("spec=" + spec_hash() + " checks=" + hash_file(checks_path) + " seed=" +
                        std::to_string(seed) + " strategy=" + sim_strategy + " channel=" + channel);
        csv << "param,trials,errors,miscorrections,wer,ci_lo,ci_hi\n";
        for (const WerRow& row : rows) {
            char line[192];
            std::snprintf(line, sizeof line, "%.6g,%lld,%lld,%lld,%.8g,%.8g,%.8g\n", row.param,
                          row.trials, row.word_errors, row.miscorrections, row.wer, row.ci.lo,
                          row.ci.hi);
            csv << line;
        }
        output.write(csv.str());
        return 0;
    }

    if (cmd_analyze->parsed()) {
        CodeSpec spec = load_spec();
        DualCheckSet checks = load_checks_file(checks_path, spec);
        auto [tau_lo, tau_hi] = parse_range(tau_range);
        std::ostringstream csv;
        csv << csv_meta("spec=" + spec_hash() + " checks=" + hash_file(checks_path) + " seed=" +
                        std::to_string(seed) + " trials=" + std::to_string(analyze_trials));
        csv << "tau,E_omega,AV_omega,E_phi_err,AV_phi_err,E_phi_ok,AV_phi_ok,AV_phi_max\n";
        for (int tau = tau_lo; tau <= tau_hi; ++tau) {
            double e_omega = expected_syndrome_weight(spec.n, checks.weight, tau);
            double e_err = expected_phi_error(e_omega, tau, checks.count());
            double e_ok =
                expected_phi_correct(e_omega, checks.weight, spec.n, tau, checks.count());
            PhiAverages av =
                measure_phi_averages(spec, checks, tau, analyze_trials, seed, threads);
            char line[192];
            std::snprintf(line, sizeof line, "%d,%.1f,%.1f,%.1f,%.1f,%.1f,%.1f,%.1f\n", tau,
                          e_omega, av.av_omega, e_err, av.av_phi_err, e_ok, av.av_phi_ok,
                          av.av_phi_max);
            csv << line;
        }
        output.write(csv.str());
        return 0;
    }

    if (cmd_plotkin->parsed()) {
        auto comma = rm_text.find(',');
        if (comma == std::string::npos)
            throw ConfigInvalid("--rm expects r,m");
        int r = std::stoi(rm_text.substr(0, comma));
        int m = std::stoi(rm_text.substr(comma + 1));
        PlotkinNode node = rm_build(r, m);
        const bool soft = plotkin_mode == "soft";
        if (!soft && plotkin_mode != "hard")
            throw ConfigInvalid("--decode must be hard or soft");
        std::vector<double> grid = parse_grid(soft ? plotkin_grid : p_grid);
        const double code_rate = static_cast<double>(node.k) / node.n;

        std::ostringstream csv;
        std::ostringstream meta;
        meta << "rm=(" << r << "," << m << ") n=" << node.n << " k=" << node.k << " d=" << node.d
             << " decode=" << plotkin_mode << " seed=" << seed;
        csv << csv_meta(meta.str());
        csv << "param,trials,errors,wer,ci_lo,ci_hi\n";
        for (double param : grid) {
            std::atomic<long long> errors{0};
            const double sigma = ChannelParams::awgn(param, code_rate).sigma();
            parallel_trials(plotkin_trials, threads, [&](long long trial) {
                Rng rng = Rng::for_trial(seed, 0x726d00ull, static_cast<std::uint64_t>(trial));
                Word info(static_cast<std::size_t>(node.k));
                for (auto& b : info)
                    b = rng.bernoulli(0.5) ? 1 : 0;
                Word c = rm_encode(node, info);
                Word decoded;
                if (soft) {
                    std::vector<double> y(c.size());
                    for (std::size_t i = 0; i < c.size(); ++i)
                        y[i] = (c[i] ? -1.0 : 1.0) + sigma * rng.normal();
                    decoded = rm_decode_soft(node, y);
                } else {
                    Word received = c;
                    for (auto& b : received)
                        if (rng.bernoulli(param))
                            b ^= 1;
                    decoded = rm_decode_hard(node, received);
                }
                if (decoded != c)
                    errors.fetch_add(1, std::memory_order_relaxed);
            });
            WilsonInterval ci = wilson_ci(errors.load(), plotkin_trials);
            char line[160];
            std::snprintf(line, sizeof line, "%.6g,%lld,%lld,%.8g,%.8g,%.8g\n", param,
                          plotkin_trials, errors.load(),
                          static_cast<double>(errors.load()) / plotkin_trials, ci.lo, ci.hi);
            csv << line;
        }
        output.write(csv.str());
        return 0;
    }

    if (cmd_polarize->parsed()) {
        auto rows = polarization_report(depth, rate, ebn0, polarize_trials, seed, leaf_len,
                                        threads ? threads : 1);
        std::ostringstream csv;
        std::ostringstream meta;
        meta << "depth=" << depth << " rate=" << rate << " ebn0=" << ebn0 << " seed=" << seed;
        csv << csv_meta(meta.str());
        csv << "component,bits,errors,ber,analytic\n";
        for (const PolarizationRow& row : rows) {
            char line[160];
            if (row.analytic)
                std::snprintf(line, sizeof line, "%s,%lld,%lld,%.8g,%.8g\n", row.component.c_str(),
                              row.bits, row.bit_errors, row.ber, *row.analytic);
            else
                std::snprintf(line, sizeof line, "%s,%lld,%lld,%.8g,\n", row.component.c_str(),
                              row.bits, row.bit_errors, row.ber);
            csv << line;
        }
        output.write(csv.str());
        return 0;
    }

    return 1;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace dualdec
