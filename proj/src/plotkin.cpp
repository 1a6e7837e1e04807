#include "dualdec/plotkin.hpp"

#include <atomic>
#include <cmath>

#include "dualdec/channel.hpp"
#include "dualdec/errors.hpp"
#include "dualdec/rng.hpp"
#include "dualdec/simulate.hpp"

namespace dualdec {

namespace {

int hamming(const Word& a, const Word& b) {
    int dist = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        dist += a[i] != b[i];
    return dist;
}

Word xor_words(const Word& a, const Word& b) {
    Word out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] ^ b[i];
    return out;
}

} // namespace

Word combine(const Word& c1, const Word& c2) {
    if (c1.size() != c2.size())
        throw LengthMismatch("component lengths differ");
    Word out;
    out.reserve(2 * c1.size());
    out.insert(out.end(), c1.begin(), c1.end());
    for (std::size_t i = 0; i < c1.size(); ++i)
        out.push_back(c1[i] ^ c2[i]);
    return out;
}

std::pair<Word, Word> plotkin_hard_decode(const Word& r, const ComponentDecoder& dec1,
                                          const ComponentDecoder& dec2) {
    if (r.size() % 2 != 0)
        throw LengthMismatch("received word length must be even");
    const std::size_t n = r.size() / 2;
    Word left(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
    Word right(r.begin() + static_cast<std::ptrdiff_t>(n), r.end());

    Word c2 = dec2(xor_words(left, right));

    Word v1 = left;
    Word v2 = xor_words(right, c2);
    Word c1_left = dec1(v1);
    Word c1_right = dec1(v2);
    // Whichever variant corrected fewer positions is kept; at most one of the
    // two halves can carry more than half of d1 - 1 errors.
    Word c1 = hamming(c1_left, v1) <= hamming(c1_right, v2) ? c1_left : c1_right;
    return {std::move(c1), std::move(c2)};
}

std::vector<double> soft_project(const std::vector<double>& y) {
    if (y.size() % 2 != 0)
        throw LengthMismatch("soft vector length must be even");
    const std::size_t n = y.size() / 2;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double a = y[i];
        double b = y[n + i];
        double mag = std::min(std::fabs(a), std::fabs(b));
        out[i] = (a < 0.0) == (b < 0.0) ? mag : -mag;
    }
    return out;
}

std::vector<double> soft_refine(const std::vector<double>& y, const std::vector<int>& x2_bpsk) {
    if (y.size() != 2 * x2_bpsk.size())
        throw LengthMismatch("refinement needs a decided word of half the length");
    const std::size_t n = x2_bpsk.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = y[i] + y[n + i] * x2_bpsk[i];
    return out;
}

PlotkinNode rm_build(int r, int m) {
    if (r < 0 || r > m || m < 0)
        throw ParameterOutOfRange("rm_build requires 0 <= r <= m");
    PlotkinNode node;
    node.n = 1 << m;
    if (r == 0) {
        node.k = 1;
        node.d = node.n;
        node.leaf = PlotkinNode::Leaf::Repetition;
        return node;
    }
    if (r == m) {
        node.k = node.n;
        node.d = 1;
        node.leaf = PlotkinNode::Leaf::Universe;
        return node;
    }
    node.first = std::make_unique<PlotkinNode>(rm_build(r, m - 1));
    node.second = std::make_unique<PlotkinNode>(rm_build(r - 1, m - 1));
    node.k = node.first->k + node.second->k;
    node.d = std::min(2 * node.first->d, node.second->d);
    return node;
}

Word rm_encode(const PlotkinNode& node, const Word& info) {
    if (static_cast<int>(info.size()) != node.k)
        throw LengthMismatch("information length must equal the code dimension");
    switch (node.leaf) {
    case PlotkinNode::Leaf::Repetition:
        return Word(static_cast<std::size_t>(node.n), info[0]);
    case PlotkinNode::Leaf::Universe:
        return info;
    case PlotkinNode::Leaf::None:
        break;
    }
    Word info1(info.begin(), info.begin() + node.first->k);
    Word info2(info.begin() + node.first->k, info.end());
    return combine(rm_encode(*node.first, info1), rm_encode(*node.second, info2));
}

Word rm_decode_soft(const PlotkinNode& node, const std::vector<double>& y) {
    if (static_cast<int>(y.size()) != node.n)
        throw LengthMismatch("soft vector length must equal the code length");
    switch (node.leaf) {
    case PlotkinNode::Leaf::Repetition: {
        double sum = 0.0;
        for (double v : y)
            sum += v;
        return Word(static_cast<std::size_t>(node.n), sum < 0.0 ? 1 : 0);
    }
    case PlotkinNode::Leaf::Universe: {
        Word out(y.size());
        for (std::size_t i = 0; i < y.size(); ++i)
            out[i] = y[i] < 0.0 ? 1 : 0;
        return out;
    }
    case PlotkinNode::Leaf::None:
        break;
    }
    Word c2 = rm_decode_soft(*node.second, soft_project(y));
    std::vector<int> x2(c2.size());
    for (std::size_t i = 0; i < c2.size(); ++i)
        x2[i] = c2[i] ? -1 : 1;
    Word c1 = rm_decode_soft(*node.first, soft_refine(y, x2));
    return combine(c1, c2);
}

Word rm_decode_hard(const PlotkinNode& node, const Word& r) {
    if (static_cast<int>(r.size()) != node.n)
        throw LengthMismatch("word length must equal the code length");
    switch (node.leaf) {
    case PlotkinNode::Leaf::Repetition: {
        int ones = 0;
        for (auto b : r)
            ones += b;
        return Word(r.size(), ones > node.n / 2 ? 1 : 0);
    }
    case PlotkinNode::Leaf::Universe:
        return r;
    case PlotkinNode::Leaf::None:
        break;
    }
    auto [c1, c2] = plotkin_hard_decode(
        r, [&](const Word& w) { return rm_decode_hard(*node.first, w); },
        [&](const Word& w) { return rm_decode_hard(*node.second, w); });
    return combine(c1, c2);
}

namespace {

struct TrialNode {
    std::vector<int> composite; // BPSK symbols
    int leaf_index = -1;
    std::unique_ptr<TrialNode> left;  // refine side (low component numbers)
    std::unique_ptr<TrialNode> right; // project side
};

TrialNode build_trial(int first_leaf, int leaf_count, int leaf_len, Rng& rng) {
    TrialNode node;
    if (leaf_count == 1) {
        node.leaf_index = first_leaf;
        node.composite.resize(static_cast<std::size_t>(leaf_len));
        for (auto& s : node.composite)
            s = rng.bernoulli(0.5) ? -1 : 1;
        return node;
    }
    const int half = leaf_count / 2;
    node.left = std::make_unique<TrialNode>(build_trial(first_leaf, half, leaf_len, rng));
    node.right = std::make_unique<TrialNode>(build_trial(first_leaf + half, half, leaf_len, rng));
    const std::size_t n = node.left->composite.size();
    node.composite.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        node.composite[i] = node.left->composite[i];
        node.composite[n + i] = node.left->composite[i] * node.right->composite[i];
    }
    return node;
}

void measure_trial(const TrialNode& node, const std::vector<double>& y,
                   std::vector<std::atomic<long long>>& errors) {
    if (node.leaf_index >= 0) {
        long long wrong = 0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            int hard = y[i] < 0.0 ? -1 : 1;
            wrong += hard != node.composite[i];
        }
        errors[static_cast<std::size_t>(node.leaf_index)].fetch_add(wrong,
                                                                    std::memory_order_relaxed);
        return;
    }
    measure_trial(*node.right, soft_project(y), errors);
    // Genie: refine with the transmitted right-side composite.
    measure_trial(*node.left, soft_refine(y, node.right->composite), errors);
}

} // namespace

std::vector<PolarizationRow> polarization_report(int depth, double rate, double ebn0_db,
                                                 long long trials, std::uint64_t seed,
                                                 int leaf_len, int threads) {
    if (depth < 1)
        throw ParameterOutOfRange("polarization depth must be at least 1");
    if (leaf_len < 1 || trials < 1)
        throw ParameterOutOfRange("leaf length and trials must be positive");
    const int components = 1 << depth;
    const double sigma = ChannelParams::awgn(ebn0_db, rate).sigma();

    std::vector<std::atomic<long long>> errors(static_cast<std::size_t>(components));
    for (auto& e : errors)
        e.store(0);
    std::atomic<long long> channel_errors{0};

    parallel_trials(trials, threads, [&](long long trial) {
        Rng rng = Rng::for_trial(seed, 0x706f6cull, static_cast<std::uint64_t>(trial));
        TrialNode root = build_trial(0, components, leaf_len, rng);
        std::vector<double> y(root.composite.size());
        long long wrong = 0;
        for (std::size_t i = 0; i < y.size(); ++i) {
            y[i] = root.composite[i] + sigma * rng.normal();
            int hard = y[i] < 0.0 ? -1 : 1;
            wrong += hard != root.composite[i];
        }
        channel_errors.fetch_add(wrong, std::memory_order_relaxed);
        measure_trial(root, y, errors);
    });

    const long long leaf_bits = trials * leaf_len;
    const double p_channel = awgn_bit_error_rate(sigma);

    std::vector<PolarizationRow> rows;
    PolarizationRow channel_row;
    channel_row.component = "channel";
    channel_row.bits = leaf_bits * components;
    channel_row.bit_errors = channel_errors.load();
    channel_row.ber = static_cast<double>(channel_row.bit_errors) / channel_row.bits;
    channel_row.analytic = p_channel;
    rows.push_back(channel_row);

    for (int c = components - 1; c >= 0; --c) {
        PolarizationRow row;
        row.component = "c" + std::to_string(c + 1);
        row.bits = leaf_bits;
        row.bit_errors = errors[static_cast<std::size_t>(c)].load();
        row.ber = static_cast<double>(row.bit_errors) / leaf_bits;
        if (c == components - 1) {
            // All-projection chain: the hard decision is an XOR channel at
            // every level, so the error rate composes exactly.
            double p = p_channel;
            for (int level = 0; level < depth; ++level)
                p = 2.0 * p * (1.0 - p);
            row.analytic = p;
        } else if (c == 0) {
            // All-refinement chain: Gaussian with SNR scaled by 2^depth.
            row.analytic = q_function(std::sqrt(std::pow(2.0, depth)) / sigma);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace dualdec
