#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dualdec {

using Word = std::vector<std::uint8_t>; // one bit per entry

// (c1 | c1 + c2): doubles the length, k = k1 + k2, d = min(2 d1, d2).
Word combine(const Word& c1, const Word& c2);

using ComponentDecoder = std::function<Word(const Word&)>;

// Two-sided hard decoding: c2 from the half sum, then c1 from both halves,
// keeping the variant that corrected fewer positions (ties prefer the left).
std::pair<Word, Word> plotkin_hard_decode(const Word& r, const ComponentDecoder& dec1,
                                          const ComponentDecoder& dec2);

// Channel for the second code: sign(y1 y2) min(|y1|, |y2|) elementwise.
std::vector<double> soft_project(const std::vector<double>& y);

// Channel for the first code once x2 is decided: y1 + y2 .* x2; amplitude
// doubles while the noise variance only doubles (a 3 dB gain).
std::vector<double> soft_refine(const std::vector<double>& y, const std::vector<int>& x2_bpsk);

/// Recursive Plotkin structure of a Reed-Muller code. Leaves are repetition
/// (k = 1) and universe (k = n) codes.
struct PlotkinNode {
    int n = 0;
    int k = 0;
    int d = 0;
    enum class Leaf { None, Repetition, Universe } leaf = Leaf::None;
    std::unique_ptr<PlotkinNode> first;  // higher-rate code C1
    std::unique_ptr<PlotkinNode> second; // lower-rate code C2
};

PlotkinNode rm_build(int r, int m);

// Systematic-free encoding: the first k1 information bits go to C1.
Word rm_encode(const PlotkinNode& node, const Word& info);

// Recursive decoding: project -> decode C2 -> refine -> decode C1. Leaves use
// correlation (repetition) and symbol-wise threshold (universe).
Word rm_decode_soft(const PlotkinNode& node, const std::vector<double>& y);

// Hard two-sided recursion over the same structure.
Word rm_decode_hard(const PlotkinNode& node, const Word& r);

struct PolarizationRow {
    std::string component;   // "channel", "c1", "c2", ...
    long long bits = 0;
    long long bit_errors = 0;
    double ber = 0.0;
    std::optional<double> analytic; // where a closed form exists
};

// Genie-aided measurement of the synthesized channel seen by every component
// code of a depth-deep Plotkin recursion over BPSK/AWGN at the given overall
// rate. Components are numbered so that the highest index sees the
// all-projection channel and component 1 the all-refinement channel.
std::vector<PolarizationRow> polarization_report(int depth, double rate, double ebn0_db,
                                                 long long trials, std::uint64_t seed,
                                                 int leaf_len = 64, int threads = 1);

} // namespace dualdec
