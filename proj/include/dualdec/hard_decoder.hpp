#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dualdec/code_spec.hpp"
#include "dualdec/dual_checks.hpp"

namespace dualdec {

/// Per-position counting measure: how many of the L*d_perp shifted syndrome
/// views have a one at each position. Large values flag likely errors.
struct PhiProfile {
    std::vector<int> counts;
    int max_value() const;
};

/// Nonbinary counting measure. Row i (0..n-1) counts evidence for the error
/// value alpha^i at each position; row n counts zero observations. Every
/// column sums to L*d_perp.
struct PhiMatrix {
    int n = 0;
    std::vector<std::vector<int>> rows; // (n+1) x n
};

enum class DecodeStatus { Corrected, Failed, Ambiguous };

struct Flip {
    int position = 0;
    gf_elem value = 1;
};

struct DecodeReport {
    DecodeStatus status = DecodeStatus::Failed;
    std::optional<CyclicPoly> codeword;
    std::optional<CyclicPoly> error;
    int iterations = 0;
    std::vector<Flip> flips;
};

enum class TieBreak { LowestIndex, SeededRandom };

struct HardDecodeOptions {
    int mu = 7;
    bool adaptive = false; // flip every position attaining the maximum
    int max_rounds = 20;
    // Surplus positions for information-set selection; -1 lets the greedy
    // rank-k selection walk the entire reliability order, so it only fails
    // when the generator matrix itself is rank deficient.
    int k0 = -1;
    TieBreak tie_break = TieBreak::LowestIndex;
    std::uint64_t seed = 0;
};

// Syndrome polynomials w = r * b for every check; all zero iff r is a
// codeword (for a full-rank check family).
std::vector<CyclicPoly> syndromes(const CyclicPoly& r, const DualCheckSet& checks);

bool all_zero(const std::vector<CyclicPoly>& ws);

// Support of the (l, i) parity check acting on position j:
// { j + b_i - b_t mod n : t }. Always contains j; size d_perp.
std::vector<int> check_support(int j, int l, int i, const DualCheckSet& checks);

PhiProfile phi(const CyclicPoly& r, const DualCheckSet& checks);
PhiProfile phi_from_syndromes(const std::vector<CyclicPoly>& ws, const DualCheckSet& checks);

struct PhiOpCount {
    std::uint64_t xor_ops = 0;
    std::uint64_t increments = 0;
};

// Reference evaluation straight from the stored check supports, counting the
// XOR-level work; must agree with phi() exactly.
PhiProfile phi_via_supports(const CyclicPoly& r, const DualCheckSet& checks,
                            PhiOpCount* ops = nullptr);

// Weight change of all syndromes when position j is flipped; satisfies
// L*d_perp - 2*phi_j = delta_j.
std::vector<int> delta(const CyclicPoly& r, const DualCheckSet& checks);

// w <- w + x^j b for every check; flipping the same position twice restores.
void flip(std::vector<CyclicPoly>& ws, int j, const DualCheckSet& checks);

// Iterative error reduction: each round flips the mu largest-phi positions
// (all maxima in adaptive mode), stopping as soon as every syndrome is zero.
DecodeReport decode_iter_reduce(const CyclicPoly& r, const DualCheckSet& checks,
                                const HardDecodeOptions& options = {});

// Information-set decoding on the k + k0 smallest-phi positions: re-encode
// the received symbols on a rank-k subset, form the k single-flip variants,
// and return the candidate closest to r in Hamming distance.
DecodeReport decode_info_set(const CyclicPoly& r, const CodeSpec& spec,
                             const DualCheckSet& checks, const HardDecodeOptions& options = {});

// Same pipeline with a caller-supplied reliability ranking (most reliable
// position first); shared by the hard and soft variants.
DecodeReport decode_info_set_ranked(const CyclicPoly& r, const CodeSpec& spec,
                                    const std::vector<int>& reliability_order,
                                    const HardDecodeOptions& options = {});

enum class NonbinaryStrategy { MaxEntry, ZeroRow, Combined };

PhiMatrix phi_matrix(const CyclicPoly& r, const DualCheckSet& checks);

DecodeReport decode_nonbinary(const CyclicPoly& r, const DualCheckSet& checks,
                              NonbinaryStrategy strategy = NonbinaryStrategy::MaxEntry,
                              int max_rounds = 30);

} // namespace dualdec
