#pragma once

#include <vector>

#include "dualdec/hard_decoder.hpp"

namespace dualdec {

/// Real channel outputs under BPSK (0 -> +1, 1 -> -1). The hard decision of
/// y_j > 0 is bit 0, y_j < 0 is bit 1; exact zeros resolve to bit 0 with a
/// tiny magnitude so reliability ratios stay finite.
struct SoftVector {
    std::vector<double> y;

    static constexpr double kZeroMagnitude = 1e-12;

    int size() const { return static_cast<int>(y.size()); }

    unsigned hard_bit(int j) const { return y[static_cast<std::size_t>(j)] < 0.0 ? 1u : 0u; }

    double magnitude(int j) const {
        double a = y[static_cast<std::size_t>(j)];
        a = a < 0.0 ? -a : a;
        return a > 0.0 ? a : kZeroMagnitude;
    }

    CyclicPoly hard_poly(const Field& binary_field) const;
};

enum class RhoConvention {
    // Signed so that rho > 0 iff the check is satisfied under hard decisions;
    // with unit magnitudes varphi collapses to the bit-flip measure delta.
    CheckConsistency,
    // The extrinsic product sign alone.
    ExtrinsicProduct,
};

struct SoftDecodeOptions {
    int mu = 7;
    int max_rounds = 20;
    int k0 = -1; // see HardDecodeOptions::k0
    RhoConvention rho_convention = RhoConvention::CheckConsistency;
    TieBreak tie_break = TieBreak::LowestIndex;
    std::uint64_t seed = 0;
};

// Reliability of the (l, i) check for position j: the smallest extrinsic
// magnitude over the check support, relative to |y_j|.
double rho(const SoftVector& y, int j, int l, int i, const DualCheckSet& checks,
           RhoConvention convention = RhoConvention::CheckConsistency);

// Extrinsic sums phi_j = sum over all L*d_perp checks of rho; negative values
// flag likely errors, large positive values reliable positions.
std::vector<double> varphi(const SoftVector& y, const DualCheckSet& checks,
                           RhoConvention convention = RhoConvention::CheckConsistency);

// Sign-flip decoding: flip (negate, magnitudes untouched) up to mu positions
// with the most negative varphi per round until the hard-decision syndromes
// vanish.
DecodeReport decode_soft_flip(const SoftVector& y, const CodeSpec& spec,
                              const DualCheckSet& checks, const SoftDecodeOptions& options = {});

// Information-set decoding ranked by descending varphi.
DecodeReport decode_soft_infoset(const SoftVector& y, const CodeSpec& spec,
                                 const DualCheckSet& checks, const SoftDecodeOptions& options = {});

} // namespace dualdec
