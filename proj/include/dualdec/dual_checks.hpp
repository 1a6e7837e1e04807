#pragma once

#include <cstdint>
#include <vector>

#include "dualdec/code_spec.hpp"
#include "dualdec/cyclic_poly.hpp"

namespace dualdec {

/// One parity check b(x): a minimal-weight dual codeword normalized so the
/// coefficient at position 0 equals 1.
struct DualCheck {
    CyclicPoly poly;
    std::vector<int> support;    // sorted, support[0] == 0
    std::vector<gf_elem> coeffs; // coeffs[i] at support[i]; coeffs[0] == 1
};

/// L cyclically inequivalent minimal-weight dual codewords of one code.
struct DualCheckSet {
    std::shared_ptr<const Field> field; // symbol field of the code
    int n = 0;
    int weight = 0; // d_perp
    std::vector<DualCheck> checks;

    int count() const { return static_cast<int>(checks.size()); }
    long long total_checks() const { return static_cast<long long>(count()) * weight; } // L d_perp
};

// Representative of the cyclic equivalence class of b: the rotation placing a
// nonzero coefficient at position 0 with lexicographically minimal support
// (nonbinary classes also quotient by scalars; the coefficient at position 0
// is normalized to 1). Two polynomials are cyclically equivalent iff their
// canonical forms are equal.
CyclicPoly cyclic_canonical(const CyclicPoly& b);

// Closure of {b} under cyclic shift and squaring; at most m*n members, all of
// the same weight.
std::vector<CyclicPoly> orbit_expand(const CyclicPoly& b);

// All cyclically distinct minimal-weight codewords of the dual of an MDS (RS)
// code, found by solving the homogeneous parity system on every size-d_perp
// support containing position 0. Deterministic.
DualCheckSet mds_dual_min_weight(const CodeSpec& spec);

// Randomized information-set search for weight-target_w dual codewords of a
// binary code. Every hit is expanded through its shift/squaring orbit; the
// search stops when the budget is exhausted or the canonical set has been
// stable for a confirmation window after half the budget.
DualCheckSet binary_low_weight_search(const CodeSpec& spec, int target_w, long long budget,
                                      std::uint64_t seed);

// Wrap explicit check polynomials (e.g. loaded from a file); each must have a
// nonzero coefficient at position 0.
DualCheckSet checks_from_polys(const CodeSpec& spec, const std::vector<CyclicPoly>& polys);

// Every check must annihilate all generator-matrix rows; throws otherwise.
void validate_checks(const CodeSpec& spec, const DualCheckSet& checks);

} // namespace dualdec
