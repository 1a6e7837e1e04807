#pragma once

#include <cstdint>
#include <vector>

namespace dualdec {

/// Unsigned big integer, base 2^64 little-endian. Just enough arithmetic for
/// exact binomial coefficients; one final conversion to long double keeps the
/// expectation formulas free of floating intermediates.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t value);

    bool is_zero() const { return words_.empty(); }
    void add(const BigUint& other);
    void mul(const BigUint& other);
    void mul_small(std::uint64_t factor);
    std::uint64_t div_small(std::uint64_t divisor); // in place; returns remainder
    long double to_long_double() const;
    bool operator==(const BigUint& other) const { return words_ == other.words_; }

private:
    std::vector<std::uint64_t> words_;
    void trim();
};

BigUint binomial(int n, int k); // 0 when k < 0 or k > n

// Number of weight-tau patterns on n positions meeting a fixed d_perp-subset
// in an odd number of places: sum over odd s of C(d_perp, s) C(n-d_perp, tau-s).
BigUint odd_overlap_count(int n, int d_perp, int tau);

// Expected syndrome weight E[omega] = n * W / C(n, tau).
double expected_syndrome_weight(int n, int d_perp, int tau);

// Expected counting-measure value at an error position, E[omega]/tau * L.
double expected_phi_error(double e_omega, int tau, int L);

// ... and at a non-error position, d_perp (E[omega] - E[omega]/d_perp) /
// (n - tau) * L.
double expected_phi_correct(double e_omega, int d_perp, int n, int tau, int L);

// List-decoding radius n - 1 - floor(sqrt(n (k-1))) for MDS codes.
int johnson_radius_mds(int n, int k);

// Binary Johnson radius floor((n - sqrt(n (n - 2d))) / 2).
int johnson_radius_binary(int n, int d);

} // namespace dualdec
