#pragma once

#include "dualdec/cyclic_poly.hpp"
#include "dualdec/rng.hpp"
#include "dualdec/soft_decoder.hpp"

namespace dualdec {

struct ChannelParams {
    enum class Kind { BSC, QSC, AWGN };
    Kind kind = Kind::BSC;
    double p = 0.0;       // BSC/QSC symbol error probability
    double ebn0_db = 0.0; // AWGN
    double rate = 0.5;    // AWGN code rate (for the Eb/N0 -> sigma mapping)

    static ChannelParams bsc(double p);
    static ChannelParams qsc(double p);
    static ChannelParams awgn(double ebn0_db, double rate);

    // sigma^2 = 1 / (2 R 10^(EbN0/10))
    double sigma() const;
};

// Uniformly random support of size tau; values uniform over the nonzero
// field elements (all ones for a binary field).
CyclicPoly random_error(const Field& field, int n, int tau, Rng& rng);

// BSC flips each bit with probability p; QSC replaces a symbol with a
// uniformly chosen different one.
CyclicPoly transmit_hard(const CyclicPoly& c, const ChannelParams& params, Rng& rng);

// BPSK (0 -> +1, 1 -> -1) plus N(0, sigma^2) noise.
SoftVector transmit_awgn(const CyclicPoly& c, double sigma, Rng& rng);

// Q(x): upper tail of the standard normal.
double q_function(double x);

// Hard-decision bit error probability of the BPSK/AWGN channel, Q(1/sigma).
double awgn_bit_error_rate(double sigma);

// Word error rate of a decoder correcting exactly up to t errors:
// 1 - sum_{tau <= t} C(n, tau) p^tau (1-p)^(n-tau).
double bmd_wer(int n, int t, double p);

struct WilsonInterval {
    double lo = 0.0;
    double hi = 0.0;
};

WilsonInterval wilson_ci(long long errors, long long trials, double z = 1.959963984540054);

} // namespace dualdec
