#include "dualdec/channel.hpp"

#include <cmath>

#include "dualdec/errors.hpp"

namespace dualdec {

ChannelParams ChannelParams::bsc(double p) {
    ChannelParams c;
    c.kind = Kind::BSC;
    c.p = p;
    return c;
}

ChannelParams ChannelParams::qsc(double p) {
    ChannelParams c;
    c.kind = Kind::QSC;
    c.p = p;
    return c;
}

ChannelParams ChannelParams::awgn(double ebn0_db, double rate) {
    ChannelParams c;
    c.kind = Kind::AWGN;
    c.ebn0_db = ebn0_db;
    c.rate = rate;
    return c;
}

double ChannelParams::sigma() const {
    double snr = std::pow(10.0, ebn0_db / 10.0);
    return std::sqrt(1.0 / (2.0 * rate * snr));
}

CyclicPoly random_error(const Field& field, int n, int tau, Rng& rng) {
    if (tau < 0 || tau > n)
        throw ParameterOutOfRange("error weight out of range");
    std::vector<int> positions(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        positions[static_cast<std::size_t>(i)] = i;
    CyclicPoly e(field, n);
    const int q_minus_1 = field.order();
    for (int t = 0; t < tau; ++t) {
        // partial Fisher-Yates draw without replacement
        int pick = t + static_cast<int>(rng.below(static_cast<std::uint32_t>(n - t)));
        std::swap(positions[static_cast<std::size_t>(t)], positions[static_cast<std::size_t>(pick)]);
        gf_elem value = 1;
        if (field.m() > 1)
            value = static_cast<gf_elem>(1 + rng.below(static_cast<std::uint32_t>(q_minus_1)));
        e.set_coeff(positions[static_cast<std::size_t>(t)], value);
    }
    return e;
}

CyclicPoly transmit_hard(const CyclicPoly& c, const ChannelParams& params, Rng& rng) {
    if (params.p < 0.0 || params.p > 1.0)
        throw ParameterOutOfRange("channel error probability out of range");
    CyclicPoly r = c;
    const Field& f = c.field();
    const int q = f.size();
    for (int j = 0; j < c.n(); ++j) {
        if (!rng.bernoulli(params.p))
            continue;
        if (params.kind == ChannelParams::Kind::BSC || q == 2) {
            r.set_coeff(j, r.coeff(j) ^ 1u);
        } else {
            // uniform over the q-1 other symbols
            gf_elem cur = r.coeff(j);
            gf_elem draw = static_cast<gf_elem>(rng.below(static_cast<std::uint32_t>(q - 1)));
            r.set_coeff(j, draw >= cur ? static_cast<gf_elem>(draw + 1) : draw);
        }
    }
    return r;
}

SoftVector transmit_awgn(const CyclicPoly& c, double sigma, Rng& rng) {
    SoftVector out;
    out.y.resize(static_cast<std::size_t>(c.n()));
    for (int j = 0; j < c.n(); ++j) {
        double x = c.coeff(j) ? -1.0 : 1.0;
        out.y[static_cast<std::size_t>(j)] = x + sigma * rng.normal();
    }
    return out;
}

double q_function(double x) { return 0.5 * std::erfc(x / 1.4142135623730950488); }

double awgn_bit_error_rate(double sigma) { return q_function(1.0 / sigma); }

double bmd_wer(int n, int t, double p) {
    if (p < 0.0 || p > 1.0)
        throw ParameterOutOfRange("channel error probability out of range");
    if (p == 0.0 || t >= n)
        return 0.0;
    if (p == 1.0)
        return 1.0;
    double term = std::pow(1.0 - p, n);
    double cumulative = term;
    for (int tau = 0; tau < t; ++tau) {
        term *= static_cast<double>(n - tau) / (tau + 1) * p / (1.0 - p);
        cumulative += term;
    }
    double wer = 1.0 - cumulative;
    return wer < 0.0 ? 0.0 : wer;
}

WilsonInterval wilson_ci(long long errors, long long trials, double z) {
    if (trials <= 0)
        throw ParameterOutOfRange("trials must be positive");
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(errors) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2.0 * n)) / denom;
    double margin = z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    WilsonInterval ci;
    ci.lo = errors == 0 ? 0.0 : center - margin;
    ci.hi = errors == trials ? 1.0 : center + margin;
    if (ci.lo < 0.0)
        ci.lo = 0.0;
    if (ci.hi > 1.0)
        ci.hi = 1.0;
    return ci;
}

} // namespace dualdec
