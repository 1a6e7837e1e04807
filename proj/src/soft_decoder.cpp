#include "dualdec/soft_decoder.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dualdec/errors.hpp"

namespace dualdec {

namespace {

void require_binary(const DualCheckSet& checks) {
    if (checks.field->m() != 1)
        throw ParameterOutOfRange("soft decoding requires a binary code");
}

// Accumulate the contributions of every shift of one check into varphi.
// For a shift s the check support is { s - b_t mod n }; each member position
// receives the extrinsic minimum (second minimum at the argmin itself) with
// the parity sign of the whole support.
void accumulate_check(const SoftVector& y, const DualCheck& check, int n,
                      RhoConvention convention, std::vector<double>& out) {
    const auto& supp = check.support;
    const int w = static_cast<int>(supp.size());
    std::vector<int> members(static_cast<std::size_t>(w));
    constexpr double kInf = std::numeric_limits<double>::infinity();
    for (int s = 0; s < n; ++s) {
        unsigned parity = 0;
        double min1 = kInf, min2 = kInf;
        int min_pos = -1;
        for (int t = 0; t < w; ++t) {
            int pos = s - supp[static_cast<std::size_t>(t)];
            if (pos < 0)
                pos += n;
            members[static_cast<std::size_t>(t)] = pos;
            parity ^= y.hard_bit(pos);
            double mag = y.magnitude(pos);
            if (mag < min1) {
                min2 = min1;
                min1 = mag;
                min_pos = pos;
            } else if (mag < min2) {
                min2 = mag;
            }
        }
        for (int t = 0; t < w; ++t) {
            int j = members[static_cast<std::size_t>(t)];
            double ext_min = j == min_pos ? min2 : min1;
            double value = ext_min / y.magnitude(j);
            unsigned sign_bit = parity;
            if (convention == RhoConvention::ExtrinsicProduct)
                sign_bit ^= y.hard_bit(j);
            out[static_cast<std::size_t>(j)] += sign_bit ? -value : value;
        }
    }
}

} // namespace

CyclicPoly SoftVector::hard_poly(const Field& binary_field) const {
    CyclicPoly p(binary_field, size());
    for (int j = 0; j < size(); ++j)
        if (hard_bit(j))
            p.set_coeff(j, 1);
    return p;
}

double rho(const SoftVector& y, int j, int l, int i, const DualCheckSet& checks,
           RhoConvention convention) {
    require_binary(checks);
    auto support = check_support(j, l, i, checks);
    unsigned parity = 0;
    double ext_min = -1.0;
    for (std::size_t t = 0; t < support.size(); ++t) {
        int pos = support[t];
        parity ^= y.hard_bit(pos);
        if (static_cast<int>(t) != i) { // the l = i offset is position j itself
            double mag = y.magnitude(pos);
            if (ext_min < 0.0 || mag < ext_min)
                ext_min = mag;
        }
    }
    unsigned sign_bit = parity;
    if (convention == RhoConvention::ExtrinsicProduct)
        sign_bit ^= y.hard_bit(j);
    double value = ext_min / y.magnitude(j);
    return sign_bit ? -value : value;
}

std::vector<double> varphi(const SoftVector& y, const DualCheckSet& checks,
                           RhoConvention convention) {
    require_binary(checks);
    if (y.size() != checks.n)
        throw LengthMismatch("soft vector length differs from the check set");
    std::vector<double> out(static_cast<std::size_t>(checks.n), 0.0);
    for (const DualCheck& check : checks.checks)
        accumulate_check(y, check, checks.n, convention, out);
    return out;
}

DecodeReport decode_soft_flip(const SoftVector& y, const CodeSpec& spec,
                              const DualCheckSet& checks, const SoftDecodeOptions& options) {
    require_binary(checks);
    const int n = checks.n;
    if (y.size() != n)
        throw LengthMismatch("soft vector length differs from the check set");

    // Magnitudes never change; only signs flip.
    SoftVector work = y;
    for (int j = 0; j < n; ++j)
        work.y[static_cast<std::size_t>(j)] =
            (y.hard_bit(j) ? -1.0 : 1.0) * y.magnitude(j);

    CyclicPoly hard = y.hard_poly(*spec.symbol_field);
    auto ws = syndromes(hard, checks);
    DecodeReport report;
    CyclicPoly flipped_positions(*spec.symbol_field, n);

    auto finish_corrected = [&](CyclicPoly current_hard) {
        report.status = DecodeStatus::Corrected;
        report.error = add(hard, current_hard);
        report.codeword = std::move(current_hard);
    };

    if (all_zero(ws)) {
        finish_corrected(hard);
        return report;
    }

    for (int round = 1; round <= options.max_rounds; ++round) {
        report.iterations = round;
        auto phi_soft = varphi(work, checks, options.rho_convention);

        std::vector<int> candidates;
        for (int j = 0; j < n; ++j)
            if (phi_soft[static_cast<std::size_t>(j)] < 0.0)
                candidates.push_back(j);
        if (candidates.empty())
            break; // no position contradicts its checks any more
        std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            return phi_soft[static_cast<std::size_t>(a)] < phi_soft[static_cast<std::size_t>(b)];
        });
        if (static_cast<int>(candidates.size()) > options.mu)
            candidates.resize(static_cast<std::size_t>(options.mu));

        for (int j : candidates) {
            work.y[static_cast<std::size_t>(j)] = -work.y[static_cast<std::size_t>(j)];
            flip(ws, j, checks);
            flipped_positions.set_coeff(j, flipped_positions.coeff(j) ^ 1u);
            report.flips.push_back({j, 1});
            if (all_zero(ws)) {
                finish_corrected(add(hard, flipped_positions));
                return report;
            }
        }
    }

    report.status = DecodeStatus::Failed;
    report.error = flipped_positions;
    return report;
}

DecodeReport decode_soft_infoset(const SoftVector& y, const CodeSpec& spec,
                                 const DualCheckSet& checks, const SoftDecodeOptions& options) {
    require_binary(checks);
    auto phi_soft = varphi(y, checks, options.rho_convention);

    std::vector<int> order(phi_soft.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return phi_soft[static_cast<std::size_t>(a)] > phi_soft[static_cast<std::size_t>(b)];
    });

    HardDecodeOptions hard_options;
    hard_options.k0 = options.k0;
    hard_options.tie_break = options.tie_break;
    hard_options.seed = options.seed;
    return decode_info_set_ranked(y.hard_poly(*spec.symbol_field), spec, order, hard_options);
}

} // namespace dualdec
