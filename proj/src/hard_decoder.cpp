#include "dualdec/hard_decoder.hpp"

#include <algorithm>
#include <numeric>

#include "dualdec/errors.hpp"
#include "dualdec/rng.hpp"

namespace dualdec {

namespace {

void require_binary(const DualCheckSet& checks) {
    if (checks.field->m() != 1)
        throw ParameterOutOfRange("counting measure requires a binary code");
}

void require_nonbinary(const DualCheckSet& checks) {
    if (checks.field->m() == 1)
        throw NotNonbinary("operation requires a nonbinary code");
}

// Positions ordered by count (descending or ascending); equal counts keep
// index order, or a seeded shuffle when requested.
std::vector<int> ranked_positions(const std::vector<int>& counts, bool descending,
                                  TieBreak tie_break, std::uint64_t seed) {
    std::vector<int> order(counts.size());
    std::iota(order.begin(), order.end(), 0);
    if (tie_break == TieBreak::SeededRandom) {
        Rng rng(seed ^ 0x72616e6bull);
        for (int i = static_cast<int>(order.size()) - 1; i > 0; --i)
            std::swap(order[static_cast<std::size_t>(i)],
                      order[rng.below(static_cast<std::uint32_t>(i + 1))]);
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int ca = counts[static_cast<std::size_t>(a)];
        int cb = counts[static_cast<std::size_t>(b)];
        return descending ? ca > cb : ca < cb;
    });
    return order;
}

PhiMatrix phi_matrix_from_syndromes(const std::vector<CyclicPoly>& ws,
                                    const DualCheckSet& checks) {
    const Field& f = *checks.field;
    const int n = checks.n;
    PhiMatrix mat;
    mat.n = n;
    mat.rows.assign(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int l = 0; l < checks.count(); ++l) {
        const DualCheck& check = checks.checks[static_cast<std::size_t>(l)];
        const CyclicPoly& w = ws[static_cast<std::size_t>(l)];
        for (std::size_t i = 0; i < check.support.size(); ++i) {
            const gf_elem beta_inv = f.inv(check.coeffs[i]);
            int pos = check.support[i]; // (j + b_i) mod n, starting at j = 0
            for (int j = 0; j < n; ++j) {
                gf_elem v = f.mul(w.coeff(pos), beta_inv);
                if (v == 0)
                    mat.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] += 1;
                else
                    mat.rows[static_cast<std::size_t>(f.log(v))][static_cast<std::size_t>(j)] += 1;
                if (++pos == n)
                    pos = 0;
            }
        }
    }
    return mat;
}

} // namespace

int PhiProfile::max_value() const {
    return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

std::vector<CyclicPoly> syndromes(const CyclicPoly& r, const DualCheckSet& checks) {
    if (r.n() != checks.n)
        throw LengthMismatch("received word length differs from the check set");
    std::vector<CyclicPoly> ws;
    ws.reserve(static_cast<std::size_t>(checks.count()));
    for (const DualCheck& check : checks.checks)
        ws.push_back(mul_mod(r, check.poly));
    return ws;
}

bool all_zero(const std::vector<CyclicPoly>& ws) {
    for (const CyclicPoly& w : ws)
        if (!w.is_zero())
            return false;
    return true;
}

std::vector<int> check_support(int j, int l, int i, const DualCheckSet& checks) {
    if (l < 0 || l >= checks.count())
        throw IndexOutOfRange("check index " + std::to_string(l));
    const DualCheck& check = checks.checks[static_cast<std::size_t>(l)];
    if (i < 0 || i >= static_cast<int>(check.support.size()))
        throw IndexOutOfRange("support index " + std::to_string(i));
    if (j < 0 || j >= checks.n)
        throw IndexOutOfRange("position " + std::to_string(j));
    const int n = checks.n;
    const int b_i = check.support[static_cast<std::size_t>(i)];
    std::vector<int> out;
    out.reserve(check.support.size());
    for (int b_t : check.support) {
        int pos = (j + b_i - b_t) % n;
        if (pos < 0)
            pos += n;
        out.push_back(pos);
    }
    return out;
}

PhiProfile phi_from_syndromes(const std::vector<CyclicPoly>& ws, const DualCheckSet& checks) {
    require_binary(checks);
    const int n = checks.n;
    PhiProfile prof;
    prof.counts.assign(static_cast<std::size_t>(n), 0);
    for (int l = 0; l < checks.count(); ++l) {
        const CyclicPoly& w = ws[static_cast<std::size_t>(l)];
        for (int b_i : checks.checks[static_cast<std::size_t>(l)].support) {
            int pos = b_i; // (j + b_i) mod n as j walks 0..n-1
            for (int j = 0; j < n; ++j) {
                prof.counts[static_cast<std::size_t>(j)] += w.coeff(pos);
                if (++pos == n)
                    pos = 0;
            }
        }
    }
    return prof;
}

PhiProfile phi(const CyclicPoly& r, const DualCheckSet& checks) {
    return phi_from_syndromes(syndromes(r, checks), checks);
}

PhiProfile phi_via_supports(const CyclicPoly& r, const DualCheckSet& checks, PhiOpCount* ops) {
    require_binary(checks);
    if (r.n() != checks.n)
        throw LengthMismatch("received word length differs from the check set");
    const int n = checks.n;
    PhiProfile prof;
    prof.counts.assign(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        for (const DualCheck& check : checks.checks) {
            for (int b_i : check.support) {
                unsigned parity = 0;
                for (int b_t : check.support) {
                    int pos = (j + b_i - b_t) % n;
                    if (pos < 0)
                        pos += n;
                    parity ^= r.coeff(pos) & 1u;
                    if (ops)
                        ++ops->xor_ops;
                }
                prof.counts[static_cast<std::size_t>(j)] += static_cast<int>(parity);
                if (ops)
                    ++ops->increments;
            }
        }
    }
    return prof;
}

std::vector<int> delta(const CyclicPoly& r, const DualCheckSet& checks) {
    require_binary(checks);
    const int n = checks.n;
    auto ws = syndromes(r, checks);
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (int l = 0; l < checks.count(); ++l) {
        const CyclicPoly& w = ws[static_cast<std::size_t>(l)];
        const CyclicPoly& b = checks.checks[static_cast<std::size_t>(l)].poly;
        const int base_weight = w.weight();
        for (int j = 0; j < n; ++j) {
            CyclicPoly flipped = w;
            flipped.add_shifted_in_place(b, j);
            out[static_cast<std::size_t>(j)] += flipped.weight() - base_weight;
        }
    }
    return out;
}

void flip(std::vector<CyclicPoly>& ws, int j, const DualCheckSet& checks) {
    for (int l = 0; l < checks.count(); ++l)
        ws[static_cast<std::size_t>(l)].add_shifted_in_place(
            checks.checks[static_cast<std::size_t>(l)].poly, j);
}

DecodeReport decode_iter_reduce(const CyclicPoly& r, const DualCheckSet& checks,
                                const HardDecodeOptions& options) {
    require_binary(checks);
    DecodeReport report;
    auto ws = syndromes(r, checks);
    CyclicPoly error_estimate(r.field(), r.n());

    if (all_zero(ws)) {
        report.status = DecodeStatus::Corrected;
        report.codeword = r;
        report.error = std::move(error_estimate);
        return report;
    }

    for (int round = 1; round <= options.max_rounds; ++round) {
        report.iterations = round;
        PhiProfile prof = phi_from_syndromes(ws, checks);
        auto order = ranked_positions(prof.counts, true, options.tie_break,
                                      options.seed + static_cast<std::uint64_t>(round));
        int flips_this_round = options.mu;
        if (options.adaptive) {
            const int top = prof.max_value();
            flips_this_round = 0;
            for (int j : order) {
                if (prof.counts[static_cast<std::size_t>(j)] != top)
                    break;
                ++flips_this_round;
            }
        }
        for (int t = 0; t < flips_this_round && t < static_cast<int>(order.size()); ++t) {
            int j = order[static_cast<std::size_t>(t)];
            flip(ws, j, checks);
            error_estimate.set_coeff(j, error_estimate.coeff(j) ^ 1u);
            report.flips.push_back({j, 1});
            if (all_zero(ws)) {
                report.status = DecodeStatus::Corrected;
                report.codeword = add(r, error_estimate);
                report.error = std::move(error_estimate);
                return report;
            }
        }
    }

    report.status = DecodeStatus::Failed;
    report.error = std::move(error_estimate);
    return report;
}

DecodeReport decode_info_set(const CyclicPoly& r, const CodeSpec& spec,
                             const DualCheckSet& checks, const HardDecodeOptions& options) {
    require_binary(checks);
    PhiProfile prof = phi(r, checks);
    auto order = ranked_positions(prof.counts, false, options.tie_break, options.seed);
    return decode_info_set_ranked(r, spec, order, options);
}

DecodeReport decode_info_set_ranked(const CyclicPoly& r, const CodeSpec& spec,
                                    const std::vector<int>& order,
                                    const HardDecodeOptions& options) {
    if (!spec.binary())
        throw ParameterOutOfRange("information-set re-encoding requires a binary code");
    const int n = spec.n;
    const int k = spec.k;
    const int pool_size = options.k0 < 0 ? n : std::min(n, k + options.k0);

    // Reduce the generator matrix to systematic form on the first k pool
    // positions that extend the rank; surplus positions step in when a column
    // is dependent.
    std::vector<CyclicPoly> rows = spec.gen_matrix;
    std::vector<int> selected;
    selected.reserve(static_cast<std::size_t>(k));
    int rank = 0;
    for (int t = 0; t < pool_size && rank < k; ++t) {
        const int col = order[static_cast<std::size_t>(t)];
        int pivot = -1;
        for (int row = rank; row < k; ++row) {
            if (rows[static_cast<std::size_t>(row)].coeff(col)) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
        for (int row = 0; row < k; ++row)
            if (row != rank && rows[static_cast<std::size_t>(row)].coeff(col))
                rows[static_cast<std::size_t>(row)].add_in_place(rows[static_cast<std::size_t>(rank)]);
        selected.push_back(col);
        ++rank;
    }
    if (rank < k)
        throw RankDeficient("no rank-" + std::to_string(k) + " subset among the " +
                            std::to_string(pool_size) + " most reliable positions");

    // Re-encode the received symbols on the selected set, then the k
    // single-flip variants.
    CyclicPoly base(r.field(), n);
    for (int t = 0; t < k; ++t)
        if (r.coeff(selected[static_cast<std::size_t>(t)]))
            base.add_in_place(rows[static_cast<std::size_t>(t)]);

    std::vector<CyclicPoly> candidates;
    candidates.reserve(static_cast<std::size_t>(k) + 1);
    candidates.push_back(base);
    for (int t = 0; t < k; ++t)
        candidates.push_back(add(base, rows[static_cast<std::size_t>(t)]));

    int best_distance = n + 1;
    int best_index = -1;
    int ties = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        int dist = add(candidates[c], r).weight();
        if (dist < best_distance) {
            best_distance = dist;
            best_index = static_cast<int>(c);
            ties = 1;
        } else if (dist == best_distance) {
            ++ties;
        }
    }
    if (ties > 1 && options.tie_break == TieBreak::SeededRandom) {
        Rng rng(options.seed ^ 0x696e666full);
        int which = static_cast<int>(rng.below(static_cast<std::uint32_t>(ties)));
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            if (add(candidates[c], r).weight() == best_distance && which-- == 0) {
                best_index = static_cast<int>(c);
                break;
            }
        }
    }

    DecodeReport report;
    report.iterations = 1;
    report.status = ties > 1 ? DecodeStatus::Ambiguous : DecodeStatus::Corrected;
    report.codeword = candidates[static_cast<std::size_t>(best_index)];
    report.error = add(*report.codeword, r);
    for (int j : report.error->support())
        report.flips.push_back({j, 1});
    return report;
}

PhiMatrix phi_matrix(const CyclicPoly& r, const DualCheckSet& checks) {
    require_nonbinary(checks);
    if (r.n() != checks.n)
        throw LengthMismatch("received word length differs from the check set");
    return phi_matrix_from_syndromes(syndromes(r, checks), checks);
}

DecodeReport decode_nonbinary(const CyclicPoly& r, const DualCheckSet& checks,
                              NonbinaryStrategy strategy, int max_rounds) {
    require_nonbinary(checks);
    const Field& f = *checks.field;
    const int n = checks.n;

    DecodeReport report;
    CyclicPoly estimate = r;

    for (int round = 0; round <= max_rounds; ++round) {
        auto ws = syndromes(estimate, checks);
        if (all_zero(ws)) {
            report.status = DecodeStatus::Corrected;
            report.error = add(r, estimate);
            report.codeword = std::move(estimate);
            return report;
        }
        if (round == max_rounds)
            break;
        report.iterations = round + 1;

        PhiMatrix mat = phi_matrix_from_syndromes(ws, checks);
        int best_row = -1;
        int best_col = -1;
        long long best_score = -1;
        auto value_row_max = [&](int j) {
            int row = 0;
            for (int i = 1; i < n; ++i)
                if (mat.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] >
                    mat.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)])
                    row = i;
            return row;
        };
        switch (strategy) {
        case NonbinaryStrategy::MaxEntry:
            for (int j = 0; j < n; ++j) {
                int row = value_row_max(j);
                int count = mat.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
                if (count > best_score) {
                    best_score = count;
                    best_row = row;
                    best_col = j;
                }
            }
            break;
        case NonbinaryStrategy::ZeroRow:
            for (int j = 0; j < n; ++j) {
                // Fewest zero observations marks the most suspicious column.
                long long score = -mat.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
                if (best_col < 0 || score > best_score) {
                    best_score = score;
                    best_col = j;
                }
            }
            best_row = value_row_max(best_col);
            break;
        case NonbinaryStrategy::Combined:
            for (int j = 0; j < n; ++j) {
                int row = value_row_max(j);
                long long score =
                    static_cast<long long>(
                        mat.rows[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)]) -
                    mat.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
                if (best_col < 0 || score > best_score) {
                    best_score = score;
                    best_row = row;
                    best_col = j;
                }
            }
            break;
        }

        if (best_row < 0 ||
            mat.rows[static_cast<std::size_t>(best_row)][static_cast<std::size_t>(best_col)] == 0)
            break; // no evidence for any error value

        const gf_elem value = f.exp(best_row);
        estimate.set_coeff(best_col, estimate.coeff(best_col) ^ value);
        report.flips.push_back({best_col, value});
    }

    report.status = DecodeStatus::Failed;
    report.error = add(r, estimate);
    return report;
}

} // namespace dualdec
