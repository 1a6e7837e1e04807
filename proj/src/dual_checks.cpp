#include "dualdec/dual_checks.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <set>

#include "dualdec/errors.hpp"
#include "dualdec/rng.hpp"

namespace dualdec {

namespace {

std::vector<gf_elem> dense_key(const CyclicPoly& p) {
    std::vector<gf_elem> key(static_cast<std::size_t>(p.n()));
    for (int i = 0; i < p.n(); ++i)
        key[static_cast<std::size_t>(i)] = p.coeff(i);
    return key;
}

// (support, coefficient sequence) as the comparison key for canonical forms.
std::pair<std::vector<int>, std::vector<gf_elem>> canonical_key(const CyclicPoly& p) {
    auto supp = p.support();
    std::vector<gf_elem> coeffs;
    coeffs.reserve(supp.size());
    for (int i : supp)
        coeffs.push_back(p.coeff(i));
    return {std::move(supp), std::move(coeffs)};
}

DualCheck make_check(CyclicPoly poly) {
    DualCheck check{std::move(poly), {}, {}};
    check.support = check.poly.support();
    for (int i : check.support)
        check.coeffs.push_back(check.poly.coeff(i));
    return check;
}

DualCheckSet finalize(const CodeSpec& spec, int weight, std::vector<CyclicPoly> polys) {
    std::sort(polys.begin(), polys.end(), [](const CyclicPoly& a, const CyclicPoly& b) {
        return canonical_key(a) < canonical_key(b);
    });
    DualCheckSet out;
    out.field = spec.symbol_field;
    out.n = spec.n;
    out.weight = weight;
    out.checks.reserve(polys.size());
    for (auto& p : polys)
        out.checks.push_back(make_check(std::move(p)));
    validate_checks(spec, out);
    return out;
}

// Kernel vector of the homogeneous system M v = 0 when the kernel has
// dimension exactly 1; M is rows x cols over the field, cols = rows + 1.
std::optional<std::vector<gf_elem>> kernel_if_unique(const Field& f,
                                                     std::vector<std::vector<gf_elem>> M) {
    const int rows = static_cast<int>(M.size());
    const int cols = rows ? static_cast<int>(M[0].size()) : 0;
    std::vector<int> pivot_col_of_row;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(M[static_cast<std::size_t>(pivot)], M[static_cast<std::size_t>(rank)]);
        gf_elem inv = f.inv(M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]);
        for (int cc = c; cc < cols; ++cc)
            M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)] =
                f.mul(M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)], inv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank)
                continue;
            gf_elem factor = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (!factor)
                continue;
            for (int cc = c; cc < cols; ++cc)
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] ^=
                    f.mul(factor, M[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)]);
        }
        pivot_col_of_row.push_back(c);
        ++rank;
    }
    if (cols - rank != 1)
        return std::nullopt;

    // Identify the single free column and back-substitute with value 1.
    std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
    for (int c : pivot_col_of_row)
        is_pivot[static_cast<std::size_t>(c)] = 1;
    int free_col = 0;
    while (is_pivot[static_cast<std::size_t>(free_col)])
        ++free_col;
    std::vector<gf_elem> v(static_cast<std::size_t>(cols), 0);
    v[static_cast<std::size_t>(free_col)] = 1;
    for (int r = 0; r < rank; ++r) {
        int c = pivot_col_of_row[static_cast<std::size_t>(r)];
        v[static_cast<std::size_t>(c)] =
            M[static_cast<std::size_t>(r)][static_cast<std::size_t>(free_col)]; // -x = x
    }
    return v;
}

} // namespace

CyclicPoly cyclic_canonical(const CyclicPoly& b) {
    if (b.is_zero())
        throw ZeroPolynomial("cyclic canonical form of zero");
    const Field& f = b.field();
    std::optional<CyclicPoly> best;
    std::pair<std::vector<int>, std::vector<gf_elem>> best_key;
    for (int i : b.support()) {
        CyclicPoly candidate = shift(b, -i);
        if (f.m() > 1)
            candidate = scale(candidate, f.inv(candidate.coeff(0)));
        auto key = canonical_key(candidate);
        if (!best || key < best_key) {
            best = std::move(candidate);
            best_key = std::move(key);
        }
    }
    return *best;
}

std::vector<CyclicPoly> orbit_expand(const CyclicPoly& b) {
    std::set<std::vector<gf_elem>> seen;
    std::vector<CyclicPoly> members;
    std::vector<CyclicPoly> frontier{b};
    seen.insert(dense_key(b));
    while (!frontier.empty()) {
        CyclicPoly p = std::move(frontier.back());
        frontier.pop_back();
        for (CyclicPoly next : {shift(p, 1), square_map(p)}) {
            auto key = dense_key(next);
            if (seen.insert(std::move(key)).second)
                frontier.push_back(std::move(next));
        }
        members.push_back(std::move(p));
    }
    return members;
}

DualCheckSet mds_dual_min_weight(const CodeSpec& spec) {
    if (spec.family != CodeFamily::RS)
        throw ParameterOutOfRange("MDS dual enumeration applies to RS codes");
    const Field& f = *spec.locator_field;
    const int n = spec.n;
    const int k = spec.k;
    const int d_perp = spec.dual_min_weight_mds();

    std::map<std::vector<gf_elem>, CyclicPoly> classes;

    // Enumerate supports {0} + (d_perp-1)-subsets of {1..n-1}.
    std::vector<int> pick(static_cast<std::size_t>(d_perp - 1));
    for (int i = 0; i < d_perp - 1; ++i)
        pick[static_cast<std::size_t>(i)] = i + 1;
    bool done = d_perp - 1 > n - 1;
    while (!done) {
        std::vector<int> support{0};
        support.insert(support.end(), pick.begin(), pick.end());

        // A dual codeword vanishes at the parity-check roots alpha^{-j},
        // j = 0..k-1; solve for its coefficients on this support.
        std::vector<std::vector<gf_elem>> M(static_cast<std::size_t>(k),
                                            std::vector<gf_elem>(support.size()));
        for (int j = 0; j < k; ++j)
            for (std::size_t t = 0; t < support.size(); ++t)
                M[static_cast<std::size_t>(j)][t] =
                    f.exp(-static_cast<long long>(j) * support[t]);
        if (auto v = kernel_if_unique(f, std::move(M))) {
            bool full_weight = std::all_of(v->begin(), v->end(), [](gf_elem c) { return c != 0; });
            if (full_weight) {
                CyclicPoly b(*spec.symbol_field, n);
                for (std::size_t t = 0; t < support.size(); ++t)
                    b.set_coeff(support[t], (*v)[t]);
                CyclicPoly canon = cyclic_canonical(b);
                classes.emplace(dense_key(canon), std::move(canon));
            }
        }

        // next combination
        int idx = d_perp - 2;
        while (idx >= 0 && pick[static_cast<std::size_t>(idx)] == n - (d_perp - 1) + idx)
            --idx;
        if (idx < 0) {
            done = true;
        } else {
            ++pick[static_cast<std::size_t>(idx)];
            for (int t = idx + 1; t < d_perp - 1; ++t)
                pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
        }
    }

    std::vector<CyclicPoly> polys;
    polys.reserve(classes.size());
    for (auto& [key, poly] : classes)
        polys.push_back(std::move(poly));
    return finalize(spec, d_perp, std::move(polys));
}

DualCheckSet binary_low_weight_search(const CodeSpec& spec, int target_w, long long budget,
                                      std::uint64_t seed) {
    if (!spec.binary())
        throw ParameterOutOfRange("low-weight search expects a binary code");
    if (budget < 1)
        throw ParameterOutOfRange("search budget must be positive");
    const int n = spec.n;
    const int dim = n - spec.k; // dimension of the dual
    const std::size_t words = static_cast<std::size_t>((n + 63) / 64);

    // Basis of the dual: cyclic shifts of the parity-check polynomial.
    std::vector<std::vector<std::uint64_t>> basis;
    basis.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
        basis.push_back(shift(spec.h, i).words());

    auto bit = [words](const std::vector<std::uint64_t>& row, int c) {
        return (row[static_cast<std::size_t>(c) >> 6] >> (c & 63)) & 1ull;
    };
    auto xor_into = [words](std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
        for (std::size_t w = 0; w < words; ++w)
            dst[w] ^= src[w];
    };
    auto weight_of = [words](const std::vector<std::uint64_t>& row) {
        int total = 0;
        for (std::size_t w = 0; w < words; ++w)
            total += std::popcount(row[w]);
        return total;
    };

    std::map<std::vector<gf_elem>, CyclicPoly> classes;
    long long hits_since_new = 0;
    bool found_any = false;

    auto record_hit = [&](const std::vector<std::uint64_t>& word) {
        found_any = true;
        CyclicPoly b(*spec.symbol_field, n);
        for (int i = 0; i < n; ++i)
            if (bit(word, i))
                b.set_coeff(i, 1);
        CyclicPoly canon = cyclic_canonical(b);
        auto key = dense_key(canon);
        if (classes.count(key)) {
            ++hits_since_new;
            return;
        }
        // New class: harvest its whole shift/squaring orbit in one go.
        bool inserted_new = false;
        for (const CyclicPoly& member : orbit_expand(b)) {
            CyclicPoly member_canon = cyclic_canonical(member);
            if (classes.emplace(dense_key(member_canon), std::move(member_canon)).second)
                inserted_new = true;
        }
        if (inserted_new)
            hits_since_new = 0;
        else
            ++hits_since_new;
    };

    std::vector<int> columns(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        columns[static_cast<std::size_t>(i)] = i;

    for (long long restart = 0; restart < budget; ++restart) {
        Rng rng = Rng::for_trial(seed, 0x6d696e65ull, static_cast<std::uint64_t>(restart));
        for (int i = n - 1; i > 0; --i)
            std::swap(columns[static_cast<std::size_t>(i)],
                      columns[rng.below(static_cast<std::uint32_t>(i + 1))]);

        auto rows = basis;
        int rank = 0;
        for (int c : columns) {
            int pivot = -1;
            for (int r = rank; r < dim; ++r) {
                if (bit(rows[static_cast<std::size_t>(r)], c)) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0)
                continue;
            std::swap(rows[static_cast<std::size_t>(pivot)], rows[static_cast<std::size_t>(rank)]);
            for (int r = 0; r < dim; ++r)
                if (r != rank && bit(rows[static_cast<std::size_t>(r)], c))
                    xor_into(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(rank)]);
            if (++rank == dim)
                break;
        }

        // Codewords with at most 3 ones on the information set.
        std::vector<std::uint64_t> cand(words);
        for (int i = 0; i < dim; ++i) {
            if (weight_of(rows[static_cast<std::size_t>(i)]) == target_w)
                record_hit(rows[static_cast<std::size_t>(i)]);
            for (int j = i + 1; j < dim; ++j) {
                cand = rows[static_cast<std::size_t>(i)];
                xor_into(cand, rows[static_cast<std::size_t>(j)]);
                if (weight_of(cand) == target_w)
                    record_hit(cand);
                for (int l = j + 1; l < dim; ++l) {
                    auto triple = cand;
                    xor_into(triple, rows[static_cast<std::size_t>(l)]);
                    if (weight_of(triple) == target_w)
                        record_hit(triple);
                }
            }
        }

        if (hits_since_new >= 20 && restart + 1 >= budget / 2)
            break;
    }

    if (classes.empty())
        throw NoneFound("no weight-" + std::to_string(target_w) +
                        " dual codeword found within the budget" +
                        (found_any ? "" : " (no hits at all)"));

    std::vector<CyclicPoly> polys;
    polys.reserve(classes.size());
    for (auto& [key, poly] : classes)
        polys.push_back(std::move(poly));
    return finalize(spec, target_w, std::move(polys));
}

DualCheckSet checks_from_polys(const CodeSpec& spec, const std::vector<CyclicPoly>& polys) {
    if (polys.empty())
        throw ParameterOutOfRange("check set must not be empty");
    int weight = polys.front().weight();
    std::vector<CyclicPoly> normalized;
    normalized.reserve(polys.size());
    for (const CyclicPoly& p : polys) {
        if (p.coeff(0) == 0)
            throw ParameterOutOfRange("checks must have a nonzero coefficient at position 0");
        if (p.weight() != weight)
            throw ParameterOutOfRange("checks must all have the same weight");
        normalized.push_back(p.coeff(0) == 1 ? p : scale(p, p.field().inv(p.coeff(0))));
    }
    return finalize(spec, weight, std::move(normalized));
}

void validate_checks(const CodeSpec& spec, const DualCheckSet& checks) {
    for (const DualCheck& check : checks.checks) {
        if (check.poly.weight() != checks.weight)
            throw ParameterOutOfRange("check weight differs from the set weight");
        if (check.support.empty() || check.support.front() != 0 || check.coeffs.front() != 1)
            throw ParameterOutOfRange("check is not normalized at position 0");
        for (const CyclicPoly& row : spec.gen_matrix)
            if (!mul_mod(row, check.poly).is_zero())
                throw ParameterOutOfRange("check does not annihilate the code");
    }
}

} // namespace dualdec
