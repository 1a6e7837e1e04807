#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dualdec/code_spec.hpp"
#include "dualdec/errors.hpp"
#include "dualdec/rng.hpp"

using namespace dualdec;

namespace {

// Rank of a k x k submatrix over the symbol field, for the MDS spot check.
int column_rank(const CodeSpec& spec, const std::vector<int>& cols) {
    const Field& f = *spec.symbol_field;
    std::vector<std::vector<gf_elem>> m;
    for (const CyclicPoly& row : spec.gen_matrix) {
        std::vector<gf_elem> r;
        for (int c : cols)
            r.push_back(row.coeff(c));
        m.push_back(std::move(r));
    }
    int rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < static_cast<int>(m.size()); ++c) {
        int pivot = -1;
        for (std::size_t r = static_cast<std::size_t>(rank); r < m.size(); ++r)
            if (m[r][c]) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (static_cast<int>(r) == rank || !m[r][c])
                continue;
            gf_elem factor = f.div(m[r][c], m[static_cast<std::size_t>(rank)][c]);
            for (std::size_t cc = 0; cc < cols.size(); ++cc)
                m[r][cc] ^= f.mul(factor, m[static_cast<std::size_t>(rank)][cc]);
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("cyclotomic cosets") {
    auto cosets63 = cyclotomic_cosets(63, 6);
    std::vector<int> reps;
    for (const auto& coset : cosets63)
        reps.push_back(coset.front());
    std::sort(reps.begin(), reps.end());
    CHECK(reps == std::vector<int>{0, 1, 3, 5, 7, 9, 11, 13, 15, 21, 23, 27, 31});

    auto k1 = *std::find_if(cosets63.begin(), cosets63.end(),
                            [](const auto& c) { return c.front() == 1; });
    std::sort(k1.begin(), k1.end());
    CHECK(k1 == std::vector<int>{1, 2, 4, 8, 16, 32});

    auto cosets15 = cyclotomic_cosets(15, 4);
    auto k5 = *std::find_if(cosets15.begin(), cosets15.end(),
                            [](const auto& c) { return c.front() == 5; });
    std::sort(k5.begin(), k5.end());
    CHECK(k5 == std::vector<int>{5, 10});
    CHECK(4 % k5.size() == 0);

    // partition of 0..n-1
    std::set<int> all;
    std::size_t total = 0;
    for (const auto& coset : cosets63) {
        total += coset.size();
        all.insert(coset.begin(), coset.end());
        CHECK(6 % coset.size() == 0);
    }
    CHECK(total == 63);
    CHECK(all.size() == 63);

    CHECK_THROWS_AS(cyclotomic_cosets(62, 6), ParameterOutOfRange);
}

TEST_CASE("RS generator polynomial") {
    auto f16 = make_field_shared(4);

    CodeSpec full = rs_code(f16, 15, 15);
    CHECK(full.g.degree() == 0);
    CHECK(full.g.coeff(0) == 1);
    CHECK(full.d_designed == 1);

    CodeSpec rs = rs_code(f16, 15, 5);
    CHECK(rs.g.degree() == 10);
    CHECK(rs.k == 5);
    CHECK(rs.d_designed == 11);
    for (int j = 5; j < 15; ++j)
        CHECK(eval_power(rs.g, *f16, -j) == 0);
    for (int j = 0; j < 5; ++j)
        CHECK(eval_power(rs.g, *f16, -j) != 0);

    // g h = x^n - 1, i.e. zero in the quotient ring
    CHECK(mul_mod(rs.g, rs.h).is_zero());
    CHECK(rs.h.degree() == 5);

    // parity-check polynomial generates the weight-(k+1) MDS dual
    CHECK(rs.h.weight() == rs.k + 1);

    CHECK_THROWS_AS(rs_code(f16, 15, 0), ParameterOutOfRange);
    CHECK_THROWS_AS(rs_code(f16, 14, 5), ParameterOutOfRange);
}

TEST_CASE("narrow-sense BCH(63,24,15)") {
    auto f64 = make_field_shared(6);
    CodeSpec bch = bch_code(f64, 63, {1, 3, 5, 7, 9, 11, 13});
    CHECK(bch.k == 24);
    CHECK(bch.d_designed == 15);
    CHECK(bch.n == 63);
    CHECK(bch.binary());
    CHECK(bch.g.degree() == 39);
    CHECK(mul_mod(bch.g, bch.h).is_zero());
    CHECK(static_cast<int>(bch.gen_matrix.size()) == 24);

    // d - 1 consecutive roots: exponents 49..62 all vanish
    for (int e = 49; e <= 62; ++e)
        CHECK(eval_power(bch.g, *f64, e) == 0);
    CHECK(eval_power(bch.g, *f64, 48) != 0);
    CHECK(eval_power(bch.g, *f64, 0) != 0);
}

TEST_CASE("empty coset selection gives the trivial code") {
    auto f64 = make_field_shared(6);
    CodeSpec trivial = bch_code(f64, 63, {});
    CHECK(trivial.k == 63);
    CHECK(trivial.g.degree() == 0);
    CHECK(trivial.d_designed == 1);
}

TEST_CASE("punctured RM(2,6)") {
    CodeSpec rm = punctured_rm_code(2, 6);
    CHECK(rm.family == CodeFamily::PuncturedRM);
    CHECK(rm.coset_reps == std::vector<int>{1, 3, 5, 7, 9, 11, 13, 21});
    CHECK(rm.g.degree() == 41);
    CHECK(rm.k == 22);
    CHECK(rm.d_designed == 15);
    // representative 15 = 1111b has weight 4 and is excluded
    CHECK(std::find(rm.coset_reps.begin(), rm.coset_reps.end(), 15) == rm.coset_reps.end());
}

TEST_CASE("punctured RM corner cases") {
    // r = m - 1: no representative has binary weight < 1
    CodeSpec trivial = punctured_rm_code(5, 6);
    CHECK(trivial.k == 63);
    CHECK(trivial.coset_reps.empty());

    // r = 1, m = 3 is the cyclic Hamming code
    CodeSpec hamming = punctured_rm_code(1, 3);
    CHECK(hamming.n == 7);
    CHECK(hamming.k == 4);
    CHECK(hamming.d_designed == 3);

    CHECK_THROWS_AS(punctured_rm_code(6, 6), ParameterOutOfRange);
}

TEST_CASE("encoding") {
    auto f16 = make_field_shared(4);
    CodeSpec rs = rs_code(f16, 15, 5);

    CHECK(encode(rs, CyclicPoly(*f16, 15)).is_zero());
    CHECK(encode(rs, CyclicPoly::monomial(*f16, 15, 0)) == rs.g);
    CHECK_THROWS_AS(encode(rs, CyclicPoly::monomial(*f16, 15, 5)), InfoTooLong);

    Rng rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        CyclicPoly info(*f16, 15);
        for (int i = 0; i < rs.k; ++i)
            info.set_coeff(i, static_cast<gf_elem>(rng.below(16)));
        CyclicPoly c = encode(rs, info);
        REQUIRE(mul_mod(c, rs.h).is_zero());
        if (!info.is_zero())
            REQUIRE(c.weight() >= rs.d_designed); // MDS distance
    }
}

TEST_CASE("any k columns of the RS generator matrix have full rank") {
    auto f16 = make_field_shared(4);
    CodeSpec rs = rs_code(f16, 15, 5);
    Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> cols(15);
        for (int i = 0; i < 15; ++i)
            cols[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < 5; ++i)
            std::swap(cols[static_cast<std::size_t>(i)],
                      cols[static_cast<std::size_t>(i + rng.below(static_cast<std::uint32_t>(15 - i)))]);
        cols.resize(5);
        REQUIRE(column_rank(rs, cols) == 5);
    }
}
