#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <map>
#include <set>

#include "dualdec/dual_checks.hpp"
#include "dualdec/hard_decoder.hpp"
#include "dualdec/errors.hpp"
#include "dualdec/rng.hpp"

using namespace dualdec;

namespace {

std::vector<gf_elem> dense(const CyclicPoly& p) {
    std::vector<gf_elem> out;
    for (int i = 0; i < p.n(); ++i)
        out.push_back(p.coeff(i));
    return out;
}

// All nonzero words of the dual code, by enumerating information patterns
// over the parity-check shifts. Only usable for tiny dual dimensions.
std::vector<CyclicPoly> enumerate_dual(const CodeSpec& spec) {
    const int dim = spec.n - spec.k;
    REQUIRE(dim <= 16);
    std::vector<CyclicPoly> rows;
    for (int i = 0; i < dim; ++i)
        rows.push_back(shift(spec.h, i));
    std::vector<CyclicPoly> words;
    for (unsigned mask = 1; mask < (1u << dim); ++mask) {
        CyclicPoly w(*spec.symbol_field, spec.n);
        for (int i = 0; i < dim; ++i)
            if (mask & (1u << i))
                w.add_in_place(rows[static_cast<std::size_t>(i)]);
        if (!w.is_zero())
            words.push_back(std::move(w));
    }
    return words;
}

} // namespace

TEST_CASE("canonical form") {
    Field f2 = make_field(1);
    for (int j : {0, 1, 17, 62})
        CHECK(cyclic_canonical(CyclicPoly::monomial(f2, 63, j)) ==
              CyclicPoly::monomial(f2, 63, 0));

    CHECK_THROWS_AS(cyclic_canonical(CyclicPoly(f2, 63)), ZeroPolynomial);

    std::array<int, 8> supp{49, 37, 34, 30, 19, 12, 6, 0};
    CyclicPoly b = CyclicPoly::from_support(f2, 63, supp);

    // brute force over all rotations that put a one at position 0
    CyclicPoly best = b;
    std::vector<int> best_supp = b.support();
    for (int s = 1; s < 63; ++s) {
        CyclicPoly rotated = shift(b, s);
        if (!rotated.coeff(0))
            continue;
        if (rotated.support() < best_supp) {
            best = rotated;
            best_supp = rotated.support();
        }
    }
    CHECK(cyclic_canonical(b) == best);
    CHECK(cyclic_canonical(b).coeff(0) == 1);

    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int s = static_cast<int>(rng.below(63));
        CHECK(cyclic_canonical(shift(b, s)) == cyclic_canonical(b));
    }
}

TEST_CASE("canonical form normalizes nonbinary scalars") {
    Field f16 = make_field(4);
    CyclicPoly p(f16, 15);
    p.set_coeff(2, f16.exp(3));
    p.set_coeff(7, f16.exp(9));
    for (int s = 0; s < 15; ++s)
        for (int e = 0; e < 15; ++e)
            CHECK(cyclic_canonical(scale(shift(p, s), f16.exp(e))) == cyclic_canonical(p));
    CHECK(cyclic_canonical(p).coeff(0) == 1);
}

TEST_CASE("orbit expansion") {
    Field f2 = make_field(1);

    // the all-one word is fixed by both shifting and squaring
    CyclicPoly ones(f2, 7);
    for (int i = 0; i < 7; ++i)
        ones.set_coeff(i, 1);
    CHECK(orbit_expand(ones).size() == 1);

    std::array<int, 8> supp{49, 37, 34, 30, 19, 12, 6, 0};
    CyclicPoly b = CyclicPoly::from_support(f2, 63, supp);
    auto orbit = orbit_expand(b);
    CHECK(orbit.size() <= 63u * 6u);
    std::set<std::vector<gf_elem>> members;
    for (const CyclicPoly& member : orbit) {
        CHECK(member.weight() == b.weight());
        CHECK(square_map(member).weight() == member.weight());
        members.insert(dense(member));
    }
    CHECK(members.size() == orbit.size());
    // closed under shifting
    for (int s = 0; s < 63; ++s)
        CHECK(members.count(dense(shift(b, s))) == 1);
    // repeated squaring reaches further cyclic classes; this word's class
    // period under squaring is 3
    std::set<std::vector<gf_elem>> classes;
    CyclicPoly power = b;
    for (int j = 0; j < 6; ++j) {
        classes.insert(dense(cyclic_canonical(power)));
        power = square_map(power);
    }
    CHECK(classes.size() == 3);
    CHECK(cyclic_canonical(power) == cyclic_canonical(b)); // period divides 6
}

TEST_CASE("MDS dual enumeration: RS(15,5)") {
    auto f16 = make_field_shared(4);
    CodeSpec rs = rs_code(f16, 15, 5);
    DualCheckSet checks = mds_dual_min_weight(rs);
    CHECK(checks.weight == 6);
    CHECK(checks.count() == 335);
    for (const DualCheck& check : checks.checks) {
        CHECK(check.support.front() == 0);
        CHECK(check.coeffs.front() == 1);
        CHECK(check.poly.weight() == 6);
    }
}

TEST_CASE("MDS dual enumeration: RS(15,11)") {
    auto f16 = make_field_shared(4);
    DualCheckSet checks = mds_dual_min_weight(rs_code(f16, 15, 11));
    CHECK(checks.weight == 12);
    CHECK(checks.count() == 31);
}

TEST_CASE("MDS dual enumeration: one-dimensional dual of RS(7,6)") {
    auto f8 = make_field_shared(3);
    CodeSpec rs = rs_code(f8, 7, 6);
    DualCheckSet checks = mds_dual_min_weight(rs);
    CHECK(checks.weight == 7);
    CHECK(checks.count() == 1);

    // exhaustive: every scalar multiple of every shift of h is equivalent to
    // the single emitted check
    CyclicPoly canon = cyclic_canonical(checks.checks.front().poly);
    for (int s = 0; s < 7; ++s)
        for (int e = 0; e < 7; ++e)
            CHECK(cyclic_canonical(scale(shift(rs.h, s), f8->exp(e))) == canon);
}

TEST_CASE("low-weight search on the Hamming(7,4) dual") {
    CodeSpec ham = punctured_rm_code(1, 3);
    DualCheckSet checks = binary_low_weight_search(ham, 4, 100, 5);
    CHECK(checks.count() == 1);
    CHECK(checks.weight == 4);

    // brute force: the dual is the simplex code, 7 words of weight 4 in one
    // cyclic class
    auto words = enumerate_dual(ham);
    CHECK(words.size() == 7);
    for (const CyclicPoly& w : words) {
        CHECK(w.weight() == 4);
        CHECK(cyclic_canonical(w) == checks.checks.front().poly);
    }
}

TEST_CASE("low-weight search matches exhaustive enumeration on BCH(15,7)") {
    auto f16 = make_field_shared(4);
    CodeSpec bch = bch_code(f16, 15, {1, 3});
    CHECK(bch.k == 7);

    auto words = enumerate_dual(bch);
    int min_weight = bch.n;
    for (const CyclicPoly& w : words)
        min_weight = std::min(min_weight, w.weight());
    std::set<std::vector<gf_elem>> expected;
    for (const CyclicPoly& w : words)
        if (w.weight() == min_weight)
            expected.insert(dense(cyclic_canonical(w)));

    DualCheckSet checks = binary_low_weight_search(bch, min_weight, 200, 11);
    CHECK(checks.count() == static_cast<int>(expected.size()));
    for (const DualCheck& check : checks.checks)
        CHECK(expected.count(dense(check.poly)) == 1);
}

TEST_CASE("mining is deterministic once stabilized") {
    CodeSpec rm = punctured_rm_code(2, 6);
    DualCheckSet a = binary_low_weight_search(rm, 8, 400, 1);
    DualCheckSet b = binary_low_weight_search(rm, 8, 400, 999);
    CHECK(a.count() == 155);
    REQUIRE(a.count() == b.count());
    for (int i = 0; i < a.count(); ++i)
        CHECK(a.checks[static_cast<std::size_t>(i)].poly == b.checks[static_cast<std::size_t>(i)].poly);
}

TEST_CASE("every emitted check annihilates the code") {
    auto f64 = make_field_shared(6);
    CodeSpec bch = bch_code(f64, 63, {1, 3, 5, 7, 9, 11, 13});
    DualCheckSet checks = binary_low_weight_search(bch, 8, 400, 1);
    CHECK(checks.count() == 35);
    for (const DualCheck& check : checks.checks)
        for (const CyclicPoly& row : bch.gen_matrix)
            REQUIRE(mul_mod(row, check.poly).is_zero());
    CHECK_NOTHROW(validate_checks(bch, checks));
}

TEST_CASE("mining and decoding beyond one machine word") {
    // length-127 cyclic Hamming code; its dual is the simplex code whose
    // nonzero words all have weight 64 and form a single cyclic class
    CodeSpec ham = punctured_rm_code(5, 7);
    CHECK(ham.n == 127);
    CHECK(ham.k == 120);
    CHECK(ham.d_designed == 3);

    DualCheckSet checks = binary_low_weight_search(ham, 64, 60, 3);
    CHECK(checks.count() == 1);
    CHECK(checks.weight == 64);

    for (int j : {0, 17, 63, 64, 126}) {
        CyclicPoly e = CyclicPoly::monomial(*ham.symbol_field, 127, j);
        DecodeReport report = decode_iter_reduce(e, checks);
        REQUIRE(report.status == DecodeStatus::Corrected);
        REQUIRE(report.codeword->is_zero());
    }
}

TEST_CASE("search failure paths") {
    CodeSpec ham = punctured_rm_code(1, 3);
    CHECK_THROWS_AS(binary_low_weight_search(ham, 2, 30, 1), NoneFound);
    CHECK_THROWS_AS(binary_low_weight_search(ham, 4, 0, 1), ParameterOutOfRange);

    Field f2 = make_field(1);
    CyclicPoly no_unit(f2, 7);
    no_unit.set_coeff(1, 1);
    no_unit.set_coeff(2, 1);
    no_unit.set_coeff(3, 1);
    no_unit.set_coeff(5, 1);
    CHECK_THROWS_AS(checks_from_polys(ham, {no_unit}), ParameterOutOfRange);
}
