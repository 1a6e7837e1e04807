#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dualdec/dual_checks.hpp"
#include "dualdec/errors.hpp"
#include "dualdec/simulate.hpp"
#include "dualdec/stats.hpp"

using namespace dualdec;

namespace {

// Count weight-tau patterns with odd overlap against the first d_perp
// positions by direct enumeration.
long long brute_force_overlap(int n, int d_perp, int tau) {
    std::vector<int> support(static_cast<std::size_t>(tau));
    for (int i = 0; i < tau; ++i)
        support[static_cast<std::size_t>(i)] = i;
    if (tau == 0)
        return 0;
    long long count = 0;
    while (true) {
        int overlap = 0;
        for (int s : support)
            overlap += s < d_perp;
        count += overlap % 2;
        int idx = tau - 1;
        while (idx >= 0 && support[static_cast<std::size_t>(idx)] == n - tau + idx)
            --idx;
        if (idx < 0)
            break;
        ++support[static_cast<std::size_t>(idx)];
        for (int t = idx + 1; t < tau; ++t)
            support[static_cast<std::size_t>(t)] = support[static_cast<std::size_t>(t - 1)] + 1;
    }
    return count;
}

double round1(double v) { return std::round(v * 10.0) / 10.0; }

} // namespace

TEST_CASE("big integers") {
    BigUint a(0xFFFFFFFFFFFFFFFFull);
    a.add(BigUint(1));
    CHECK(a.to_long_double() == doctest::Approx(18446744073709551616.0L));
    a.mul_small(1000000007ull);
    BigUint b = a;
    b.mul(BigUint(3));
    BigUint c = a;
    c.add(a);
    c.add(a);
    CHECK(b == c);
    CHECK(b.div_small(3) == 0);
    CHECK(b == a);
}

TEST_CASE("binomials") {
    CHECK(binomial(63, 0).to_long_double() == 1.0L);
    CHECK(binomial(63, 5).to_long_double() == 7028847.0L);
    CHECK(binomial(10, 11).is_zero());
    CHECK(binomial(10, -1).is_zero());
    // C(63,31) needs more than 53 bits
    CHECK(binomial(63, 31).to_long_double() == doctest::Approx(9.16312070471295267e17L));
}

TEST_CASE("odd overlap counts") {
    // tau = 1: only the d_perp singletons inside the check support
    for (int d : {4, 8, 12})
        CHECK(odd_overlap_count(63, d, 1).to_long_double() == static_cast<long double>(d));

    // small closed case: 4 choose 1 times 3 choose 1
    CHECK(odd_overlap_count(7, 4, 2).to_long_double() == 12.0L);
    CHECK(brute_force_overlap(7, 4, 2) == 12);

    // exhaustive agreement for every small parameter set
    for (int n : {7, 11, 15})
        for (int d = 1; d <= std::min(n, 8); ++d)
            for (int tau = 0; tau <= 6; ++tau)
                REQUIRE(odd_overlap_count(n, d, tau).to_long_double() ==
                        static_cast<long double>(brute_force_overlap(n, d, tau)));

    CHECK_THROWS_AS(odd_overlap_count(7, 8, 2), ParameterOutOfRange);
}

TEST_CASE("expected syndrome weight") {
    CHECK(expected_syndrome_weight(63, 8, 0) == 0.0);
    // the published row for L = 35 weight-8 checks on length 63
    CHECK(round1(expected_syndrome_weight(63, 8, 5)) == doctest::Approx(25.2));
    CHECK(round1(expected_syndrome_weight(63, 8, 6)) == doctest::Approx(27.2));
    CHECK(round1(expected_syndrome_weight(63, 8, 7)) == doctest::Approx(28.6));
    CHECK(round1(expected_syndrome_weight(63, 8, 8)) == doctest::Approx(29.6));
    CHECK(round1(expected_syndrome_weight(63, 8, 9)) == doctest::Approx(30.3));
}

TEST_CASE("expected counting-measure values scale linearly in L") {
    double e_omega = expected_syndrome_weight(63, 8, 5);
    double err1 = expected_phi_error(e_omega, 5, 35);
    double err2 = expected_phi_error(e_omega, 5, 70);
    CHECK(err2 == doctest::Approx(2.0 * err1));
    double ok1 = expected_phi_correct(e_omega, 8, 63, 5, 35);
    double ok2 = expected_phi_correct(e_omega, 8, 63, 5, 70);
    CHECK(ok2 == doctest::Approx(2.0 * ok1));
    // closed forms
    CHECK(err1 == doctest::Approx(e_omega / 5 * 35));
    CHECK(ok1 == doctest::Approx(8 * (e_omega - e_omega / 8) / (63 - 5) * 35));
}

TEST_CASE("predictions track simulated averages") {
    // binary fixture codes; the syndrome-weight prediction is per check
    CodeSpec ham = punctured_rm_code(1, 3);
    DualCheckSet ham_checks = binary_low_weight_search(ham, 4, 100, 5);
    for (int tau : {1, 2}) {
        double predicted = expected_syndrome_weight(7, 4, tau);
        PhiAverages av = measure_phi_averages(ham, ham_checks, tau, 10000, 99, 2);
        CHECK(std::fabs(av.av_omega - predicted) / predicted < 0.01);
    }

    auto f16 = make_field_shared(4);
    CodeSpec bch = bch_code(f16, 15, {1, 3});
    DualCheckSet bch_checks = binary_low_weight_search(bch, 4, 200, 11);
    for (int tau : {2, 3}) {
        double predicted = expected_syndrome_weight(15, 4, tau);
        PhiAverages av = measure_phi_averages(bch, bch_checks, tau, 10000, 99, 2);
        CHECK(std::fabs(av.av_omega - predicted) / predicted < 0.01);
    }
}

TEST_CASE("Johnson radii") {
    CHECK(johnson_radius_mds(15, 5) == 7);
    CHECK(johnson_radius_mds(15, 11) == 2);
    CHECK(johnson_radius_mds(15, 15) == 0);
    CHECK(johnson_radius_binary(63, 15) == 8);
    CHECK(johnson_radius_binary(63, 5) == 2);
    CHECK_THROWS_AS(johnson_radius_binary(15, 8), ParameterOutOfRange);
    CHECK_THROWS_AS(johnson_radius_mds(15, 0), ParameterOutOfRange);
}
