#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dualdec/errors.hpp"
#include "dualdec/galois.hpp"
#include "dualdec/rng.hpp"

using namespace dualdec;

namespace {

// Independent power recursion: multiply by x, reduce by the polynomial.
std::vector<gf_elem> powers_by_recursion(int m, std::uint32_t poly) {
    const int n = (1 << m) - 1;
    std::vector<gf_elem> out;
    std::uint32_t value = 1;
    for (int i = 0; i < n; ++i) {
        out.push_back(static_cast<gf_elem>(value));
        value <<= 1;
        if (value & (1u << m))
            value ^= poly;
    }
    return out;
}

} // namespace

TEST_CASE("smallest field GF(2)") {
    Field f = make_field(1);
    CHECK(f.order() == 1);
    CHECK(f.exp(0) == 1);
    CHECK(f.mul(1, 1) == 1);
    CHECK(f.add(1, 1) == 0);
    CHECK(f.inv(1) == 1);
}

TEST_CASE("GF(16) with x^4+x+1") {
    Field f = make_field(4, 0x13);
    CHECK(f.order() == 15);
    // alpha^4 = alpha + 1
    CHECK(f.exp(4) == 0b0011);
    CHECK(f.exp(15) == 1);

    auto powers = powers_by_recursion(4, 0x13);
    std::set<gf_elem> distinct(powers.begin(), powers.end());
    CHECK(distinct.size() == 15);
    for (int i = 0; i < 15; ++i)
        CHECK(f.exp(i) == powers[static_cast<std::size_t>(i)]);
}

TEST_CASE("GF(64) with x^6+x+1") {
    Field f = make_field(6, 0x43);
    CHECK(f.order() == 63);
    CHECK(f.exp(63) == 1);
    auto powers = powers_by_recursion(6, 0x43);
    std::set<gf_elem> distinct(powers.begin(), powers.end());
    CHECK(distinct.size() == 63);
    for (int i = 0; i < 63; ++i)
        CHECK(f.exp(i) == powers[static_cast<std::size_t>(i)]);
}

TEST_CASE("every default polynomial is primitive") {
    // construction runs the full order test, so this validates the table
    for (int m = 1; m <= 16; ++m) {
        Field f = make_field(m);
        CHECK(f.order() == (1 << m) - 1);
        CHECK(f.exp(f.order()) == 1);
        if (m >= 2) {
            gf_elem a = f.exp(3);
            CHECK(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("construction rejects bad polynomials") {
    CHECK_THROWS_AS(make_field(4, 0x9), DegreeMismatch);   // degree 3
    CHECK_THROWS_AS(make_field(4, 0x33), DegreeMismatch);  // degree 5
    CHECK_THROWS_AS(make_field(4, 0x1F), NonPrimitivePolynomial); // x^4+x^3+x^2+x+1, order 5
    CHECK_THROWS_AS(make_field(0, 0x3), ParameterOutOfRange);
    CHECK_THROWS_AS(make_field(17), ParameterOutOfRange);
}

TEST_CASE("multiplication, inverse, powers") {
    Field f = make_field(4);
    const gf_elem a3 = f.exp(3);
    const gf_elem a8 = f.exp(8);
    CHECK(f.mul(a3, a8) == f.exp(11));
    CHECK(f.inv(f.exp(2)) == f.exp(13));
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
    CHECK_THROWS_AS((void)f.log(0), DivisionByZero);

    for (int v = 0; v < 16; ++v)
        CHECK(f.mul(static_cast<gf_elem>(v), 1) == v);
    for (int v = 1; v < 16; ++v)
        CHECK(f.mul(static_cast<gf_elem>(v), f.inv(static_cast<gf_elem>(v))) == 1);

    CHECK(f.pow(0, 0) == 1);
    CHECK(f.pow(0, 5) == 0);
    CHECK(f.pow(f.exp(1), 15) == 1);
    CHECK(f.pow(f.exp(3), -1) == f.inv(f.exp(3)));
    CHECK(f.pow(f.exp(2), 7) == f.exp(14));
    CHECK_THROWS_AS(f.pow(0, -1), DivisionByZero);
}

TEST_CASE("field axioms on random triples") {
    for (int m : {4, 6, 8}) {
        Field f = make_field(m);
        Rng rng(20240u + static_cast<unsigned>(m));
        const std::uint32_t q = static_cast<std::uint32_t>(f.size());
        for (int trial = 0; trial < 1000; ++trial) {
            gf_elem a = static_cast<gf_elem>(rng.below(q));
            gf_elem b = static_cast<gf_elem>(rng.below(q));
            gf_elem c = static_cast<gf_elem>(rng.below(q));
            REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            REQUIRE(f.mul(a, b) == f.mul(b, a));
        }
    }
}

TEST_CASE("Frobenius is additive, exhaustively for small fields") {
    for (int m : {2, 3, 4, 5, 6, 7, 8}) {
        Field f = make_field(m);
        const int q = f.size();
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                gf_elem ga = static_cast<gf_elem>(a);
                gf_elem gb = static_cast<gf_elem>(b);
                gf_elem lhs = f.mul(f.add(ga, gb), f.add(ga, gb));
                gf_elem rhs = f.add(f.mul(ga, ga), f.mul(gb, gb));
                REQUIRE(lhs == rhs);
            }
        }
    }
}
