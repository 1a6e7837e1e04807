#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dualdec/galois.hpp"

namespace dualdec {

/// Element of F_{2^m}[x]/(x^n - 1). Binary polynomials (m = 1) are stored
/// bit-packed so that multiplication and shifting run word-parallel; larger
/// fields use a dense coefficient vector. Values are immutable in spirit:
/// all ring operations return new polynomials.
class CyclicPoly {
public:
    CyclicPoly() = default; // empty placeholder; ring operations need a field
    CyclicPoly(const Field& field, int n);

    static CyclicPoly from_coeffs(const Field& field, std::vector<gf_elem> coeffs);
    static CyclicPoly from_support(const Field& field, int n, std::span<const int> support);
    static CyclicPoly monomial(const Field& field, int n, int degree, gf_elem coeff = 1);

    const Field& field() const { return *field_; }
    int n() const { return n_; }
    bool packed() const { return packed_; }

    gf_elem coeff(int i) const {
        if (packed_)
            return static_cast<gf_elem>((words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u);
        return vals_[static_cast<std::size_t>(i)];
    }

    void set_coeff(int i, gf_elem v);

    bool is_zero() const;
    int weight() const;
    std::vector<int> support() const;
    int degree() const; // largest index with nonzero coefficient; -1 for zero

    // In-place coefficientwise addition (characteristic 2).
    void add_in_place(const CyclicPoly& other);

    // this += x^s * other, without building a shifted temporary. Decoder
    // inner loops (syndrome updates, bit flips) live on this.
    void add_shifted_in_place(const CyclicPoly& other, int s);

    bool operator==(const CyclicPoly& other) const;
    bool operator!=(const CyclicPoly& other) const { return !(*this == other); }

    // Strict total order on coefficient sequences; used for canonical forms.
    bool lex_less(const CyclicPoly& other) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    const Field* field_ = nullptr;
    int n_ = 0;
    bool packed_ = true;
    std::vector<std::uint64_t> words_; // packed storage, bit i = coefficient i
    std::vector<gf_elem> vals_;        // dense storage for m > 1

    friend CyclicPoly mul_mod(const CyclicPoly&, const CyclicPoly&);
    friend CyclicPoly shift(const CyclicPoly&, int);
    friend CyclicPoly square_map(const CyclicPoly&);
};

// Product a(x) b(x) mod (x^n - 1).
CyclicPoly mul_mod(const CyclicPoly& a, const CyclicPoly& b);

// Coefficient at i moves to i + s mod n; s may be negative.
CyclicPoly shift(const CyclicPoly& a, int s);

// a(x)^2 mod (x^n - 1); weight preserving in characteristic 2.
CyclicPoly square_map(const CyclicPoly& a);

CyclicPoly add(const CyclicPoly& a, const CyclicPoly& b);

// Scale every coefficient by c.
CyclicPoly scale(const CyclicPoly& a, gf_elem c);

// Evaluate p at alpha^e in the given field. Binary polynomials embed into any
// extension; otherwise p must live in the same field.
gf_elem eval_power(const CyclicPoly& p, const Field& field, long long e);

} // namespace dualdec
