#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace dualdec {

using gf_elem = std::uint16_t;

/// Arithmetic context for GF(2^m), 1 <= m <= 16. An element is the bitmask
/// of its polynomial residue; alpha = x (bitmask 0b10, or 1 for m = 1) is a
/// primitive element and exp/log tables are generated from the primitive
/// polynomial. Immutable after construction and safe to share across threads.
class Field {
public:
    Field(int m, std::uint32_t primitive_poly);

    int m() const { return m_; }
    std::uint32_t primitive_poly() const { return poly_; }
    int order() const { return n_; } // multiplicative group order 2^m - 1
    int size() const { return n_ + 1; }
    gf_elem alpha() const { return m_ == 1 ? 1 : 2; }

    // alpha^i; i is reduced mod the group order (negative i allowed).
    gf_elem exp(long long i) const {
        long long r = i % n_;
        if (r < 0)
            r += n_;
        return exp_[static_cast<std::size_t>(r)];
    }

    int log(gf_elem a) const; // throws DivisionByZero for a = 0

    gf_elem add(gf_elem a, gf_elem b) const { return a ^ b; }

    gf_elem mul(gf_elem a, gf_elem b) const {
        if (a == 0 || b == 0)
            return 0;
        return exp_[static_cast<std::size_t>(log_[a] + log_[b])];
    }

    gf_elem inv(gf_elem a) const;
    gf_elem div(gf_elem a, gf_elem b) const;
    gf_elem pow(gf_elem a, long long e) const;

private:
    int m_;
    std::uint32_t poly_;
    int n_;
    std::vector<gf_elem> exp_; // 2n entries so mul needs no reduction
    std::vector<int> log_;     // indexed by element value; log_[0] = -1
};

Field make_field(int m, std::uint32_t primitive_poly);
Field make_field(int m); // with the default primitive polynomial for m

std::shared_ptr<const Field> make_field_shared(int m, std::uint32_t primitive_poly);
std::shared_ptr<const Field> make_field_shared(int m);

// Default primitive polynomial per extension degree (the usual table choice;
// code-spec files may override it).
std::uint32_t default_primitive_poly(int m);

} // namespace dualdec
