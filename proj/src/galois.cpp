#include "dualdec/galois.hpp"

#include "dualdec/errors.hpp"

namespace dualdec {

std::uint32_t default_primitive_poly(int m) {
    // x^m + ... + 1, bitmask with bit i = coefficient of x^i.
    static const std::uint32_t table[17] = {
        0,
        0x3,     // x + 1
        0x7,     // x^2 + x + 1
        0xB,     // x^3 + x + 1
        0x13,    // x^4 + x + 1
        0x25,    // x^5 + x^2 + 1
        0x43,    // x^6 + x + 1
        0x89,    // x^7 + x^3 + 1
        0x11D,   // x^8 + x^4 + x^3 + x^2 + 1
        0x211,   // x^9 + x^4 + 1
        0x409,   // x^10 + x^3 + 1
        0x805,   // x^11 + x^2 + 1
        0x1053,  // x^12 + x^6 + x^4 + x + 1
        0x201B,  // x^13 + x^4 + x^3 + x + 1
        0x4443,  // x^14 + x^10 + x^6 + x + 1
        0x8003,  // x^15 + x + 1
        0x1100B, // x^16 + x^12 + x^3 + x + 1
    };
    if (m < 1 || m > 16)
        throw ParameterOutOfRange("extension degree must be in 1..16, got " + std::to_string(m));
    return table[m];
}

Field::Field(int m, std::uint32_t primitive_poly) : m_(m), poly_(primitive_poly) {
    if (m < 1 || m > 16)
        throw ParameterOutOfRange("extension degree must be in 1..16, got " + std::to_string(m));
    const std::uint32_t top_bit = 1u << m;
    if ((primitive_poly & top_bit) == 0 || (primitive_poly >> (m + 1)) != 0)
        throw DegreeMismatch("primitive polynomial must have degree exactly " + std::to_string(m));

    n_ = (1 << m) - 1;
    exp_.assign(static_cast<std::size_t>(2 * n_), 0);
    log_.assign(static_cast<std::size_t>(n_) + 1, -1);

    // Powers of alpha = x: multiply by x, reduce by the primitive polynomial.
    std::uint32_t value = 1;
    for (int i = 0; i < n_; ++i) {
        exp_[static_cast<std::size_t>(i)] = static_cast<gf_elem>(value);
        exp_[static_cast<std::size_t>(i + n_)] = static_cast<gf_elem>(value);
        if (value == 1 && i > 0)
            throw NonPrimitivePolynomial("alpha has order " + std::to_string(i) +
                                         " < " + std::to_string(n_));
        if (log_[value] >= 0)
            throw NonPrimitivePolynomial("repeated power of alpha at exponent " + std::to_string(i));
        log_[value] = i;
        value <<= 1;
        if (value & top_bit)
            value ^= primitive_poly;
    }
    // Closing the cycle: alpha^n must be 1.
    std::uint32_t closing = value;
    if (closing != 1)
        throw NonPrimitivePolynomial("alpha^" + std::to_string(n_) + " != 1");
}

int Field::log(gf_elem a) const {
    if (a == 0)
        throw DivisionByZero("log of zero");
    return log_[a];
}

gf_elem Field::inv(gf_elem a) const {
    if (a == 0)
        throw DivisionByZero("inverse of zero");
    return exp_[static_cast<std::size_t>(n_ - log_[a])];
}

gf_elem Field::div(gf_elem a, gf_elem b) const {
    if (b == 0)
        throw DivisionByZero("division by zero");
    if (a == 0)
        return 0;
    int e = log_[a] - log_[b];
    if (e < 0)
        e += n_;
    return exp_[static_cast<std::size_t>(e)];
}

gf_elem Field::pow(gf_elem a, long long e) const {
    if (a == 0) {
        if (e < 0)
            throw DivisionByZero("negative power of zero");
        return e == 0 ? gf_elem{1} : gf_elem{0};
    }
    long long r = (static_cast<long long>(log_[a]) * (e % n_)) % n_;
    if (r < 0)
        r += n_;
    return exp_[static_cast<std::size_t>(r)];
}

Field make_field(int m, std::uint32_t primitive_poly) { return Field(m, primitive_poly); }

Field make_field(int m) { return Field(m, default_primitive_poly(m)); }

std::shared_ptr<const Field> make_field_shared(int m, std::uint32_t primitive_poly) {
    return std::make_shared<const Field>(m, primitive_poly);
}

std::shared_ptr<const Field> make_field_shared(int m) {
    return std::make_shared<const Field>(m, default_primitive_poly(m));
}

} // namespace dualdec
