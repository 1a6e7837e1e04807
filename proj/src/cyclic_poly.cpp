#include "dualdec/cyclic_poly.hpp"

#include <algorithm>
#include <bit>

#include "dualdec/errors.hpp"

namespace dualdec {

namespace {

void check_same_ring(const CyclicPoly& a, const CyclicPoly& b) {
    if (a.n() != b.n())
        throw LengthMismatch("ring lengths differ: " + std::to_string(a.n()) + " vs " +
                             std::to_string(b.n()));
    if (a.field().m() != b.field().m() || a.field().primitive_poly() != b.field().primitive_poly())
        throw LengthMismatch("polynomials belong to different fields");
}

int normalize_shift(int s, int n) {
    int r = s % n;
    if (r < 0)
        r += n;
    return r;
}

// Left-rotate an n-bit pattern held in a single word by s (0 <= s < n <= 64).
std::uint64_t rotate_word(std::uint64_t x, int n, int s) {
    if (s == 0)
        return x;
    std::uint64_t mask = n == 64 ? ~0ull : ((1ull << n) - 1);
    return ((x << s) | (x >> (n - s))) & mask;
}

// Left-rotate the n-bit pattern by s (0 <= s < n), general width.
std::vector<std::uint64_t> rotate_words(const std::vector<std::uint64_t>& w, int n, int s) {
    if (n <= 64)
        return {rotate_word(w[0], n, s)};
    std::vector<std::uint64_t> out(w.size(), 0);
    for (int i = 0; i < n; ++i) {
        if ((w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u) {
            int j = i + s;
            if (j >= n)
                j -= n;
            out[static_cast<std::size_t>(j) >> 6] |= 1ull << (j & 63);
        }
    }
    return out;
}

} // namespace

CyclicPoly::CyclicPoly(const Field& field, int n)
    : field_(&field), n_(n), packed_(field.m() == 1) {
    if (n < 1)
        throw ParameterOutOfRange("ring length must be positive");
    if (packed_)
        words_.assign(static_cast<std::size_t>((n + 63) / 64), 0);
    else
        vals_.assign(static_cast<std::size_t>(n), 0);
}

CyclicPoly CyclicPoly::from_coeffs(const Field& field, std::vector<gf_elem> coeffs) {
    CyclicPoly p(field, static_cast<int>(coeffs.size()));
    for (int i = 0; i < p.n_; ++i)
        p.set_coeff(i, coeffs[static_cast<std::size_t>(i)]);
    return p;
}

CyclicPoly CyclicPoly::from_support(const Field& field, int n, std::span<const int> support) {
    CyclicPoly p(field, n);
    for (int i : support)
        p.set_coeff(normalize_shift(i, n), 1);
    return p;
}

CyclicPoly CyclicPoly::monomial(const Field& field, int n, int degree, gf_elem coeff) {
    CyclicPoly p(field, n);
    p.set_coeff(normalize_shift(degree, n), coeff);
    return p;
}

void CyclicPoly::set_coeff(int i, gf_elem v) {
    if (i < 0 || i >= n_)
        throw IndexOutOfRange("coefficient index " + std::to_string(i));
    if (packed_) {
        std::uint64_t bit = 1ull << (i & 63);
        if (v & 1)
            words_[static_cast<std::size_t>(i) >> 6] |= bit;
        else
            words_[static_cast<std::size_t>(i) >> 6] &= ~bit;
    } else {
        vals_[static_cast<std::size_t>(i)] = v;
    }
}

bool CyclicPoly::is_zero() const {
    if (packed_) {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    for (auto v : vals_)
        if (v)
            return false;
    return true;
}

int CyclicPoly::weight() const {
    if (packed_) {
        int total = 0;
        for (auto w : words_)
            total += std::popcount(w);
        return total;
    }
    int total = 0;
    for (auto v : vals_)
        total += v != 0;
    return total;
}

std::vector<int> CyclicPoly::support() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (coeff(i))
            out.push_back(i);
    return out;
}

int CyclicPoly::degree() const {
    for (int i = n_ - 1; i >= 0; --i)
        if (coeff(i))
            return i;
    return -1;
}

void CyclicPoly::add_in_place(const CyclicPoly& other) {
    check_same_ring(*this, other);
    if (packed_) {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= other.words_[w];
    } else {
        for (std::size_t i = 0; i < vals_.size(); ++i)
            vals_[i] ^= other.vals_[i];
    }
}

void CyclicPoly::add_shifted_in_place(const CyclicPoly& other, int s) {
    check_same_ring(*this, other);
    int r = normalize_shift(s, n_);
    if (packed_ && n_ <= 64) {
        words_[0] ^= rotate_word(other.words_[0], n_, r);
        return;
    }
    if (packed_) {
        auto rotated = rotate_words(other.words_, n_, r);
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= rotated[w];
        return;
    }
    for (int i = 0; i < n_; ++i) {
        gf_elem v = other.vals_[static_cast<std::size_t>(i)];
        if (!v)
            continue;
        int j = i + r;
        if (j >= n_)
            j -= n_;
        vals_[static_cast<std::size_t>(j)] ^= v;
    }
}

bool CyclicPoly::operator==(const CyclicPoly& other) const {
    if (n_ != other.n_)
        return false;
    if (field_ && other.field_ && field_->m() != other.field_->m())
        return false;
    if (packed_)
        return words_ == other.words_;
    return vals_ == other.vals_;
}

bool CyclicPoly::lex_less(const CyclicPoly& other) const {
    for (int i = 0; i < n_; ++i) {
        gf_elem a = coeff(i);
        gf_elem b = other.coeff(i);
        if (a != b)
            return a < b;
    }
    return false;
}

CyclicPoly mul_mod(const CyclicPoly& a, const CyclicPoly& b) {
    check_same_ring(a, b);
    const int n = a.n_;
    CyclicPoly out(*a.field_, n);
    if (a.packed_) {
        if (n <= 64) {
            std::uint64_t acc = 0;
            std::uint64_t bw = b.words_[0];
            std::uint64_t aw = a.words_[0];
            for (int i = 0; i < n; ++i)
                if ((aw >> i) & 1u)
                    acc ^= rotate_word(bw, n, i);
            out.words_[0] = acc;
            return out;
        }
        for (int i = 0; i < n; ++i) {
            if (a.coeff(i)) {
                auto rotated = rotate_words(b.words_, n, i);
                for (std::size_t w = 0; w < out.words_.size(); ++w)
                    out.words_[w] ^= rotated[w];
            }
        }
        return out;
    }
    const Field& f = *a.field_;
    for (int i = 0; i < n; ++i) {
        gf_elem ai = a.vals_[static_cast<std::size_t>(i)];
        if (!ai)
            continue;
        for (int j = 0; j < n; ++j) {
            gf_elem bj = b.vals_[static_cast<std::size_t>(j)];
            if (!bj)
                continue;
            int t = i + j;
            if (t >= n)
                t -= n;
            out.vals_[static_cast<std::size_t>(t)] ^= f.mul(ai, bj);
        }
    }
    return out;
}

CyclicPoly shift(const CyclicPoly& a, int s) {
    const int n = a.n_;
    int r = normalize_shift(s, n);
    CyclicPoly out(*a.field_, n);
    if (a.packed_) {
        out.words_ = rotate_words(a.words_, n, r);
        return out;
    }
    for (int i = 0; i < n; ++i) {
        int j = i + r;
        if (j >= n)
            j -= n;
        out.vals_[static_cast<std::size_t>(j)] = a.vals_[static_cast<std::size_t>(i)];
    }
    return out;
}

CyclicPoly square_map(const CyclicPoly& a) {
    const int n = a.n_;
    CyclicPoly out(*a.field_, n);
    const Field& f = *a.field_;
    for (int i = 0; i < n; ++i) {
        gf_elem c = a.coeff(i);
        if (!c)
            continue;
        int j = 2 * i;
        if (j >= n)
            j -= n;
        // Cross terms vanish in characteristic 2, so squaring maps each
        // monomial independently; for even n two monomials can land on the
        // same index and must be accumulated.
        out.set_coeff(j, out.coeff(j) ^ f.mul(c, c));
    }
    return out;
}

CyclicPoly add(const CyclicPoly& a, const CyclicPoly& b) {
    CyclicPoly out = a;
    out.add_in_place(b);
    return out;
}

CyclicPoly scale(const CyclicPoly& a, gf_elem c) {
    CyclicPoly out(a.field(), a.n());
    if (c == 0)
        return out;
    const Field& f = a.field();
    for (int i : a.support())
        out.set_coeff(i, f.mul(a.coeff(i), c));
    return out;
}

gf_elem eval_power(const CyclicPoly& p, const Field& field, long long e) {
    bool embedded = p.field().m() == 1;
    if (!embedded &&
        (p.field().m() != field.m() || p.field().primitive_poly() != field.primitive_poly()))
        throw LengthMismatch("evaluation field does not match coefficient field");
    gf_elem acc = 0;
    for (int i : p.support()) {
        gf_elem term = field.exp(e * i);
        if (!embedded)
            acc ^= field.mul(p.coeff(i), term);
        else
            acc ^= term;
    }
    return acc;
}

} // namespace dualdec
