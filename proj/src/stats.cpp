#include "dualdec/stats.hpp"

#include <cmath>

#include "dualdec/errors.hpp"

namespace dualdec {

BigUint::BigUint(std::uint64_t value) {
    if (value)
        words_.push_back(value);
}

void BigUint::trim() {
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

void BigUint::add(const BigUint& other) {
    if (other.words_.size() > words_.size())
        words_.resize(other.words_.size(), 0);
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        unsigned __int128 sum = carry + words_[i];
        if (i < other.words_.size())
            sum += other.words_[i];
        words_[i] = static_cast<std::uint64_t>(sum);
        carry = sum >> 64;
    }
    if (carry)
        words_.push_back(static_cast<std::uint64_t>(carry));
}

void BigUint::mul(const BigUint& other) {
    if (is_zero() || other.is_zero()) {
        words_.clear();
        return;
    }
    std::vector<std::uint64_t> out(words_.size() + other.words_.size(), 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        unsigned __int128 carry = 0;
        for (std::size_t j = 0; j < other.words_.size(); ++j) {
            unsigned __int128 cur = static_cast<unsigned __int128>(words_[i]) * other.words_[j] +
                                    out[i + j] + carry;
            out[i + j] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        std::size_t pos = i + other.words_.size();
        while (carry) {
            unsigned __int128 cur = carry + out[pos];
            out[pos] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
            ++pos;
        }
    }
    words_ = std::move(out);
    trim();
}

void BigUint::mul_small(std::uint64_t factor) {
    if (factor == 0) {
        words_.clear();
        return;
    }
    unsigned __int128 carry = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        unsigned __int128 prod = static_cast<unsigned __int128>(words_[i]) * factor + carry;
        words_[i] = static_cast<std::uint64_t>(prod);
        carry = prod >> 64;
    }
    while (carry) {
        words_.push_back(static_cast<std::uint64_t>(carry));
        carry >>= 64;
    }
}

std::uint64_t BigUint::div_small(std::uint64_t divisor) {
    if (divisor == 0)
        throw DivisionByZero("big integer division by zero");
    unsigned __int128 rem = 0;
    for (std::size_t i = words_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | words_[i];
        words_[i] = static_cast<std::uint64_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint64_t>(rem);
}

long double BigUint::to_long_double() const {
    long double acc = 0.0L;
    const long double base = 18446744073709551616.0L; // 2^64
    for (std::size_t i = words_.size(); i-- > 0;)
        acc = acc * base + static_cast<long double>(words_[i]);
    return acc;
}

BigUint binomial(int n, int k) {
    if (k < 0 || k > n || n < 0)
        return BigUint();
    if (k > n - k)
        k = n - k;
    BigUint result(1);
    for (int i = 1; i <= k; ++i) {
        result.mul_small(static_cast<std::uint64_t>(n - k + i));
        result.div_small(static_cast<std::uint64_t>(i)); // exact at every step
    }
    return result;
}

BigUint odd_overlap_count(int n, int d_perp, int tau) {
    if (n < 1 || d_perp < 0 || d_perp > n || tau < 0 || tau > n)
        throw ParameterOutOfRange("odd_overlap_count arguments out of range");
    BigUint total;
    for (int s = 1; s <= tau && s <= d_perp; s += 2) {
        BigUint term = binomial(d_perp, s);
        term.mul(binomial(n - d_perp, tau - s));
        total.add(term);
    }
    return total;
}

double expected_syndrome_weight(int n, int d_perp, int tau) {
    if (tau == 0)
        return 0.0;
    BigUint w = odd_overlap_count(n, d_perp, tau);
    BigUint denom = binomial(n, tau);
    long double value =
        static_cast<long double>(n) * w.to_long_double() / denom.to_long_double();
    return static_cast<double>(value);
}

double expected_phi_error(double e_omega, int tau, int L) {
    if (tau <= 0)
        throw ParameterOutOfRange("error weight must be positive");
    return e_omega / tau * L;
}

double expected_phi_correct(double e_omega, int d_perp, int n, int tau, int L) {
    if (n - tau <= 0)
        throw ParameterOutOfRange("no non-error positions");
    return d_perp * (e_omega - e_omega / d_perp) / (n - tau) * L;
}

int johnson_radius_mds(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw ParameterOutOfRange("invalid MDS parameters");
    long long target = static_cast<long long>(n) * (k - 1);
    long long root = static_cast<long long>(std::sqrt(static_cast<double>(target)));
    while (root * root > target)
        --root;
    while ((root + 1) * (root + 1) <= target)
        ++root;
    return n - 1 - static_cast<int>(root);
}

int johnson_radius_binary(int n, int d) {
    if (n < 1 || d < 1 || 2 * d > n)
        throw ParameterOutOfRange("binary Johnson radius requires 2d <= n");
    long double s = std::sqrt(static_cast<long double>(n) * (n - 2 * d));
    return static_cast<int>(std::floor((n - s) / 2.0L));
}

} // namespace dualdec
