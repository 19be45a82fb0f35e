#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace densketch {

/// Exact ratio of two 64-bit integers, stored reduced with positive denominator.
/// Densities and sampling rates are kept in this form so oracle comparisons are
/// free of floating-point noise.
class rational {
public:
    rational() = default;
    rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        normalize();
    }
    explicit rational(std::int64_t value) : num_(value), den_(1) {}

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    friend rational operator*(const rational& a, const rational& b) {
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        return from_product(static_cast<__int128>(a.num_ / g1) * (b.num_ / g2),
                            static_cast<__int128>(a.den_ / g2) * (b.den_ / g1));
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("rational: division by zero");
        const std::int64_t g1 = std::gcd(a.num_, b.num_);
        const std::int64_t g2 = std::gcd(b.den_, a.den_);
        __int128 num = static_cast<__int128>(a.num_ / g1) * (b.den_ / g2);
        __int128 den = static_cast<__int128>(a.den_ / g2) * (b.num_ / g1);
        if (den < 0) { num = -num; den = -den; }
        return from_product(num, den);
    }
    friend rational operator+(const rational& a, const rational& b) {
        const std::int64_t g = std::gcd(a.den_, b.den_);
        __int128 num = static_cast<__int128>(a.num_) * (b.den_ / g) +
                       static_cast<__int128>(b.num_) * (a.den_ / g);
        __int128 den = static_cast<__int128>(a.den_ / g) * b.den_;
        return from_product(num, den);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return a + rational(-b.num_, b.den_);
    }

private:
    static rational from_product(__int128 num, __int128 den) {
        constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
        if (num < lo || num > hi || den < lo || den > hi)
            throw std::overflow_error("rational: 64-bit overflow");
        return rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace densketch
