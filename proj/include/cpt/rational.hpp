#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "cpt/errors.hpp"

namespace cpt {

/// Exact rational number over 64-bit integers, always stored reduced with a
/// positive denominator. Tensor entries are exact by design; there is no
/// floating-point path anywhere in the library.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long value) : num_(value), den_(1) {} // NOLINT: implicit by intent

    Rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    long long as_integer() const {
        if (!is_integer()) throw DomainError("rational " + str() + " is not an integer");
        return num_;
    }

    Rational operator+(const Rational& o) const {
        return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return make(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        const i128 lhs = i128(num_) * o.den_;
        const i128 rhs = i128(o.num_) * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "7" for integers, "7/2" otherwise.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    /// Accepts "p" or "p/q" with optional leading minus; nullopt on anything else.
    static std::optional<Rational> parse(std::string_view text);

private:
    __extension__ typedef __int128 i128; // wide intermediates keep +,*,<=> exact

    static Rational make(i128 num, i128 den) {
        if (den < 0) { num = -num; den = -den; }
        const i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        Rational r;
        r.num_ = static_cast<long long>(num);
        r.den_ = static_cast<long long>(den);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { const i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const long long g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace cpt
