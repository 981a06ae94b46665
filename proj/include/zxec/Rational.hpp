#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zx {

/// Exact rational arithmetic for phase bookkeeping. Always stored in lowest
/// terms with a positive denominator.
class Rational {
public:
    constexpr Rational() noexcept = default;
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) { reduce(); }
    constexpr Rational(std::int64_t num) noexcept : num_(num) {} // NOLINT(google-explicit-constructor)

    [[nodiscard]] std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] bool isZero() const noexcept { return num_ == 0; }
    [[nodiscard]] bool isInteger() const noexcept { return den_ == 1; }

    [[nodiscard]] double toDouble() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    Rational& operator+=(const Rational& rhs) {
        const auto g = std::gcd(den_, rhs.den_);
        num_ = checkedAdd(checkedMul(num_, rhs.den_ / g), checkedMul(rhs.num_, den_ / g));
        den_ = checkedMul(den_, rhs.den_ / g);
        reduce();
        return *this;
    }
    Rational& operator-=(const Rational& rhs) { return *this += Rational(-rhs.num_, rhs.den_); }
    Rational& operator*=(const Rational& rhs) {
        const auto g1 = std::gcd(std::abs(num_), rhs.den_);
        const auto g2 = std::gcd(rhs.num_ == INT64_MIN ? rhs.num_ + 1 : std::abs(rhs.num_), den_);
        num_ = checkedMul(num_ / g1, rhs.num_ / g2);
        den_ = checkedMul(den_ / g2, rhs.den_ / g1);
        reduce();
        return *this;
    }
    Rational& operator/=(const Rational& rhs) {
        if (rhs.num_ == 0) {
            throw std::domain_error("rational division by zero");
        }
        return *this *= Rational(rhs.den_, rhs.num_);
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& r) { return {-r.num_, r.den_}; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend bool operator!=(const Rational& lhs, const Rational& rhs) noexcept { return !(lhs == rhs); }
    friend bool operator<(const Rational& lhs, const Rational& rhs) {
        return checkedMul(lhs.num_, rhs.den_) < checkedMul(rhs.num_, lhs.den_);
    }

    /// Reduces this modulo `m` into the half-open interval [0, m).
    [[nodiscard]] Rational mod(const Rational& m) const {
        // floor division of this by m, then subtract
        const auto      lhs = checkedMul(num_, m.den_);
        const auto      rhs = checkedMul(m.num_, den_);
        std::int64_t    q   = lhs / rhs;
        if (lhs % rhs != 0 && ((lhs < 0) != (rhs < 0))) {
            --q;
        }
        return *this - Rational(q) * m;
    }

    [[nodiscard]] std::string toString() const {
        if (den_ == 1) {
            return std::to_string(num_);
        }
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;

    static std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
        const auto wide = static_cast<__int128>(a) * static_cast<__int128>(b);
        if (wide > INT64_MAX || wide < INT64_MIN) {
            throw std::overflow_error("rational overflow");
        }
        return static_cast<std::int64_t>(wide);
    }
    static std::int64_t checkedAdd(std::int64_t a, std::int64_t b) {
        const auto wide = static_cast<__int128>(a) + static_cast<__int128>(b);
        if (wide > INT64_MAX || wide < INT64_MIN) {
            throw std::overflow_error("rational overflow");
        }
        return static_cast<std::int64_t>(wide);
    }

    void reduce() {
        if (den_ == 0) {
            throw std::domain_error("rational with zero denominator");
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        const auto g = std::gcd(std::abs(num_), den_);
        num_ /= g;
        den_ /= g;
    }
};

} // namespace zx
