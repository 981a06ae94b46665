#pragma once

#include "zxec/Rational.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace zx {

/// A spider angle, split into an exact rational multiple of pi and a floating
/// residual. The exact part lives in [0, 2) (i.e. an angle in [0, 2*pi)), the
/// residual in (-pi, pi]. Clifford/Pauli classification looks at the exact
/// part only and requires the residual to vanish, so it is never fooled by
/// floating-point noise.
class Phase {
public:
    constexpr Phase() noexcept = default;
    Phase(Rational exact) : exact_(std::move(exact)) { canonicalize(); } // NOLINT(google-explicit-constructor)
    Phase(Rational exact, double residual) : exact_(std::move(exact)), residual_(residual) { canonicalize(); }

    /// Phase from a raw angle in radians; lands entirely in the residual.
    static Phase fromRadians(double angle) { return {Rational(0), angle}; }

    [[nodiscard]] const Rational& exact() const noexcept { return exact_; }
    [[nodiscard]] double          residual() const noexcept { return residual_; }

    /// Total angle in radians, in [0, 2*pi) + residual slack.
    [[nodiscard]] double toRadians() const noexcept {
        return exact_.toDouble() * std::numbers::pi + residual_;
    }

    [[nodiscard]] bool isZero() const noexcept { return exact_.isZero() && residual_ == 0.0; }
    [[nodiscard]] bool isExact() const noexcept { return residual_ == 0.0; }
    [[nodiscard]] bool isPauli() const noexcept { return isExact() && exact_.isInteger(); }
    [[nodiscard]] bool isClifford() const noexcept {
        return isExact() && (exact_ * Rational(2)).isInteger();
    }
    [[nodiscard]] bool isProperClifford() const noexcept { return isClifford() && !isPauli(); }

    /// True for the exact angle pi (the nontrivial Pauli phase).
    [[nodiscard]] bool isPi() const noexcept { return isExact() && exact_ == Rational(1); }

    Phase& operator+=(const Phase& rhs) {
        exact_ += rhs.exact_;
        residual_ += rhs.residual_;
        canonicalize();
        return *this;
    }
    friend Phase operator+(Phase lhs, const Phase& rhs) { return lhs += rhs; }
    friend Phase operator-(const Phase& p) { return {-p.exact_, -p.residual_}; }

    friend bool operator==(const Phase& lhs, const Phase& rhs) noexcept {
        return lhs.exact_ == rhs.exact_ && lhs.residual_ == rhs.residual_;
    }
    friend bool operator!=(const Phase& lhs, const Phase& rhs) noexcept { return !(lhs == rhs); }

    /// If the total angle is within eps of some k*pi/2, snap to that exact
    /// Clifford angle and clear the residual. Returns whether anything moved.
    bool roundToClifford(double eps) {
        constexpr double halfPi = std::numbers::pi / 2.0;
        const double     total  = toRadians();
        const auto       k      = static_cast<std::int64_t>(std::llround(total / halfPi));
        const double     delta  = total - static_cast<double>(k) * halfPi;
        if (std::abs(delta) > eps) {
            return false;
        }
        const Phase snapped{Rational(k, 2)};
        if (*this == snapped) {
            return false;
        }
        *this = snapped;
        return true;
    }

    [[nodiscard]] std::string toString() const {
        std::string s;
        if (!exact_.isZero()) {
            s = exact_.toString() + "*pi";
        }
        if (residual_ != 0.0) {
            if (!s.empty()) {
                s += "+";
            }
            s += std::to_string(residual_);
        }
        return s.empty() ? "0" : s;
    }

private:
    Rational exact_;
    double   residual_ = 0.0;

    void canonicalize() {
        exact_ = exact_.mod(Rational(2));
        if (residual_ != 0.0) {
            constexpr double twoPi = 2.0 * std::numbers::pi;
            residual_ = std::remainder(residual_, twoPi);
            if (residual_ <= -std::numbers::pi) {
                residual_ += twoPi;
            }
        } else {
            residual_ = 0.0; // normalize -0.0
        }
    }
};

} // namespace zx
