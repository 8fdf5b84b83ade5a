#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace embkit {

/// Natural number extended with a top element "omega".
/// Comparison treats omega as the maximum; addition absorbs it.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint32_t v) : value_(v) {}

    static constexpr ExtNat omega() {
        ExtNat e;
        e.omega_ = true;
        return e;
    }

    constexpr bool is_omega() const { return omega_; }
    constexpr bool is_finite() const { return !omega_; }

    // Only meaningful for finite values.
    constexpr std::uint32_t value() const { return value_; }

    friend constexpr bool operator==(ExtNat a, ExtNat b) {
        return a.omega_ == b.omega_ && (a.omega_ || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
        if (a.omega_ || b.omega_)
            return (a.omega_ ? 1 : 0) <=> (b.omega_ ? 1 : 0);
        return a.value_ <=> b.value_;
    }

    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.omega_ || b.omega_) return omega();
        return ExtNat(a.value_ + b.value_);
    }

    ExtNat& operator+=(ExtNat b) { return *this = *this + b; }

    std::string str() const { return omega_ ? "omega" : std::to_string(value_); }

private:
    std::uint32_t value_ = 0;
    bool omega_ = false;
};

}  // namespace embkit
