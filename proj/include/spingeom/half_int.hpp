#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>

namespace spingeom {

// Element of (1/2)Z, stored as twice its value so arithmetic stays exact.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int value) : doubled_(2 * value) {}

    static constexpr HalfInt from_doubled(int doubled) {
        HalfInt h;
        h.doubled_ = doubled;
        return h;
    }

    // Throws std::domain_error unless 2*v is an integer (within 1e-9).
    static HalfInt from_double(double v) {
        const double twice = 2.0 * v;
        const double r = std::round(twice);
        if (!std::isfinite(v) || std::abs(twice - r) > 1e-9)
            throw std::domain_error("not a half-integer: " + std::to_string(v));
        return from_doubled(static_cast<int>(r));
    }

    constexpr int doubled() const { return doubled_; }
    constexpr double value() const { return 0.5 * doubled_; }
    constexpr bool is_integer() const { return doubled_ % 2 == 0; }
    constexpr HalfInt abs() const { return from_doubled(doubled_ < 0 ? -doubled_ : doubled_); }

    constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_doubled(doubled_ + o.doubled_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_doubled(doubled_ - o.doubled_); }
    constexpr HalfInt& operator+=(HalfInt o) { doubled_ += o.doubled_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { doubled_ -= o.doubled_; return *this; }

    constexpr auto operator<=>(const HalfInt&) const = default;

    std::string str() const {
        if (is_integer()) return std::to_string(doubled_ / 2);
        return std::to_string(doubled_) + "/2";
    }

private:
    int doubled_ = 0;
};

// Labels of a spin-weighted harmonic sY_jm.
struct QNum {
    HalfInt s, j, m;

    static constexpr QNum from_doubled(int s2, int j2, int m2) {
        return {HalfInt::from_doubled(s2), HalfInt::from_doubled(j2), HalfInt::from_doubled(m2)};
    }
    static QNum from_values(double s, double j, double m) {
        return {HalfInt::from_double(s), HalfInt::from_double(j), HalfInt::from_double(m)};
    }

    constexpr bool valid() const {
        return j >= s.abs() && m.abs() <= j && (j - s).is_integer() && (j - m).is_integer();
    }
    void validate() const {
        if (!valid()) throw std::domain_error("invalid quantum numbers " + str());
    }

    std::string str() const { return "(" + s.str() + "," + j.str() + "," + m.str() + ")"; }

    constexpr auto operator<=>(const QNum&) const = default;
};

}  // namespace spingeom
