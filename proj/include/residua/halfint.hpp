#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace residua {

/**
 * Exact half-integer scalar. The value is stored as its double (an int64),
 * so every element of (1/2)Z is represented exactly and arithmetic never
 * leaves the lattice. All coordinates, labels and pairings in this library
 * are HalfInt; no floating point is used anywhere.
 */
class HalfInt {
public:
    constexpr HalfInt() : d_(0) {}
    constexpr HalfInt(int v) : d_(2ll * v) {}
    constexpr HalfInt(long long v) : d_(2 * v) {}

    static constexpr HalfInt from_doubled(long long twice) {
        HalfInt h;
        h.d_ = twice;
        return h;
    }
    static constexpr HalfInt half(long long numerator) { return from_doubled(numerator); }

    constexpr long long doubled() const { return d_; }
    constexpr bool is_integer() const { return d_ % 2 == 0; }
    constexpr long long as_integer() const {
        if (!is_integer()) throw std::domain_error("HalfInt: not an integer");
        return d_ / 2;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_doubled(a.d_ + b.d_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_doubled(a.d_ - b.d_); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_doubled(-a.d_); }
    friend constexpr HalfInt operator*(long long k, HalfInt a) { return from_doubled(k * a.d_); }
    friend constexpr HalfInt operator*(HalfInt a, long long k) { return from_doubled(k * a.d_); }
    HalfInt& operator+=(HalfInt o) { d_ += o.d_; return *this; }
    HalfInt& operator-=(HalfInt o) { d_ -= o.d_; return *this; }

    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    constexpr HalfInt abs() const { return d_ < 0 ? from_doubled(-d_) : *this; }

    std::string str() const {
        if (is_integer()) return std::to_string(d_ / 2);
        return std::to_string(d_) + "/2";
    }

    /// Parses "3", "-2", "7/2", "-1/2".
    static HalfInt parse(const std::string& s);

private:
    long long d_;
};

} // namespace residua
