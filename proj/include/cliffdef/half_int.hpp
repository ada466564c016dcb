#pragma once

#include <cstdint>
#include <compare>
#include <string>

#include "cliffdef/errors.hpp"

namespace cliffdef {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
    return r;
}

// Division that must be exact; an inexact division in a closed form is a bug.
inline std::int64_t exact_div(std::int64_t a, std::int64_t b) {
    if (b == 0 || a % b != 0)
        throw OverflowError("inexact division: " + std::to_string(a) + " / " + std::to_string(b));
    return a / b;
}

}  // namespace detail

// Exact half-integer scalar. Stores twice the value, so sigma values never
// touch floating point.
struct HalfInt {
    std::int64_t twice = 0;

    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.twice = t;
        return h;
    }

    static HalfInt from_int(std::int64_t v) { return from_twice(detail::checked_mul(v, 2)); }

    bool is_integer() const { return twice % 2 == 0; }

    // Value as integer; only valid when is_integer().
    std::int64_t as_integer() const {
        if (!is_integer()) throw InvalidInput("half-integer is not integral: " + str());
        return twice / 2;
    }

    // Smallest integer >= value.
    std::int64_t ceil() const {
        if (twice >= 0) return (twice + 1) / 2;
        return twice / 2;  // truncation toward zero is ceil for negatives of odd twice
    }

    // Largest integer <= value.
    std::int64_t floor() const {
        if (twice >= 0) return twice / 2;
        return (twice - 1) / 2;
    }

    HalfInt operator+(HalfInt o) const { return from_twice(detail::checked_add(twice, o.twice)); }
    HalfInt operator-(HalfInt o) const { return from_twice(detail::checked_sub(twice, o.twice)); }
    HalfInt operator-() const { return from_twice(detail::checked_sub(0, twice)); }

    friend auto operator<=>(HalfInt, HalfInt) = default;

    // Decimal rendering: "3", "-0.5", "1.5".
    std::string str() const {
        std::int64_t t = twice;
        std::string sign = t < 0 ? "-" : "";
        std::uint64_t a = t < 0 ? static_cast<std::uint64_t>(-(t + 1)) + 1 : static_cast<std::uint64_t>(t);
        std::string s = sign + std::to_string(a / 2);
        if (a % 2 != 0) s += ".5";
        return s;
    }
};

}  // namespace cliffdef
