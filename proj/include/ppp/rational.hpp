#ifndef PPP_RATIONAL_HPP
#define PPP_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "ppp/errors.hpp"

namespace ppp {

using Wide = __int128;

std::string wide_to_string(Wide v);

/// Exact rational over 128-bit integers. Every operation normalizes and
/// checks for overflow; desk-scale series (orders up to ~20) stay far
/// below the limits, anything beyond raises Errc::Overflow instead of
/// wrapping.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d);

    static Rat from_wide(Wide n, Wide d);

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat operator-() const { return from_wide(-num_, den_); }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    Wide numerator() const { return num_; }
    Wide denominator() const { return den_; }

    /// Integer value; requires is_integer().
    Wide as_integer() const;
    long long as_int64() const;

    std::string to_string() const;

private:
    Wide num_;
    Wide den_; // > 0, gcd(num, den) = 1

    Rat(Wide n, Wide d, int) : num_(n), den_(d) {}
};

} // namespace ppp

#endif
