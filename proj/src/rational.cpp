#include "ppp/rational.hpp"

namespace ppp {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::PathsCross: return "PathsCross";
        case Errc::EndpointMismatch: return "EndpointMismatch";
        case Errc::NotInFirstColumn: return "NotInFirstColumn";
        case Errc::NotAdmissible: return "NotAdmissible";
        case Errc::SpiralRow: return "SpiralRow";
        case Errc::DegeneratedInput: return "DegeneratedInput";
        case Errc::InvalidRotation: return "InvalidRotation";
        case Errc::TrunkShapeMismatch: return "TrunkShapeMismatch";
        case Errc::InvalidMark: return "InvalidMark";
        case Errc::ParseError: return "ParseError";
        case Errc::InvariantViolation: return "InvariantViolation";
        case Errc::NonInvertible: return "NonInvertible";
        case Errc::BadValuation: return "BadValuation";
        case Errc::NonIntegralCoefficient: return "NonIntegralCoefficient";
        case Errc::SaturationNotReached: return "SaturationNotReached";
        case Errc::Overflow: return "Overflow";
    }
    return "Unknown";
}

std::string wide_to_string(Wide v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u > 0) {
        s.push_back(char('0' + (int)(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

namespace {

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Wide checked_mul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Errc::Overflow, "rational product exceeds 128 bits");
    return r;
}

Wide checked_add(Wide a, Wide b) {
    Wide r;
    if (__builtin_add_overflow(a, b, &r)) fail(Errc::Overflow, "rational sum exceeds 128 bits");
    return r;
}

} // namespace

Rat Rat::from_wide(Wide n, Wide d) {
    if (d == 0) fail(Errc::NonInvertible, "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rat(n, d, 0);
}

Rat::Rat(long long n, long long d) { *this = from_wide(n, d); }

Rat Rat::operator+(const Rat& o) const {
    // reduce cross terms first to keep magnitudes down
    Wide g = wide_gcd(den_, o.den_);
    Wide l = checked_mul(den_ / g, o.den_);
    Wide a = checked_mul(num_, o.den_ / g);
    Wide b = checked_mul(o.num_, den_ / g);
    return from_wide(checked_add(a, b), l);
}

Rat Rat::operator-(const Rat& o) const { return *this + (-o); }

Rat Rat::operator*(const Rat& o) const {
    Wide g1 = wide_gcd(num_, o.den_);
    Wide g2 = wide_gcd(o.num_, den_);
    return from_wide(checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1));
}

Rat Rat::operator/(const Rat& o) const {
    if (o.num_ == 0) fail(Errc::NonInvertible, "division by zero");
    return *this * from_wide(o.den_, o.num_);
}

Wide Rat::as_integer() const {
    if (den_ != 1) fail(Errc::NonIntegralCoefficient, "value " + to_string() + " is not an integer");
    return num_;
}

long long Rat::as_int64() const {
    Wide v = as_integer();
    long long r = (long long)v;
    if ((Wide)r != v) fail(Errc::Overflow, "integer does not fit in 64 bits");
    return r;
}

std::string Rat::to_string() const {
    if (den_ == 1) return wide_to_string(num_);
    return wide_to_string(num_) + "/" + wide_to_string(den_);
}

} // namespace ppp
