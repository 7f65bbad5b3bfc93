#ifndef PPP_SERIES_HPP
#define PPP_SERIES_HPP

#include <vector>

#include "ppp/rational.hpp"

namespace ppp {

/// Univariate truncated power series with exact rational coefficients
/// c_0..c_order.
struct Series1 {
    int order = 0;
    std::vector<Rat> c; // size order + 1

    explicit Series1(int n = 0) : order(n), c(n + 1) {}
    static Series1 constant(int n, const Rat& v);
    static Series1 monomial(int n, int degree, const Rat& v = Rat(1));

    const Rat& coeff(int i) const { return c[i]; }
    bool all_integral() const;
    /// Lowest nonzero degree, or order + 1 for the zero series.
    int valuation() const;
    bool operator==(const Series1&) const = default;
};

Series1 operator+(const Series1& a, const Series1& b);
Series1 operator-(const Series1& a, const Series1& b);
Series1 operator*(const Series1& a, const Series1& b);
Series1 scale(const Series1& a, const Rat& v);

/// Multiplicative inverse; needs a nonzero constant term.
Series1 inverse(const Series1& a);
/// -log(1 - f) = sum_{m>=1} f^m / m; needs f(0) = 0.
Series1 neg_log1m(const Series1& f);
/// z -> z^i substitution.
Series1 subst_power(const Series1& f, int i);
/// z d/dz: multiplies c_n by n.
Series1 z_dz(const Series1& f);
/// Multiply by z^k (truncating).
Series1 shift(const Series1& f, int k);

/// Bivariate series truncated by total degree: c[a][b] for a + b <= order.
/// Variable a counts black vertices (width), b counts white (height).
struct Series2 {
    int order = 0;
    std::vector<std::vector<Rat>> c;

    explicit Series2(int n = 0);
    static Series2 constant(int n, const Rat& v);

    const Rat& coeff(int a, int b) const { return c[a][b]; }
    bool all_integral() const;
    bool all_nonnegative() const;
    /// P(z, z): collapse onto total degree.
    Series1 diagonal() const;
    Series2 swapped() const;
    bool operator==(const Series2&) const = default;
};

Series2 operator+(const Series2& a, const Series2& b);
Series2 operator-(const Series2& a, const Series2& b);
Series2 operator*(const Series2& a, const Series2& b);
Series2 inverse(const Series2& a);
/// Multiply by the first/second variable.
Series2 shift_black(const Series2& f);
Series2 shift_white(const Series2& f);
/// zb d/dzb: multiplies c[a][b] by a.
Series2 black_dz(const Series2& f);

/// A series standing for t/(1-t) * zpart: the coefficient of t^k is zpart
/// for every k >= 1. Thickness never interacts with the other variables.
template <class S>
struct ThicknessFactored {
    S zpart;
    const S& coefficient_of_thickness(int k) const {
        if (k < 1) fail(Errc::InvariantViolation, "thickness exponent must be >= 1");
        return zpart;
    }
};

} // namespace ppp

#endif
