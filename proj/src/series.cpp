#include "ppp/series.hpp"

namespace ppp {

Series1 Series1::constant(int n, const Rat& v) {
    Series1 s(n);
    s.c[0] = v;
    return s;
}

Series1 Series1::monomial(int n, int degree, const Rat& v) {
    Series1 s(n);
    if (degree <= n) s.c[degree] = v;
    return s;
}

bool Series1::all_integral() const {
    for (const Rat& x : c)
        if (!x.is_integer()) return false;
    return true;
}

int Series1::valuation() const {
    for (int i = 0; i <= order; ++i)
        if (!c[i].is_zero()) return i;
    return order + 1;
}

namespace {
int common_order(int a, int b) { return a < b ? a : b; }
}

Series1 operator+(const Series1& a, const Series1& b) {
    Series1 r(common_order(a.order, b.order));
    for (int i = 0; i <= r.order; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

Series1 operator-(const Series1& a, const Series1& b) {
    Series1 r(common_order(a.order, b.order));
    for (int i = 0; i <= r.order; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

Series1 operator*(const Series1& a, const Series1& b) {
    Series1 r(common_order(a.order, b.order));
    for (int i = 0; i <= r.order; ++i) {
        if (a.c[i].is_zero()) continue;
        for (int j = 0; i + j <= r.order; ++j) {
            if (b.c[j].is_zero()) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return r;
}

Series1 scale(const Series1& a, const Rat& v) {
    Series1 r = a;
    for (Rat& x : r.c) x *= v;
    return r;
}

Series1 inverse(const Series1& a) {
    if (a.c[0].is_zero()) fail(Errc::NonInvertible, "series has zero constant term");
    Series1 r(a.order);
    r.c[0] = Rat(1) / a.c[0];
    for (int n = 1; n <= a.order; ++n) {
        Rat acc;
        for (int k = 1; k <= n; ++k) acc += a.c[k] * r.c[n - k];
        r.c[n] = -acc / a.c[0];
    }
    return r;
}

Series1 neg_log1m(const Series1& f) {
    if (!f.c[0].is_zero()) fail(Errc::BadValuation, "neg_log1m needs f(0) = 0");
    Series1 acc(f.order);
    Series1 pw = Series1::constant(f.order, Rat(1));
    for (int m = 1; m <= f.order; ++m) {
        pw = pw * f;
        if (pw.valuation() > f.order) break;
        acc = acc + scale(pw, Rat(1, m));
    }
    return acc;
}

Series1 subst_power(const Series1& f, int i) {
    if (i < 1) fail(Errc::BadValuation, "substitution power must be >= 1");
    Series1 r(f.order);
    for (int n = 0; n * i <= f.order; ++n) r.c[n * i] = f.c[n];
    return r;
}

Series1 z_dz(const Series1& f) {
    Series1 r = f;
    for (int n = 0; n <= r.order; ++n) r.c[n] *= Rat(n);
    return r;
}

Series1 shift(const Series1& f, int k) {
    Series1 r(f.order);
    for (int n = k; n <= f.order; ++n) r.c[n] = f.c[n - k];
    return r;
}

Series2::Series2(int n) : order(n), c(n + 1) {
    for (int a = 0; a <= n; ++a) c[a].assign(n - a + 1, Rat());
}

Series2 Series2::constant(int n, const Rat& v) {
    Series2 s(n);
    s.c[0][0] = v;
    return s;
}

bool Series2::all_integral() const {
    for (const auto& row : c)
        for (const Rat& x : row)
            if (!x.is_integer()) return false;
    return true;
}

bool Series2::all_nonnegative() const {
    for (const auto& row : c)
        for (const Rat& x : row)
            if (x.is_negative()) return false;
    return true;
}

Series1 Series2::diagonal() const {
    Series1 r(order);
    for (int a = 0; a <= order; ++a)
        for (int b = 0; a + b <= order; ++b) r.c[a + b] += c[a][b];
    return r;
}

Series2 Series2::swapped() const {
    Series2 r(order);
    for (int a = 0; a <= order; ++a)
        for (int b = 0; a + b <= order; ++b) r.c[b][a] = c[a][b];
    return r;
}

Series2 operator+(const Series2& a, const Series2& b) {
    Series2 r(common_order(a.order, b.order));
    for (int i = 0; i <= r.order; ++i)
        for (int j = 0; i + j <= r.order; ++j) r.c[i][j] = a.c[i][j] + b.c[i][j];
    return r;
}

Series2 operator-(const Series2& a, const Series2& b) {
    Series2 r(common_order(a.order, b.order));
    for (int i = 0; i <= r.order; ++i)
        for (int j = 0; i + j <= r.order; ++j) r.c[i][j] = a.c[i][j] - b.c[i][j];
    return r;
}

Series2 operator*(const Series2& a, const Series2& b) {
    Series2 r(common_order(a.order, b.order));
    for (int i = 0; i <= r.order; ++i)
        for (int j = 0; i + j <= r.order; ++j) {
            if (a.c[i][j].is_zero()) continue;
            for (int k = 0; i + j + k <= r.order; ++k)
                for (int l = 0; i + j + k + l <= r.order; ++l) {
                    if (b.c[k][l].is_zero()) continue;
                    r.c[i + k][j + l] += a.c[i][j] * b.c[k][l];
                }
        }
    return r;
}

Series2 inverse(const Series2& a) {
    if (a.c[0][0].is_zero()) fail(Errc::NonInvertible, "series has zero constant term");
    // Order-by-order: r = (1 - (1 - a/a00) ) ^ -1 / a00 via Neumann iteration.
    Series2 r = Series2::constant(a.order, Rat(1) / a.c[0][0]);
    for (int pass = 0; pass < a.order + 1; ++pass) {
        // r <- r + r*(1 - a*r); converges one total degree per pass
        Series2 one = Series2::constant(a.order, Rat(1));
        r = r + r * (one - a * r);
    }
    return r;
}

Series2 shift_black(const Series2& f) {
    Series2 r(f.order);
    for (int a = 1; a <= f.order; ++a)
        for (int b = 0; a + b <= f.order; ++b) r.c[a][b] = f.c[a - 1][b];
    return r;
}

Series2 shift_white(const Series2& f) {
    Series2 r(f.order);
    for (int a = 0; a <= f.order; ++a)
        for (int b = 1; a + b <= f.order; ++b) r.c[a][b] = f.c[a][b - 1];
    return r;
}

Series2 black_dz(const Series2& f) {
    Series2 r = f;
    for (int a = 0; a <= r.order; ++a)
        for (int b = 0; a + b <= r.order; ++b) r.c[a][b] *= Rat(a);
    return r;
}

} // namespace ppp
