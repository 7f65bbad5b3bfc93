#include "ppp/generating.hpp"

namespace ppp {

Series1 catalan_series(int order) {
    Series1 a = Series1::constant(order, Rat(1));
    Series1 one = Series1::constant(order, Rat(1));
    // each pass fixes one more coefficient
    for (int pass = 0; pass <= order; ++pass) a = inverse(one - shift(a, 1));
    return a;
}

Series1 catalan_residual(const Series1& a) {
    Series1 one = Series1::constant(a.order, Rat(1));
    return a - inverse(one - shift(a, 1));
}

BicoloredPair bicolored_series(int order) {
    Series2 ab = Series2::constant(order, Rat(1));
    Series2 aw = Series2::constant(order, Rat(1));
    Series2 one = Series2::constant(order, Rat(1));
    for (int pass = 0; pass <= order; ++pass) {
        Series2 nb = inverse(one - shift_white(aw));
        Series2 nw = inverse(one - shift_black(ab));
        ab = nb;
        aw = nw;
    }
    return {ab, aw};
}

Series1 four_tuple_series(int order) {
    Series1 a = catalan_series(order);
    Series1 a2 = a * a;
    return shift(a2 * a2, 2);
}

long long euler_phi(long long i) {
    if (i < 1) fail(Errc::InvariantViolation, "euler_phi needs i >= 1");
    long long result = i, n = i;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

Series1 strip_zpart(int order) {
    Series1 g = four_tuple_series(order);
    Series1 acc(order);
    for (int i = 1; 2 * i <= order; ++i) {
        Series1 gi = subst_power(g, i);
        acc = acc + scale(neg_log1m(gi), Rat(euler_phi(i), i));
    }
    if (!acc.all_integral())
        fail(Errc::NonIntegralCoefficient, "cycle construction produced a fractional count");
    return acc;
}

PppSeries ppp_zpart(int order) {
    BicoloredPair bi = bicolored_series(order);
    Series2 prod = bi.black_rooted * bi.black_rooted * bi.white_rooted * bi.white_rooted;
    Series2 q = shift_black(shift_white(prod));
    Series2 m = black_dz(q);
    Series2 one = Series2::constant(order, Rat(1));
    Series2 p1 = m * inverse(one - q);
    for (const Series2* s : {&q, &m, &p1}) {
        if (!s->all_integral())
            fail(Errc::NonIntegralCoefficient, "marked-sequence pipeline produced a fraction");
        if (!s->all_nonnegative())
            fail(Errc::NonIntegralCoefficient, "marked-sequence pipeline produced a negative count");
    }
    return {q, m, p1};
}

namespace {

// twice the area swept by one step from height h: up = 2h+1, down = 2h-1
void dyck_walk(int ups_left, int downs_left, int h, long long twice_area, long long& total) {
    if (ups_left == 0 && downs_left == 0) {
        total += twice_area / 2;
        return;
    }
    if (ups_left > 0) dyck_walk(ups_left - 1, downs_left + 1, h + 1, twice_area + 2 * h + 1, total);
    if (downs_left > 0) dyck_walk(ups_left, downs_left - 1, h - 1, twice_area + 2 * h - 1, total);
}

} // namespace

long long dyck_area_sum(int n) {
    if (n < 1) fail(Errc::InvariantViolation, "dyck_area_sum needs n >= 1");
    long long total = 0;
    dyck_walk(n, 0, 0, 0, total);
    return total;
}

} // namespace ppp
