#ifndef PPP_GENERATING_HPP
#define PPP_GENERATING_HPP

#include "ppp/series.hpp"

namespace ppp {

/// Ordered-tree series A(z) = 1/(1 - z A(z)), computed by fixed-point
/// iteration. Coefficients are the Catalan numbers.
Series1 catalan_series(int order);

/// Residual A - 1/(1 - z A); identically zero up to truncation.
Series1 catalan_residual(const Series1& a);

struct BicoloredPair {
    Series2 black_rooted; // children are white-rooted
    Series2 white_rooted;
};

/// Joint fixed point of A_b = 1/(1 - zw A_w), A_w = 1/(1 - zb A_b).
BicoloredPair bicolored_series(int order);

/// Weight series of 4-tuples of ordered trees: G(z) = z^2 A(z)^4.
Series1 four_tuple_series(int order);

/// Euler phi; phi(1) = 1.
long long euler_phi(long long i);

/// Cycle construction over the 4-tuple alphabet:
///   S(z) = sum_{i>=1} phi(i)/i * (-log(1 - G(z^i))).
/// Counts necklaces of 4-tuples by total weight. All coefficients are
/// asserted integral. The strip series is t/(1-t) * S.
Series1 strip_zpart(int order);

inline ThicknessFactored<Series1> strip_series(int order) { return {strip_zpart(order)}; }

struct PppSeries {
    Series2 tuple;    // Q  = zb zw Ab^2 Aw^2
    Series2 marked;   // M  = zb d/dzb Q
    Series2 sequence; // P1 = M / (1 - Q); full GF is t/(1-t) * P1
};

/// The marked-sequence pipeline behind the bivariate PPP count.
PppSeries ppp_zpart(int order);

inline ThicknessFactored<Series2> ppp_series(int order) { return {ppp_zpart(order).sequence}; }

/// Sum of the areas under all Dyck paths of semi-length n (brute force).
long long dyck_area_sum(int n);

} // namespace ppp

#endif
