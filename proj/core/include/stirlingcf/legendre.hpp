#ifndef STIRLINGCF_LEGENDRE_HPP
#define STIRLINGCF_LEGENDRE_HPP

#include <utility>

#include "stirlingcf/poly.hpp"

namespace stirlingcf {

/// Legendre polynomial P_k and its associated numerator polynomial P*_k,
/// both in the variable x = 2p+1.
struct LegendrePair {
    XPoly P;
    XPoly Pstar;
};

/// Computes (P_k, P*_k) by iterating
///   y_{k+1} = ((2k+1)/(k+1)) x y_k - (k/(k+1)) y_{k-1}
/// from P_0 = 1, P_1 = x, P*_0 = 0, P*_1 = 1. Exact.
LegendrePair legendre_pair(int k);

/// The k-th convergent error p_k(2p+1) = (2p+1) P*_k / P_k - 1 rewritten as
/// a normalized rational function f*_k(z) / f_k(z) of z = p(p+1).
struct RatFuncZ {
    ZPoly num;  // f*_k, degree d_k - 1
    ZPoly den;  // f_k, degree d_k = floor(k/2), positive on [1, inf)
    int k = 0;

    Rational eval(const Rational& z) const;
};

/// Forms x P*_k - P_k over P_k, removes the shared x factor for odd k,
/// rewrites the even polynomials via x^2 = 4z + 1 and applies joint content
/// normalization. Requires k >= 2.
RatFuncZ to_z_form(int k);

/// f*_k / f_k at z = p(p+1), exact.
Rational convergent_value(int k, long p);

/// True when only even (resp. only odd) powers of x carry nonzero
/// coefficients; the zero polynomial is both.
bool is_even_poly(const Poly& p);
bool is_odd_poly(const Poly& p);

/// Rewrites an even polynomial in x as a polynomial in z via x^2 = 4z + 1.
/// Throws InternalInvariantError when an odd-degree term is present.
ZPoly even_x_to_z(const XPoly& p);

} // namespace stirlingcf

#endif
