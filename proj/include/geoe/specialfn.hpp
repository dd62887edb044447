#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "geoe/types.hpp"

namespace geoe {

using rational = boost::multiprecision::cpp_rational;
using bigint = boost::multiprecision::cpp_int;

// Exact Bernoulli numbers B_0..B_64 from the defining recurrence
// sum_{k=0}^{m} C(m+1,k) B_k = 0, cached as rationals. Orders above 64
// raise std::domain_error.
inline constexpr int max_bernoulli_order = 64;
const rational& bernoulli_rational(int n);
double bernoulli_number(int n);

bigint binomial_exact(int n, int k);

// B_n(x) = sum_k C(n,k) B_{n-k} x^k, exact rational coefficients folded
// into a double Horner evaluation.
double bernoulli_poly(int n, double x);
rational bernoulli_poly_rational(int n, const rational& x);

// C_k(x) = B_k(x - floor(x)).
double periodized_bernoulli(int k, double x);

// (s)_0 = 1, (s)_{n+1} = (n+s)(s)_n.
complexd pochhammer(complexd s, int n);

// Incomplete zeta zeta_p(omega,y;s) and its s->1 companion Psi_p(omega,y).
// The integral over C_{2p+1}(x) x^{-s-1-2p} runs piecewise on unit
// intervals with fixed-order Gauss-Legendre (16 points for p<=7, else 32).
complexd incomplete_zeta(int p, double omega, double y, complexd s);
double psi_p(int p, double omega, double y);

// zeta(s) and zeta(s,a) by Euler-MacLaurin summation; exact at real
// nonpositive integer s through the Bernoulli closed forms. Accuracy is
// the truncation target 1e-13 plus double rounding, which dominates for
// strongly negative non-integer Re s.
complexd riemann_zeta(complexd s);
complexd hurwitz_zeta(complexd s, double a);

// Principal-branch log Gamma for Re z > 0 (argument-shift recursion into
// the Stirling series region), and Gamma on the cut plane via reflection.
complexd log_gamma(complexd z);
complexd complex_gamma(complexd z);

// Ei(x) = gamma + log x + sum_{k>=1} x^k/(k k!), x > 0.
double exp_integral_ei(double x);

// Coefficients alpha_0..alpha_q of sinc^{-s}(z/2) = sum alpha_n(s) z^{2n},
// equal to (-1)^n B_{2n}^{(s)}(s/2)/(2n)!. q <= 40 for the public entry;
// sinc_alpha_series is the uncapped internal form used by kernel code.
std::vector<complexd> euclid_alpha_coeffs(complexd s, int q);
std::vector<complexd> sinc_alpha_series(complexd s, int nmax);

// zeta(n) for integer n >= 2, cached; returns exactly 1.0 once the true
// value rounds to 1 in double (n >= 55).
double zeta_int(int n);

}  // namespace geoe
