#pragma once

#include "geoe/kernels.hpp"
#include "geoe/types.hpp"

namespace geoe {

// Shorter-arc distance of arclength coordinates u, v on a closed curve of
// length L; always in [0, L/2].
double geodesic_distance(double u, double v, double L);

// M(Gamma, f; N) = 2N sum_{n=1}^{floor(N/2)} f(nL/N) - (1-kappa) f(L/2) N.
complexd exact_energy(const Kernel& k, double L, long n);

// Pairwise sum over ordered pairs of an arbitrary configuration.
// Coincident points with a singular kernel yield the distinguished
// infinite-energy value (+inf, 0) rather than an exception.
complexd brute_force_energy(const Kernel& k, const Configuration& config);
bool is_infinite_energy(complexd v);

// M_s via generalized harmonic numbers: (2/L^s) N^{1+s} H^{(s)}_{floor(N/2)}
// - (1-kappa)(L/2)^{-s} N. Direct O(N) summation, exact for finite N.
complexd riesz_exact(complexd s, double L, long n);

// Log energy closed form N(N-kappa) log(N/L) - 2N log Gamma(floor(N/2)+1)
// + (1-kappa) N log(L/2).
double log_exact(double L, long n);

// M_{-p} closed form with exact Bernoulli polynomial values at kappa/2;
// the N^{1-p} term vanishes for even p.
double neg_int_exact(int p, double L, long n);

// Euclidean Riesz s-energy of the N-th roots of unity,
// N sum_{k=1}^{N-1} (2 sin(pi k / N))^{-s}.
complexd euclid_exact(complexd s, long n);

// (1/2) f(L/2) (N^2 - kappa): energy of the two-point antipodal system.
complexd antipodal_energy(complexd f_half, long n);

// Continuous energy V_f of the normalized arclength measure, or its
// analytic continuation for non-integrable kernels.
complexd continuous_energy(const Kernel& k, double L);

}  // namespace geoe
