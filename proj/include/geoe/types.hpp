#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace geoe {

using complexd = std::complex<double>;

inline constexpr double euler_gamma = std::numbers::egamma_v<double>;
inline constexpr double pi = std::numbers::pi_v<double>;

// N = 2*m_half + kappa, omega = kappa/2. Expansion coefficients of the
// nonpositive even powers of N depend on kappa, so builders take a Parity.
struct Parity {
    int kappa = 0;
    double omega = 0.0;
    long m_half = 0;

    static Parity of_n(long n) {
        Parity p;
        p.kappa = static_cast<int>(n & 1);
        p.omega = p.kappa / 2.0;
        p.m_half = (n - p.kappa) / 2;
        return p;
    }
    static Parity even() { return of_n(2); }
    static Parity odd() { return of_n(3); }
};

// A closed rectifiable curve enters the theory only through its length.
struct Curve {
    double length = 1.0;
};

// Arclength coordinates in [0, L); points need not be distinct.
struct Configuration {
    std::vector<double> positions;
    Curve curve;
};

}  // namespace geoe
