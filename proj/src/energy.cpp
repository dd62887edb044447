// Exact discrete energies of point configurations on a closed curve, plus
// the closed forms that serve as oracles for the asymptotic expansions.
// Sums accumulate in compensated long double so the N^2-sized values keep
// enough accuracy to expose remainders of size N^{-2q}.

#include "geoe/energy.hpp"

#include <cmath>
#include <limits>

#include "geoe/specialfn.hpp"

namespace geoe {

namespace {

using complexl = std::complex<long double>;

struct CompensatedC {
    complexl sum{0.0L, 0.0L};
    complexl carry{0.0L, 0.0L};
    void add(complexl t) {
        const complexl y = t - carry;
        const complexl u = sum + y;
        carry = (u - sum) - y;
        sum = u;
    }
};

complexl to_l(complexd z) { return {z.real(), z.imag()}; }
complexd to_d(complexl z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

complexl pow_l(long double base, complexl e) {
    return std::exp(e * std::log(complexl(base, 0.0L)));
}

}  // namespace

double geodesic_distance(double u, double v, double L) {
    const double ell = std::abs(u - v);  // in [0, L) for coordinates in [0, L)
    return L / 2.0 - std::abs(ell - L / 2.0);
}

complexd exact_energy(const Kernel& k, double L, long n) {
    if (n < 2) throw std::invalid_argument("exact_energy: N must be >= 2");
    const int kappa = static_cast<int>(n & 1);
    CompensatedC acc;
    for (long j = 1; j <= n / 2; ++j)
        acc.add(to_l(eval_kernel(k, static_cast<double>(j) * L / n)));
    complexl total = 2.0L * static_cast<long double>(n) * acc.sum;
    if (kappa == 0)
        total -= static_cast<long double>(n) * to_l(eval_kernel(k, L / 2.0));
    return to_d(total);
}

bool is_infinite_energy(complexd v) { return std::isinf(v.real()); }

complexd brute_force_energy(const Kernel& k, const Configuration& config) {
    const double L = config.curve.length;
    const auto& xs = config.positions;
    for (double x : xs)
        if (x < 0.0 || x >= L)
            throw std::invalid_argument("brute_force_energy: position outside [0, L)");
    const auto at_zero = eval_kernel_at_zero(k);
    CompensatedC acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            const double d = geodesic_distance(xs[i], xs[j], L);
            if (d == 0.0) {
                if (!at_zero)
                    return complexd(std::numeric_limits<double>::infinity(), 0.0);
                acc.add(to_l(*at_zero));
            } else {
                acc.add(to_l(eval_kernel(k, d)));
            }
        }
    }
    return to_d(acc.sum);
}

complexd riesz_exact(complexd s, double L, long n) {
    if (n < 2) throw std::invalid_argument("riesz_exact: N must be >= 2");
    const int kappa = static_cast<int>(n & 1);
    const complexl sl = to_l(s);
    CompensatedC h;
    for (long j = 1; j <= n / 2; ++j)
        h.add(pow_l(static_cast<long double>(j), -sl));
    complexl total = 2.0L * pow_l(L, -sl) *
                     pow_l(static_cast<long double>(n), complexl(1.0L, 0.0L) + sl) *
                     h.sum;
    if (kappa == 0)
        total -= static_cast<long double>(n) * pow_l(L / 2.0, -sl);
    return to_d(total);
}

double log_exact(double L, long n) {
    if (n < 2) throw std::invalid_argument("log_exact: N must be >= 2");
    const int kappa = static_cast<int>(n & 1);
    const long double nl = n, Ll = L;
    long double v = nl * (nl - kappa) * std::log(nl / Ll) -
                    2.0L * nl * std::lgamma(static_cast<long double>(n / 2 + 1));
    if (kappa == 0) v += nl * std::log(Ll / 2.0L);
    return static_cast<double>(v);
}

double neg_int_exact(int p, double L, long n) {
    if (p < 1) throw std::invalid_argument("neg_int_exact: p must be >= 1");
    if (p + 1 > max_bernoulli_order)
        throw std::domain_error("neg_int_exact: p exceeds Bernoulli cache");
    const int kappa = static_cast<int>(n & 1);
    const rational half_kappa(kappa, 2);
    const long double nl = n;
    const long double half_pow = std::pow(static_cast<long double>(L) / 2.0L, p);

    long double v = half_pow / (p + 1) * nl * nl;
    for (int m = 1; m <= p / 2; ++m) {
        const rational coeff = rational(binomial_exact(p + 1, 2 * m)) *
                               bernoulli_poly_rational(2 * m, half_kappa);
        v += half_pow / (p + 1) * coeff.convert_to<long double>() *
             std::pow(2.0L, 2 * m) * std::pow(nl, 2 - 2 * m);
    }
    const rational tail =
        bernoulli_poly_rational(p + 1, half_kappa) - bernoulli_rational(p + 1);
    if (tail != 0) {
        v += 2.0L * std::pow(static_cast<long double>(L), p) / (p + 1) *
             tail.convert_to<long double>() * std::pow(nl, 1 - p);
    }
    return static_cast<double>(v);
}

complexd euclid_exact(complexd s, long n) {
    if (n < 2) throw std::invalid_argument("euclid_exact: N must be >= 2");
    const complexl sl = to_l(s);
    CompensatedC acc;
    for (long k = 1; k < n; ++k) {
        const long double chord =
            2.0L * std::sin(std::numbers::pi_v<long double> * k / n);
        acc.add(pow_l(chord, -sl));
    }
    return to_d(static_cast<long double>(n) * acc.sum);
}

complexd antipodal_energy(complexd f_half, long n) {
    const int kappa = static_cast<int>(n & 1);
    return 0.5 * f_half * static_cast<double>(n * n - kappa);
}

complexd continuous_energy(const Kernel& k, double L) {
    const double half = L / 2.0;
    return std::visit(
        [&](const auto& kk) -> complexd {
            using T = std::decay_t<decltype(kk)>;
            if constexpr (std::is_same_v<T, RieszKernel>) {
                if (std::abs(kk.s - complexd(1.0, 0.0)) < 1e-12)
                    throw std::domain_error(
                        "continuous_energy: Riesz s = 1 is the exceptional case");
                const complexd v = std::exp(-kk.s * std::log(complexd(half, 0.0))) /
                                   (complexd(1.0, 0.0) - kk.s);
                return kk.signed_convention && kk.s.imag() == 0.0 && kk.s.real() < 0.0
                           ? -v
                           : v;
            } else if constexpr (std::is_same_v<T, LogKernel>) {
                return complexd(1.0 - std::log(half), 0.0);
            } else if constexpr (std::is_same_v<T, PowerSeriesKernel>) {
                // (2/L) int_0^{L/2} f = (2/L) sum a_n (L/2)^{n+1}/(n+1)
                complexd acc(0.0, 0.0);
                double hp = half;
                for (size_t j = 0; j < kk.coeffs.size(); ++j) {
                    acc += kk.coeffs[j] * hp / static_cast<double>(j + 1);
                    hp *= half;
                }
                return 2.0 / L * acc;
            } else if constexpr (std::is_same_v<T, LaurentKernel>) {
                // analytic continuation: termwise with the residue handled
                // by the exceptional constant -(log 2 - gamma)
                complexd acc(0.0, 0.0);
                for (size_t i = 0; i < kk.coeffs.size(); ++i) {
                    const int m = static_cast<int>(i) - kk.pole_order;
                    if (m == -1) {
                        acc -= kk.coeffs[i] * (std::log(2.0) - euler_gamma);
                    } else {
                        acc += kk.coeffs[i] * std::pow(half, m + 1) /
                               static_cast<double>(m + 1);
                    }
                }
                return 2.0 / L * acc;
            } else if constexpr (std::is_same_v<T, WeightedKernel>) {
                complexd acc(0.0, 0.0);
                for (size_t m = 0; m < kk.weight_coeffs.size(); ++m) {
                    const complexd e = complexd(1.0 + m, 0.0) - kk.s;
                    if (std::abs(e) < 1e-12)
                        throw std::domain_error(
                            "continuous_energy: weighted kernel exceptional case");
                    acc += kk.weight_coeffs[m] *
                           std::exp(e * std::log(complexd(half, 0.0))) / e;
                }
                return 2.0 / L * acc;
            } else if constexpr (std::is_same_v<T, SincWeightedKernel>) {
                if (L >= 4.0 * pi)
                    throw std::domain_error(
                        "continuous_energy: sincw requires L < 4*pi");
                const auto alpha = sinc_alpha_series(kk.s, 60);
                complexd acc(0.0, 0.0);
                for (int m = 0; m <= 60; ++m) {
                    const complexd e = complexd(1.0 + 2.0 * m, 0.0) - kk.s;
                    if (std::abs(e) < 1e-12)
                        throw std::domain_error(
                            "continuous_energy: sincw exceptional case (odd integer s)");
                    acc += alpha[m] * std::exp(e * std::log(complexd(half, 0.0))) / e;
                }
                return 2.0 / L * acc;
            } else if constexpr (std::is_same_v<T, LaplaceDiscreteKernel>) {
                // (2/L) int_0^inf (1 - e^{-t L/2})/t dmu(t)
                double acc = 0.0;
                for (const auto& ms : kk.masses)
                    acc += ms.t == 0.0 ? ms.w * half
                                       : ms.w * (1.0 - std::exp(-ms.t * half)) / ms.t;
                return complexd(2.0 / L * acc, 0.0);
            } else {
                static_assert(std::is_same_v<T, ExpInvKernel>);
                // e^{2/L} - (2/L)(1 - 2 gamma + log L + Ei(2/L))
                return complexd(
                    std::exp(2.0 / L) -
                        2.0 / L *
                            (1.0 - 2.0 * euler_gamma + std::log(L) +
                             exp_integral_ei(2.0 / L)),
                    0.0);
            }
        },
        k);
}

}  // namespace geoe
