// Builders for the evaluable asymptotic expansions: the zeta tower over
// the singular exponents of f, the parity-dependent boundary sum from odd
// derivatives of f at L/2, and the continuous-energy N^2 coefficient,
// including the exceptional N^2 log N case and the essential-singularity
// kernel whose tower is the entire function F(z) = sum zeta(n) z^n / n!.

#include "geoe/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "geoe/energy.hpp"
#include "geoe/specialfn.hpp"

namespace geoe {

namespace {

constexpr double exceptional_eps = 1e-12;

complexd pow_c(double base, complexd e) {
    return std::exp(e * std::log(complexd(base, 0.0)));
}

bool near_one(complexd s) {
    return std::abs(s - complexd(1.0, 0.0)) < exceptional_eps;
}

// zeta(s_n) with the exact zeros at nonpositive even integers dropped by
// the caller; pole guard stays with riemann_zeta
bool zeta_vanishes(complexd s) {
    return s.imag() == 0.0 && s.real() <= -2.0 &&
           s.real() == std::floor(s.real()) &&
           static_cast<long>(-s.real()) % 2 == 0;
}

// ---- adaptive Gauss-Kronrod(7,15) for the (f - S_q) integral ----

constexpr std::array<double, 15> k15_x = {
    -0.991455371120812639206854697526, -0.949107912342758524526189684048,
    -0.864864423359769072789712788641, -0.741531185599394439863864773281,
    -0.586087235467691130294144838259, -0.405845151377397166906606412077,
    -0.207784955007898467600689403773, 0.0,
    0.207784955007898467600689403773,  0.405845151377397166906606412077,
    0.586087235467691130294144838259,  0.741531185599394439863864773281,
    0.864864423359769072789712788641,  0.949107912342758524526189684048,
    0.991455371120812639206854697526};
constexpr std::array<double, 15> k15_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};
constexpr std::array<double, 7> g7_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

template <typename F>
complexd gk_recurse(const F& f, double a, double b, double tol, int depth) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    complexd k15(0.0, 0.0), g7(0.0, 0.0);
    for (int i = 0; i < 15; ++i) {
        const complexd v = f(mid + half * k15_x[i]);
        k15 += k15_w[i] * v;
        if (i % 2 == 1) g7 += g7_w[i / 2] * v;
    }
    k15 *= half;
    g7 *= half;
    const double err = std::abs(k15 - g7);
    if (err < tol || depth > 200) return k15;
    return gk_recurse(f, a, mid, tol / 2.0, depth + 1) +
           gk_recurse(f, mid, b, tol / 2.0, depth + 1);
}

template <typename F>
complexd integrate_adaptive(const F& f, double a, double b, double tol) {
    return gk_recurse(f, a, b, tol, 0);
}

// singular-part value at x
complexd eval_singular(const SingularPart& sp, double x) {
    complexd acc(0.0, 0.0);
    for (const auto& t : sp.terms) acc += t.a * pow_c(x, -t.s);
    return acc;
}

// f - S_q with the cancellation floor: once the difference falls below
// working precision of the two sides it is numerically zero, which also
// keeps the quadrature from chasing rounding noise into x -> 0
complexd singular_remainder(const Kernel& k, const SingularPart& sp, double x) {
    const complexd f = eval_kernel(k, x);
    const complexd s = eval_singular(sp, x);
    const complexd d = f - s;
    if (std::abs(d) <= 3e-14 * (std::abs(f) + std::abs(s))) return {0.0, 0.0};
    return d;
}

int find_exceptional(const SingularPart& sp) {
    for (size_t i = 0; i < sp.terms.size(); ++i)
        if (near_one(sp.terms[i].s)) return static_cast<int>(i);
    return -1;
}

void sort_terms(Expansion& e) {
    std::stable_sort(e.terms.begin(), e.terms.end(),
                     [](const ExpansionTerm& a, const ExpansionTerm& b) {
                         if (a.n_power.real() != b.n_power.real())
                             return a.n_power.real() > b.n_power.real();
                         return a.log_power > b.log_power;
                     });
}

void push_term(Expansion& e, complexd coeff, complexd power, int log_power = 0) {
    if (coeff == complexd(0.0, 0.0)) return;
    e.terms.push_back({coeff, power, log_power});
}

// F(z) = sum_{n>=2} zeta(n) z^n / n! = (e^z - 1 - z) + sum (zeta(n)-1) z^n/n!.
// Since 0 < zeta(n) - 1 < 2^{1-n}, the correction series totals O(e^{z/2});
// truncating it at n = 60 leaves at most O(e^{z/2}) = O(1e-16 e^z) for the
// z where the cap binds, far below the e^z-sized value of F
double expinv_tail_f(double z) {
    double extra = 0.0, t = z;  // t = z^n/n!
    for (int n = 2; n <= 60; ++n) {
        t *= z / n;
        const double add = (zeta_int(n) - 1.0) * t;
        extra += add;
        if (std::abs(add) < 1e-17 * (std::abs(extra) + 1.0) && n > 8) break;
    }
    return std::expm1(z) - z + extra;
}

Expansion build_expinv(double L, int p, Parity parity) {
    Expansion e;
    e.kappa = parity.kappa;
    push_term(e, complexd(2.0 / L, 0.0), complexd(2.0, 0.0), 1);
    push_term(e, continuous_energy(ExpInvKernel{}, L), complexd(2.0, 0.0));
    push_term(e, complexd(-1.0, 0.0), complexd(1.0, 0.0));  // 2 zeta(0) N
    for (const auto& t : bp_terms(ExpInvKernel{}, L, p, parity))
        e.terms.push_back(t);
    e.extra = ExtraPart::expinv_tail;
    e.extra_length = L;
    e.remainder_exponent = -2.0 * p;  // next boundary term
    e.remainder_has_log = false;
    sort_terms(e);
    return e;
}

}  // namespace

std::vector<ExpansionTerm> bp_terms(const Kernel& k, double L, int p,
                                    Parity parity) {
    if (p < 0 || p > 15)
        throw std::invalid_argument("bp_terms: p out of range [0,15]");
    std::vector<ExpansionTerm> out;
    const rational half_kappa(parity.kappa, 2);
    double fact = 1.0;
    double Lpow = L * L;
    for (int n = 1; n <= p; ++n) {
        fact *= (2 * n - 1) * (2 * n);
        const double b =
            bernoulli_poly_rational(2 * n, half_kappa).convert_to<double>();
        const complexd coeff = 2.0 / L * b / fact * Lpow *
                               kernel_derivative(k, 2 * n - 1, L / 2.0);
        if (coeff != complexd(0.0, 0.0))
            out.push_back({coeff, complexd(2.0 - 2.0 * n, 0.0), 0});
        Lpow *= L * L;
    }
    return out;
}

complexd vf_general(const Kernel& k, double L, int q) {
    const SingularPart sp = singular_part(k, q);
    if (find_exceptional(sp) >= 0)
        throw std::domain_error("vf_general: singular exponent 1 present");
    const double half = L / 2.0;
    complexd acc(0.0, 0.0);
    for (const auto& t : sp.terms)
        acc += t.a * pow_c(half, complexd(1.0, 0.0) - t.s) /
               (complexd(1.0, 0.0) - t.s);
    acc += integrate_adaptive(
        [&](double x) { return singular_remainder(k, sp, x); }, 0.0, half,
        1e-12);
    return 2.0 / L * acc;
}

complexd vf_exceptional(const Kernel& k, double L, int q) {
    if (std::holds_alternative<ExpInvKernel>(k)) {
        // full series available in closed form
        return continuous_energy(k, L);
    }
    const SingularPart sp = singular_part(k, q);
    const int qp = find_exceptional(sp);
    if (qp < 0)
        throw std::domain_error("vf_exceptional: no singular exponent equals 1");
    const double half = L / 2.0;
    complexd acc = -sp.terms[qp].a * (std::log(2.0) - euler_gamma);
    for (size_t i = 0; i < sp.terms.size(); ++i) {
        if (static_cast<int>(i) == qp) continue;
        acc += sp.terms[i].a *
               pow_c(half, complexd(1.0, 0.0) - sp.terms[i].s) /
               (complexd(1.0, 0.0) - sp.terms[i].s);
    }
    acc += integrate_adaptive(
        [&](double x) { return singular_remainder(k, sp, x); }, 0.0, half,
        1e-12);
    return 2.0 / L * acc;
}

Expansion expansion_geodesic(const Kernel& k, double L, int p, int q,
                             Parity parity) {
    // closed-form families: the correction depth is the boundary-sum depth
    if (std::holds_alternative<LogKernel>(k)) {
        const int depth = q >= 1 ? q : (p >= 1 ? p : 3);
        return expansion_riesz(complexd(0.0, 0.0), L, depth, parity);
    }
    if (const auto* rz = std::get_if<RieszKernel>(&k)) {
        const int depth = p >= 1 ? p : (q >= 1 ? q : 3);
        return expansion_riesz(rz->s, L, depth, parity);
    }

    // Laplace-transform kernels are stated with q = 2p tied together
    if (std::holds_alternative<LaplaceDiscreteKernel>(k)) {
        if (p <= 0) p = std::max(2, (q + 1) / 2);
        q = 2 * p;
    }

    if (std::holds_alternative<ExpInvKernel>(k)) {
        if (p <= 0) p = 3;
        return build_expinv(L, p, parity);
    }

    SingularPart sp = singular_part(k, q);
    const double delta = sp.delta;
    const double re_sq = sp.terms.empty() ? 0.0 : sp.terms.back().s.real();

    bool pinned_p = p > 0;
    if (!pinned_p) {
        p = std::clamp(static_cast<int>(std::ceil((delta - re_sq) / 2.0)) + 1, 2, 15);
        if (2.0 * p == delta - re_sq) ++p;  // avoid the log-factor boundary
        p = std::min(p, 15);
    }
    if (p > 15) throw std::invalid_argument("expansion_geodesic: p exceeds 15");

    Expansion e;
    e.kappa = parity.kappa;
    const int qp = find_exceptional(sp);
    if (qp >= 0) {
        push_term(e, 2.0 * sp.terms[qp].a / L, complexd(2.0, 0.0), 1);
        push_term(e, vf_exceptional(k, L, q), complexd(2.0, 0.0));
    } else {
        push_term(e, vf_general(k, L, q), complexd(2.0, 0.0));
    }
    for (size_t i = 0; i < sp.terms.size(); ++i) {
        if (static_cast<int>(i) == qp) continue;
        const complexd s_n = sp.terms[i].s;
        if (zeta_vanishes(s_n)) continue;
        push_term(e,
                  sp.terms[i].a * 2.0 * riemann_zeta(s_n) * pow_c(L, -s_n),
                  complexd(1.0, 0.0) + s_n);
    }
    for (const auto& t : bp_terms(k, L, p, parity)) e.terms.push_back(t);

    // theorem bound for the remainder
    const double thm = std::max(1.0 - 2.0 * p, 1.0 - delta + re_sq);
    const bool at_log_boundary = (2.0 * p == delta - re_sq);
    // first omitted term of the complete expansion, per kernel family
    double sharp = thm;
    std::visit(
        [&](const auto& kk) {
            using T = std::decay_t<decltype(kk)>;
            if constexpr (std::is_same_v<T, PowerSeriesKernel> ||
                          std::is_same_v<T, LaurentKernel> ||
                          std::is_same_v<T, LaplaceDiscreteKernel>) {
                sharp = -2.0 * p;  // next boundary/odd-zeta term
            } else if constexpr (std::is_same_v<T, WeightedKernel>) {
                sharp = std::max(1.0 + kk.s.real() - (q + 1), -2.0 * p);
            } else if constexpr (std::is_same_v<T, SincWeightedKernel>) {
                const double tower = 1.0 + kk.s.real() - 2.0 * (q + 1);
                // at L = 2 pi every odd derivative vanishes at L/2, so the
                // boundary sum contributes nothing at any order
                sharp = std::abs(L / 2.0 - pi) < 1e-9 ? tower
                                                      : std::max(tower, -2.0 * p);
            }
        },
        k);
    e.remainder_exponent = std::min(sharp, thm + 0.0);
    e.remainder_has_log = at_log_boundary && pinned_p;
    sort_terms(e);
    return e;
}

Expansion expansion_riesz(complexd s, double L, int q, Parity parity) {
    if (q < 1) throw std::invalid_argument("expansion_riesz: q must be >= 1");
    Expansion e;
    e.kappa = parity.kappa;
    const rational half_kappa(parity.kappa, 2);

    if (s == complexd(0.0, 0.0)) {
        // log energy
        push_term(e, complexd(1.0 - std::log(L / 2.0), 0.0), complexd(2.0, 0.0));
        push_term(e, complexd(-1.0, 0.0), complexd(1.0, 0.0), 1);
        push_term(e, complexd(std::log(L / (2.0 * pi)), 0.0), complexd(1.0, 0.0));
        for (int n = 1; n <= q; ++n) {
            const double b =
                bernoulli_poly_rational(2 * n, half_kappa).convert_to<double>();
            push_term(e,
                      complexd(-b / ((2.0 * n - 1) * (2.0 * n)) *
                                   std::pow(2.0, 2 * n),
                               0.0),
                      complexd(2.0 - 2.0 * n, 0.0));
        }
        e.remainder_exponent = -2.0 * q;
        sort_terms(e);
        return e;
    }

    if (near_one(s)) {
        push_term(e, complexd(2.0 / L, 0.0), complexd(2.0, 0.0), 1);
        push_term(e, complexd(-(std::log(2.0) - euler_gamma) / (L / 2.0), 0.0),
                  complexd(2.0, 0.0));
        for (int n = 1; n <= q; ++n) {
            const double b =
                bernoulli_poly_rational(2 * n, half_kappa).convert_to<double>();
            push_term(e,
                      complexd(-2.0 / L * b / (2.0 * n) * std::pow(2.0, 2 * n), 0.0),
                      complexd(2.0 - 2.0 * n, 0.0));
        }
        e.remainder_exponent = -2.0 * q;
        // theta in (0,1]: the omitted term itself bounds the remainder
        e.remainder_coefficient =
            2.0 / L *
            std::abs(bernoulli_poly_rational(2 * q + 2, half_kappa)
                         .convert_to<double>()) /
            (2.0 * q + 2.0) * std::pow(2.0, 2 * q + 2);
        sort_terms(e);
        return e;
    }

    if (s.imag() == 0.0 && s.real() < 0.0 && s.real() == std::floor(s.real())) {
        // negative integer: closed form, remainder identically zero
        const int pp = static_cast<int>(-s.real());
        const double half_pow = std::pow(L / 2.0, pp);
        push_term(e, complexd(half_pow / (pp + 1), 0.0), complexd(2.0, 0.0));
        for (int n = 1; n <= pp / 2; ++n) {
            const rational coeff = rational(binomial_exact(pp + 1, 2 * n)) *
                                   bernoulli_poly_rational(2 * n, half_kappa);
            push_term(e,
                      complexd(half_pow / (pp + 1) *
                                   coeff.convert_to<double>() *
                                   std::pow(2.0, 2 * n),
                               0.0),
                      complexd(2.0 - 2.0 * n, 0.0));
        }
        const rational tail = bernoulli_poly_rational(pp + 1, half_kappa) -
                              bernoulli_rational(pp + 1);
        if (tail != 0)
            push_term(e,
                      complexd(2.0 * std::pow(L, pp) / (pp + 1) *
                                   tail.convert_to<double>(),
                               0.0),
                      complexd(1.0 - pp, 0.0));
        e.remainder_exponent = 0.0;
        e.remainder_coefficient = 0.0;  // exact
        sort_terms(e);
        return e;
    }

    // general tower; the precondition Re s + 2q >= 0 fixes the minimal q
    if (s.real() + 2.0 * q < 0.0)
        q = static_cast<int>(std::ceil(-s.real() / 2.0));
    push_term(e, pow_c(L / 2.0, -s) / (complexd(1.0, 0.0) - s), complexd(2.0, 0.0));
    push_term(e, 2.0 * riemann_zeta(s) * pow_c(L, -s), complexd(1.0, 0.0) + s);
    const complexd scale = pow_c(L / 2.0, -s);
    double fact = 1.0;
    for (int n = 1; n <= q; ++n) {
        fact *= (2 * n - 1) * (2 * n);
        const double b =
            bernoulli_poly_rational(2 * n, half_kappa).convert_to<double>();
        push_term(e,
                  -scale * b / fact * pochhammer(s, 2 * n - 1) *
                      std::pow(2.0, 2 * n),
                  complexd(2.0 - 2.0 * n, 0.0));
    }
    e.remainder_exponent = -2.0 * q;
    sort_terms(e);
    return e;
}

Expansion expansion_euclid(complexd s, int p, int q) {
    if (s == complexd(0.0, 0.0))
        throw std::invalid_argument("expansion_euclid: s = 0 rejected");
    if (p < 1) p = 3;
    if (q < 0) q = 2 * p;

    Expansion e;
    e.kappa = -1;  // no parity dependence: the boundary sum vanishes

    const bool odd_integer =
        s.imag() == 0.0 && s.real() > 0.0 && s.real() == std::floor(s.real()) &&
        static_cast<long>(s.real()) % 2 == 1;

    if (odd_integer) {
        const int ell = (static_cast<int>(s.real()) - 1) / 2;
        const int top = p + ell;
        const auto alpha = sinc_alpha_series(s, std::max(top, 2));
        push_term(e, alpha[ell] / pi, complexd(2.0, 0.0), 1);
        push_term(e, vf_exceptional(SincWeightedKernel{s}, 2.0 * pi, 2 * ell + 8),
                  complexd(2.0, 0.0));
        for (int m = 0; m <= top; ++m) {
            if (m == ell) continue;
            const complexd sm = s - complexd(2.0 * m, 0.0);
            if (zeta_vanishes(sm)) continue;
            push_term(e, alpha[m] * 2.0 * riemann_zeta(sm) * pow_c(2.0 * pi, -sm),
                      complexd(1.0, 0.0) + sm);
        }
        // first omitted tower term: 1 + s - 2(p + ell + 1) = -2p
        e.remainder_exponent = -2.0 * p;
        sort_terms(e);
        return e;
    }

    // V_s = 2^{-s} Gamma((1-s)/2) / (sqrt(pi) Gamma(1 - s/2)); zero at even
    // positive integers through the Gamma pole in the denominator
    complexd vs(0.0, 0.0);
    const bool even_integer =
        s.imag() == 0.0 && s.real() > 0.0 && s.real() == std::floor(s.real()) &&
        static_cast<long>(s.real()) % 2 == 0;
    if (!even_integer) {
        vs = pow_c(2.0, -s) * complex_gamma((complexd(1.0, 0.0) - s) / 2.0) /
             (std::sqrt(pi) * complex_gamma(complexd(1.0, 0.0) - s / 2.0));
    }
    push_term(e, vs, complexd(2.0, 0.0));

    const auto alpha = sinc_alpha_series(s, std::max(q, 1));
    for (int n = 0; n <= q; ++n) {
        const complexd sn = s - complexd(2.0 * n, 0.0);
        if (near_one(sn))
            throw std::domain_error(
                "expansion_euclid: tower hits the zeta pole (odd integer s)");
        if (zeta_vanishes(sn)) continue;
        push_term(e, alpha[n] * 2.0 * riemann_zeta(sn) * pow_c(2.0 * pi, -sn),
                  complexd(1.0, 0.0) + sn);
    }
    // no boundary sum on the unit circle: the remainder is the first
    // omitted tower term
    e.remainder_exponent = 1.0 + s.real() - 2.0 * (q + 1.0);
    sort_terms(e);
    return e;
}

namespace {

ExpansionValue evaluate_impl(const Expansion& e, long n) {
    if (n < 2) throw std::invalid_argument("evaluate_expansion: N must be >= 2");
    using complexl = std::complex<long double>;
    const long double nl = n;
    const long double logn = std::log(nl);
    complexl acc(0.0L, 0.0L);
    for (const auto& t : e.terms) {
        complexl v = std::exp(complexl(t.n_power.real(), t.n_power.imag()) *
                              complexl(logn, 0.0L));
        v *= complexl(t.coeff.real(), t.coeff.imag());
        if (t.log_power == 1) v *= logn;
        acc += v;
    }
    if (e.extra == ExtraPart::expinv_tail)
        acc += 2.0L * nl *
               static_cast<long double>(
                   expinv_tail_f(static_cast<double>(n) / e.extra_length));
    double scale = e.remainder_coefficient *
                   std::pow(static_cast<double>(n), e.remainder_exponent);
    if (e.remainder_has_log) scale *= std::log(static_cast<double>(n));
    return {complexd(static_cast<double>(acc.real()),
                     static_cast<double>(acc.imag())),
            scale};
}

}  // namespace

ExpansionValue evaluate_expansion(const Expansion& e, long n) {
    if (e.kappa >= 0 && static_cast<int>(n & 1) != e.kappa)
        throw std::invalid_argument(
            "evaluate_expansion: N parity does not match the expansion");
    return evaluate_impl(e, n);
}

ExpansionValue evaluate_expansion_any_parity(const Expansion& e, long n) {
    return evaluate_impl(e, n);
}

void to_json(nlohmann::json& j, const Expansion& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : e.terms) {
        terms.push_back({{"coeff_re", t.coeff.real()},
                         {"coeff_im", t.coeff.imag()},
                         {"power_re", t.n_power.real()},
                         {"power_im", t.n_power.imag()},
                         {"log_power", t.log_power}});
    }
    j = nlohmann::json{{"terms", std::move(terms)},
                       {"kappa", e.kappa},
                       {"remainder_exponent", e.remainder_exponent},
                       {"remainder_has_log", e.remainder_has_log},
                       {"remainder_coefficient", e.remainder_coefficient}};
    if (e.extra == ExtraPart::expinv_tail) {
        j["extra"] = {{"kind", "expinv_tail"}, {"length", e.extra_length}};
    }
}

void from_json(const nlohmann::json& j, Expansion& e) {
    e.terms.clear();
    for (const auto& t : j.at("terms")) {
        ExpansionTerm term;
        term.coeff = complexd(t.at("coeff_re").get<double>(),
                              t.at("coeff_im").get<double>());
        term.n_power = complexd(t.at("power_re").get<double>(),
                                t.at("power_im").get<double>());
        term.log_power = t.at("log_power").get<int>();
        e.terms.push_back(term);
    }
    e.kappa = j.at("kappa").get<int>();
    e.remainder_exponent = j.at("remainder_exponent").get<double>();
    e.remainder_has_log = j.at("remainder_has_log").get<bool>();
    e.remainder_coefficient = j.value("remainder_coefficient", 1.0);
    e.extra = ExtraPart::none;
    e.extra_length = 0.0;
    if (j.contains("extra")) {
        const auto& x = j.at("extra");
        if (x.at("kind").get<std::string>() == "expinv_tail") {
            e.extra = ExtraPart::expinv_tail;
            e.extra_length = x.at("length").get<double>();
        }
    }
}

}  // namespace geoe
