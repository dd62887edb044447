// Kernel families with values, high-order derivatives, and the singular
// part S_q(x) = sum a_n x^{-s_n} that drives the energy asymptotics.

#include "geoe/kernels.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "geoe/specialfn.hpp"

namespace geoe {

namespace {

constexpr int max_derivative_order = 31;  // 2*p_max + 1 with p_max = 15
constexpr int sinc_series_cap = 188;      // alpha_n underflows past ~190

complexd pow_c(double base, complexd e) {
    return std::exp(e * std::log(complexd(base, 0.0)));
}

// falling factorial e (e-1) ... (e-m+1)
complexd falling(complexd e, int m) {
    complexd r(1.0, 0.0);
    for (int j = 0; j < m; ++j) r *= e - complexd(j, 0.0);
    return r;
}

void check_positive(double x) {
    if (!(x > 0.0)) throw std::domain_error("kernel: requires x > 0");
}

double sgn_re(complexd s) {
    if (s.real() > 0.0) return 1.0;
    if (s.real() < 0.0) return -1.0;
    return 0.0;
}

// derivative polynomials of e^{1/x}: f^{(m)}(x) = e^{u} p_m(u), u = 1/x,
// p_0 = 1, p_{m+1}(u) = -u^2 (p_m'(u) + p_m(u)); integer coefficients kept
// exact to avoid cancellation in the alternating sums
const std::vector<std::vector<bigint>>& expinv_polys() {
    static const std::vector<std::vector<bigint>> cache = [] {
        std::vector<std::vector<bigint>> ps;
        ps.push_back({bigint(1)});  // p_0
        for (int m = 0; m < max_derivative_order; ++m) {
            const auto& p = ps.back();
            const int deg = static_cast<int>(p.size()) - 1;
            std::vector<bigint> next(deg + 3, bigint(0));
            for (int j = 0; j <= deg; ++j) {
                if (j >= 1) next[j + 1] -= p[j] * j;  // -u^2 * p'
                next[j + 2] -= p[j];                  // -u^2 * p
            }
            ps.push_back(std::move(next));
        }
        return ps;
    }();
    return cache;
}

double expinv_poly_eval(int m, double u) {
    const auto& p = expinv_polys()[m];
    long double acc = 0.0L;
    for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j)
        acc = acc * u + p[j].convert_to<long double>();
    return static_cast<double>(acc);
}

// coefficients H_j of (2 cos(u/2))^{-s} = sum H_j u^{2j}; derivatives of
// the sinc-weighted kernel at x = pi are H_{m/2} m! (0 for odd m)
std::vector<complexd> sincw_pi_series(complexd s, int nmax) {
    std::vector<long double> c(nmax + 1);
    c[0] = 1.0L;
    for (int m = 1; m <= nmax; ++m)
        c[m] = -c[m - 1] / (4.0L * (2 * m - 1) * (2 * m));  // cos(u/2) in t=u^2
    std::vector<long double> l(nmax + 1, 0.0L);
    for (int m = 1; m <= nmax; ++m) {
        long double acc = c[m];
        for (int j = 1; j < m; ++j)
            acc -= (static_cast<long double>(j) / m) * l[j] * c[m - j];
        l[m] = acc;
    }
    std::vector<std::complex<long double>> e(nmax + 1);
    e[0] = std::complex<long double>(1.0L, 0.0L);
    const std::complex<long double> msl(-s.real(), -s.imag());
    for (int m = 1; m <= nmax; ++m) {
        std::complex<long double> acc(0.0L, 0.0L);
        for (int j = 1; j <= m; ++j)
            acc += static_cast<long double>(j) * (msl * l[j]) * e[m - j];
        e[m] = acc / static_cast<long double>(m);
    }
    const complexd scale = pow_c(2.0, -s);
    std::vector<complexd> out(nmax + 1);
    for (int m = 0; m <= nmax; ++m)
        out[m] = scale * complexd(static_cast<double>(e[m].real()),
                                  static_cast<double>(e[m].imag()));
    return out;
}

complexd sincw_derivative(const SincWeightedKernel& k, int m, double x) {
    if (std::abs(x - pi) < 1e-9) {
        if (m % 2 == 1) return complexd(0.0, 0.0);  // even about pi
        static thread_local std::vector<complexd> cached;
        static thread_local complexd cached_s{0.0, 0.0};
        const int need = m / 2;
        if (cached.size() < static_cast<size_t>(need + 1) || cached_s != k.s) {
            cached = sincw_pi_series(k.s, std::max(need, 24));
            cached_s = k.s;
        }
        double fact = 1.0;
        for (int j = 2; j <= m; ++j) fact *= j;
        return cached[need] * fact;
    }
    // termwise from f = sum alpha_n(s) x^{2n-s}
    static thread_local std::vector<complexd> alpha_cache;
    static thread_local complexd alpha_s{0.0, 0.0};
    if (alpha_cache.empty() || alpha_s != k.s) {
        alpha_cache = sinc_alpha_series(k.s, sinc_series_cap);
        alpha_s = k.s;
    }
    const auto& alpha = alpha_cache;
    complexd sum(0.0, 0.0);
    int tiny_run = 0;
    for (int n = 0; n <= sinc_series_cap; ++n) {
        const complexd expo = complexd(2.0 * n, 0.0) - k.s;
        const complexd term =
            alpha[n] * falling(expo, m) * pow_c(x, expo - complexd(m, 0.0));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) {
            if (++tiny_run >= 4 && n > m) break;
        } else {
            tiny_run = 0;
        }
    }
    return sum;
}

complexd weight_poly_derivative(const std::vector<complexd>& w, int d, double x) {
    complexd out(0.0, 0.0);
    double xp = 1.0;
    for (int n = d; n < static_cast<int>(w.size()); ++n) {
        double fall = 1.0;
        for (int j = 0; j < d; ++j) fall *= n - j;
        out += w[n] * fall * xp;
        xp *= x;
    }
    return out;
}

}  // namespace

double kernel_domain_limit(const Kernel& k) {
    if (const auto* ps = std::get_if<PowerSeriesKernel>(&k)) return ps->radius;
    if (std::holds_alternative<SincWeightedKernel>(k)) return 2.0 * pi;
    return std::numeric_limits<double>::infinity();
}

complexd eval_kernel(const Kernel& k, double x) {
    check_positive(x);
    if (x >= kernel_domain_limit(k))
        throw std::domain_error("kernel: x outside the disc of analyticity");
    return std::visit(
        [&](const auto& kk) -> complexd {
            using T = std::decay_t<decltype(kk)>;
            if constexpr (std::is_same_v<T, RieszKernel>) {
                if (kk.s.imag() == 0.0) {
                    const double v = std::pow(x, -kk.s.real());
                    return complexd(
                        kk.signed_convention ? sgn_re(kk.s) * v : v, 0.0);
                }
                return pow_c(x, -kk.s);
            } else if constexpr (std::is_same_v<T, LogKernel>) {
                return complexd(-std::log(x), 0.0);
            } else if constexpr (std::is_same_v<T, PowerSeriesKernel>) {
                complexd acc(0.0, 0.0);
                for (int n = static_cast<int>(kk.coeffs.size()) - 1; n >= 0; --n)
                    acc = acc * x + kk.coeffs[n];
                return acc;
            } else if constexpr (std::is_same_v<T, LaurentKernel>) {
                complexd acc(0.0, 0.0);
                for (int i = static_cast<int>(kk.coeffs.size()) - 1; i >= 0; --i)
                    acc = acc * x + kk.coeffs[i];
                return acc * std::pow(x, -kk.pole_order);
            } else if constexpr (std::is_same_v<T, WeightedKernel>) {
                complexd acc(0.0, 0.0);
                for (int n = static_cast<int>(kk.weight_coeffs.size()) - 1;
                     n >= 0; --n)
                    acc = acc * x + kk.weight_coeffs[n];
                return acc * pow_c(x, -kk.s);
            } else if constexpr (std::is_same_v<T, SincWeightedKernel>) {
                return pow_c(2.0 * std::sin(x / 2.0), -kk.s);
            } else if constexpr (std::is_same_v<T, LaplaceDiscreteKernel>) {
                complexd acc(0.0, 0.0);
                for (const auto& ms : kk.masses)
                    acc += complexd(ms.w * std::exp(-x * ms.t), 0.0);
                return acc;
            } else {
                static_assert(std::is_same_v<T, ExpInvKernel>);
                return complexd(std::exp(1.0 / x), 0.0);
            }
        },
        k);
}

std::optional<complexd> eval_kernel_at_zero(const Kernel& k) {
    return std::visit(
        [&](const auto& kk) -> std::optional<complexd> {
            using T = std::decay_t<decltype(kk)>;
            if constexpr (std::is_same_v<T, RieszKernel>) {
                if (kk.s.real() < 0.0)
                    return complexd(0.0, 0.0);  // x^{-s} -> 0
                if (kk.s.real() == 0.0 && kk.s.imag() == 0.0)
                    return complexd(kk.signed_convention ? 0.0 : 1.0, 0.0);
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, PowerSeriesKernel>) {
                return kk.coeffs.empty() ? complexd(0.0, 0.0) : kk.coeffs[0];
            } else if constexpr (std::is_same_v<T, WeightedKernel>) {
                if (kk.s.real() < 0.0) return complexd(0.0, 0.0);
                if (kk.s.real() == 0.0 && kk.s.imag() == 0.0 &&
                    !kk.weight_coeffs.empty())
                    return kk.weight_coeffs[0];
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, SincWeightedKernel>) {
                if (kk.s.real() < 0.0) return complexd(0.0, 0.0);
                if (kk.s.real() == 0.0 && kk.s.imag() == 0.0)
                    return complexd(1.0, 0.0);
                return std::nullopt;
            } else if constexpr (std::is_same_v<T, LaplaceDiscreteKernel>) {
                complexd acc(0.0, 0.0);
                for (const auto& ms : kk.masses) acc += complexd(ms.w, 0.0);
                return acc;
            } else {
                return std::nullopt;  // Log, Laurent, ExpInv blow up
            }
        },
        k);
}

complexd kernel_derivative(const Kernel& k, int m, double x) {
    if (m < 0 || m > max_derivative_order)
        throw std::domain_error("kernel_derivative: order exceeds 31");
    check_positive(x);
    if (x >= kernel_domain_limit(k))
        throw std::domain_error("kernel: x outside the disc of analyticity");
    if (m == 0) return eval_kernel(k, x);
    return std::visit(
        [&](const auto& kk) -> complexd {
            using T = std::decay_t<decltype(kk)>;
            if constexpr (std::is_same_v<T, RieszKernel>) {
                const double sign = (m % 2 == 0) ? 1.0 : -1.0;
                const complexd v =
                    sign * pochhammer(kk.s, m) * pow_c(x, -kk.s - complexd(m, 0.0));
                return kk.signed_convention && kk.s.imag() == 0.0
                           ? sgn_re(kk.s) * v
                           : v;
            } else if constexpr (std::is_same_v<T, LogKernel>) {
                // d^m/dx^m log(1/x) = -(-1)^{m-1} (m-1)! x^{-m}
                double fact = 1.0;
                for (int j = 2; j < m; ++j) fact *= j;
                const double sign = (m % 2 == 1) ? -1.0 : 1.0;
                return complexd(sign * fact * std::pow(x, -m), 0.0);
            } else if constexpr (std::is_same_v<T, PowerSeriesKernel>) {
                complexd acc(0.0, 0.0);
                double xp = 1.0;
                for (int n = m; n < static_cast<int>(kk.coeffs.size()); ++n) {
                    double fall = 1.0;
                    for (int j = 0; j < m; ++j) fall *= n - j;
                    acc += kk.coeffs[n] * fall * xp;
                    xp *= x;
                }
                return acc;
            } else if constexpr (std::is_same_v<T, LaurentKernel>) {
                complexd acc(0.0, 0.0);
                for (int i = 0; i < static_cast<int>(kk.coeffs.size()); ++i) {
                    const int n = i - kk.pole_order;
                    acc += kk.coeffs[i] * falling(complexd(n, 0.0), m) *
                           std::pow(x, n - m);
                }
                return acc;
            } else if constexpr (std::is_same_v<T, WeightedKernel>) {
                // Leibniz over x^{-s} * w(x)
                complexd acc(0.0, 0.0);
                double binom = 1.0;
                for (int j = 0; j <= m; ++j) {
                    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
                    const complexd dpow = sign * pochhammer(kk.s, j) *
                                          pow_c(x, -kk.s - complexd(j, 0.0));
                    acc += binom * dpow *
                           weight_poly_derivative(kk.weight_coeffs, m - j, x);
                    binom = binom * (m - j) / (j + 1);
                }
                return acc;
            } else if constexpr (std::is_same_v<T, SincWeightedKernel>) {
                return sincw_derivative(kk, m, x);
            } else if constexpr (std::is_same_v<T, LaplaceDiscreteKernel>) {
                complexd acc(0.0, 0.0);
                for (const auto& ms : kk.masses)
                    acc += complexd(
                        ms.w * std::pow(-ms.t, m) * std::exp(-x * ms.t), 0.0);
                return acc;
            } else {
                static_assert(std::is_same_v<T, ExpInvKernel>);
                const double u = 1.0 / x;
                return complexd(std::exp(u) * expinv_poly_eval(m, u), 0.0);
            }
        },
        k);
}

SingularPart singular_part(const Kernel& k, int q) {
    if (q < 0) throw std::invalid_argument("singular_part: q must be >= 0");
    SingularPart sp;
    std::visit(
        [&](const auto& kk) {
            using T = std::decay_t<decltype(kk)>;
            if constexpr (std::is_same_v<T, RieszKernel>) {
                if (q != 0)
                    throw std::invalid_argument("singular_part: Riesz uses q = 0");
                sp.terms.push_back({complexd(1.0, 0.0), kk.s});
                sp.delta = 1.0;  // remainder is identically zero
            } else if constexpr (std::is_same_v<T, LogKernel>) {
                // no power part; the log energy is handled by its own
                // closed-form expansion
                sp.delta = 1.0;
            } else if constexpr (std::is_same_v<T, PowerSeriesKernel>) {
                if (q >= static_cast<int>(kk.coeffs.size()))
                    throw std::invalid_argument(
                        "singular_part: q exceeds series length");
                for (int n = 0; n <= q; ++n)
                    if (kk.coeffs[n] != complexd(0.0, 0.0))
                        sp.terms.push_back({kk.coeffs[n], complexd(-n, 0.0)});
                sp.delta = 1.0;
            } else if constexpr (std::is_same_v<T, LaurentKernel>) {
                if (q >= static_cast<int>(kk.coeffs.size()))
                    throw std::invalid_argument(
                        "singular_part: q exceeds series length");
                for (int i = 0; i <= q; ++i) {
                    const int n = i - kk.pole_order;  // power x^n
                    if (kk.coeffs[i] != complexd(0.0, 0.0))
                        sp.terms.push_back({kk.coeffs[i], complexd(-n, 0.0)});
                }
                sp.delta = 1.0;
            } else if constexpr (std::is_same_v<T, WeightedKernel>) {
                if (q >= static_cast<int>(kk.weight_coeffs.size()))
                    throw std::invalid_argument(
                        "singular_part: q exceeds weight series length");
                for (int n = 0; n <= q; ++n)
                    if (kk.weight_coeffs[n] != complexd(0.0, 0.0))
                        sp.terms.push_back(
                            {kk.weight_coeffs[n], kk.s - complexd(n, 0.0)});
                sp.delta = 1.0;
            } else if constexpr (std::is_same_v<T, SincWeightedKernel>) {
                const auto alpha = sinc_alpha_series(kk.s, q);
                for (int n = 0; n <= q; ++n)
                    sp.terms.push_back({alpha[n], kk.s - complexd(2 * n, 0.0)});
                sp.delta = 2.0;  // even series: next exponent is 2 lower
            } else if constexpr (std::is_same_v<T, LaplaceDiscreteKernel>) {
                double fact = 1.0;
                for (int n = 0; n <= q; ++n) {
                    if (n > 0) fact *= n;
                    double mu = 0.0;
                    for (const auto& ms : kk.masses) mu += ms.w * std::pow(ms.t, n);
                    const double a = ((n % 2 == 0) ? 1.0 : -1.0) * mu / fact;
                    if (a != 0.0)
                        sp.terms.push_back({complexd(a, 0.0), complexd(-n, 0.0)});
                }
                sp.delta = 1.0;
            } else {
                static_assert(std::is_same_v<T, ExpInvKernel>);
                // essential singularity: exponents s_n = q, q-1, ..., 0 of the
                // truncated family sum_{n} x^{-n}/n!
                double fact = 1.0;
                std::vector<SingularTerm> tmp;
                for (int n = 0; n <= q; ++n) {
                    if (n > 0) fact *= n;
                    tmp.push_back({complexd(1.0 / fact, 0.0), complexd(n, 0.0)});
                }
                for (int i = q; i >= 0; --i) sp.terms.push_back(tmp[i]);
                sp.delta = 1.0;
            }
        },
        k);
    return sp;
}

AdmissibilityReport admissibility_probe(const Kernel& k, int q, int nu_max) {
    const SingularPart sp = singular_part(k, q);
    const double re_sq =
        sp.terms.empty() ? 0.0 : sp.terms.back().s.real();
    static constexpr std::array<double, 4> xs = {1e-1, 1e-2, 1e-3, 1e-4};

    AdmissibilityReport rep;
    rep.all_bounded = true;
    for (int nu = 0; nu <= nu_max; ++nu) {
        AdmissibilityRow row;
        row.nu = nu;
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (size_t i = 0; i < xs.size(); ++i) {
            const double x = xs[i];
            const complexd fval = kernel_derivative(k, nu, x);
            complexd sval(0.0, 0.0);
            for (const auto& t : sp.terms) {
                const double sign = (nu % 2 == 0) ? 1.0 : -1.0;
                sval += t.a * sign * pochhammer(t.s, nu) *
                        pow_c(x, -t.s - complexd(nu, 0.0));
            }
            complexd rem = fval - sval;
            // below working precision the remainder is numerically zero
            if (std::abs(rem) <= 3e-14 * (std::abs(fval) + std::abs(sval)))
                rem = complexd(0.0, 0.0);
            const double scaled =
                std::abs(rem) * std::pow(x, -(sp.delta - re_sq - nu));
            row.scaled[i] = scaled;
            lo = std::min(lo, scaled);
            hi = std::max(hi, scaled);
        }
        row.ratio = (lo > 0.0) ? hi / lo : (hi == 0.0 ? 1.0 : 1e300);
        // an identically-zero remainder is bounded by definition
        row.bounded = (hi == 0.0) || (hi <= 1e-250) || row.ratio < 100.0;
        rep.all_bounded = rep.all_bounded && row.bounded;
        rep.rows.push_back(row);
    }
    return rep;
}

bool kernel_is_real(const Kernel& k) {
    return std::visit(
        [&](const auto& kk) -> bool {
            using T = std::decay_t<decltype(kk)>;
            if constexpr (std::is_same_v<T, RieszKernel>)
                return kk.s.imag() == 0.0;
            else if constexpr (std::is_same_v<T, PowerSeriesKernel>) {
                for (const auto& c : kk.coeffs)
                    if (c.imag() != 0.0) return false;
                return true;
            } else if constexpr (std::is_same_v<T, LaurentKernel>) {
                for (const auto& c : kk.coeffs)
                    if (c.imag() != 0.0) return false;
                return true;
            } else if constexpr (std::is_same_v<T, WeightedKernel>) {
                if (kk.s.imag() != 0.0) return false;
                for (const auto& c : kk.weight_coeffs)
                    if (c.imag() != 0.0) return false;
                return true;
            } else if constexpr (std::is_same_v<T, SincWeightedKernel>)
                return kk.s.imag() == 0.0;
            else
                return true;  // Log, LaplaceDiscrete, ExpInv
        },
        k);
}

// ---------------------------------------------------------------------------
// kernel-spec mini-grammar

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_real_strict(const std::string& t) {
    size_t pos = 0;
    double v;
    try {
        v = std::stod(t, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("kernel spec: bad number '" + t + "'");
    }
    if (pos != t.size())
        throw std::invalid_argument("kernel spec: bad number '" + t + "'");
    return v;
}

std::vector<complexd> parse_complex_list(const std::string& t) {
    std::vector<complexd> out;
    for (const auto& piece : split(t, ','))
        out.push_back(parse_complex(piece));
    if (out.empty())
        throw std::invalid_argument("kernel spec: empty coefficient list");
    return out;
}

}  // namespace

complexd parse_complex(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty complex literal");

    // forms: a, bi, a+bi, a-bi (also unary-signed a and b)
    if (t.back() == 'i' || t.back() == 'I') {
        std::string body = t.substr(0, t.size() - 1);
        // find split between real and imaginary parts: last +/- not at
        // position 0 and not part of an exponent
        size_t cut = std::string::npos;
        for (size_t j = body.size(); j-- > 1;) {
            if ((body[j] == '+' || body[j] == '-') &&
                body[j - 1] != 'e' && body[j - 1] != 'E') {
                cut = j;
                break;
            }
        }
        if (cut == std::string::npos) {
            std::string im = body;
            if (im.empty() || im == "+") im = "1";
            else if (im == "-") im = "-1";
            return complexd(0.0, parse_real_strict(im));
        }
        std::string im = body.substr(cut);
        if (im == "+") im = "1";
        else if (im == "-") im = "-1";
        return complexd(parse_real_strict(body.substr(0, cut)),
                        parse_real_strict(im));
    }
    return complexd(parse_real_strict(t), 0.0);
}

Kernel parse_kernel(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string rest =
        colon == std::string::npos ? std::string() : spec.substr(colon + 1);

    if (head == "log") {
        if (!rest.empty()) throw std::invalid_argument("log takes no arguments");
        return LogKernel{};
    }
    if (head == "expinv") {
        if (!rest.empty())
            throw std::invalid_argument("expinv takes no arguments");
        return ExpInvKernel{};
    }
    if (head == "riesz" || head == "sincw") {
        if (rest.rfind("s=", 0) != 0)
            throw std::invalid_argument(head + " expects s=<complex>");
        const complexd s = parse_complex(rest.substr(2));
        if (head == "riesz") return RieszKernel{s, false};
        return SincWeightedKernel{s};
    }
    if (head == "series") {
        const auto parts = split(rest, ';');
        if (parts.size() != 2 || parts[1].rfind("radius=", 0) != 0)
            throw std::invalid_argument(
                "series expects <c0>,<c1>,...;radius=<r>");
        PowerSeriesKernel k;
        k.coeffs = parse_complex_list(parts[0]);
        k.radius = parse_real_strict(parts[1].substr(7));
        if (!(k.radius > 0.0))
            throw std::invalid_argument("series radius must be positive");
        return k;
    }
    if (head == "laurent") {
        const auto parts = split(rest, ';');
        if (parts.size() != 2 || parts[0].rfind("K=", 0) != 0)
            throw std::invalid_argument("laurent expects K=<k>;<c_-K>,...,<cJ>");
        LaurentKernel k;
        k.pole_order = static_cast<int>(parse_real_strict(parts[0].substr(2)));
        if (k.pole_order < 1)
            throw std::invalid_argument("laurent pole order must be >= 1");
        k.coeffs = parse_complex_list(parts[1]);
        if (k.coeffs[0] == complexd(0.0, 0.0))
            throw std::invalid_argument("laurent leading coefficient a_{-K} = 0");
        return k;
    }
    if (head == "weighted") {
        const auto parts = split(rest, ';');
        if (parts.size() != 2 || parts[0].rfind("s=", 0) != 0)
            throw std::invalid_argument(
                "weighted expects s=<complex>;<w0>,<w1>,...");
        WeightedKernel k;
        k.s = parse_complex(parts[0].substr(2));
        k.weight_coeffs = parse_complex_list(parts[1]);
        return k;
    }
    if (head == "laplace") {
        LaplaceDiscreteKernel k;
        std::string t;
        for (char c : rest)
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        size_t i = 0;
        while (i < t.size()) {
            if (t[i] != '(')
                throw std::invalid_argument("laplace expects (t,w) pairs");
            const size_t close = t.find(')', i);
            if (close == std::string::npos)
                throw std::invalid_argument("laplace: unbalanced parenthesis");
            const auto fields = split(t.substr(i + 1, close - i - 1), ',');
            if (fields.size() != 2)
                throw std::invalid_argument("laplace: pair needs two fields");
            LaplaceMass ms;
            ms.t = parse_real_strict(fields[0]);
            ms.w = parse_real_strict(fields[1]);
            if (ms.t < 0.0)
                throw std::invalid_argument("laplace: t must be >= 0");
            k.masses.push_back(ms);
            i = close + 1;
            if (i < t.size() && t[i] == ',') ++i;
        }
        if (k.masses.empty())
            throw std::invalid_argument("laplace: no masses given");
        return k;
    }
    throw std::invalid_argument("unknown kernel '" + head + "'");
}

}  // namespace geoe
