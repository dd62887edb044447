#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "geoe/types.hpp"

namespace geoe {

// Kernel families. Riesz evaluates x^{-s} (the analytic convention used by
// the expansion machinery); with signed_convention set and real s it
// evaluates sgn(s) x^{-s}, the form under which equally spaced points are
// optimal for s > -1 and antipodal systems for s < -1.
struct RieszKernel {
    complexd s;
    bool signed_convention = false;
};

struct LogKernel {};  // f(x) = log(1/x)

struct PowerSeriesKernel {
    std::vector<complexd> coeffs;  // a_0..a_J
    double radius = 0.0;
};

struct LaurentKernel {
    int pole_order = 1;             // K >= 1
    std::vector<complexd> coeffs;   // a_{-K}..a_J, coeffs[i] = a_{i-K}
};

struct WeightedKernel {
    complexd s;
    std::vector<complexd> weight_coeffs;  // w(x) = sum w_n x^n
};

struct SincWeightedKernel {
    complexd s;  // f(x) = x^{-s} sinc^{-s}(x/2) = (2 sin(x/2))^{-s}
};

struct LaplaceMass {
    double t = 0.0;
    double w = 0.0;
};

struct LaplaceDiscreteKernel {
    std::vector<LaplaceMass> masses;  // f(x) = sum w_i exp(-x t_i)
};

struct ExpInvKernel {};  // f(x) = e^{1/x}

using Kernel = std::variant<RieszKernel, LogKernel, PowerSeriesKernel,
                            LaurentKernel, WeightedKernel, SincWeightedKernel,
                            LaplaceDiscreteKernel, ExpInvKernel>;

// S_q(x) = sum_n a_n x^{-s_n}, Re s_0 > Re s_1 > ... ; the remainder
// f - S_q and its derivatives are O(x^{delta - s_q - nu}) near 0.
struct SingularTerm {
    complexd a;
    complexd s;
};

struct SingularPart {
    std::vector<SingularTerm> terms;
    double delta = 1.0;
};

complexd eval_kernel(const Kernel& k, double x);

// Limit of f as x -> 0+ where finite; nullopt signals a singular kernel.
std::optional<complexd> eval_kernel_at_zero(const Kernel& k);

// m-th derivative, closed form or termwise series; m <= 31.
complexd kernel_derivative(const Kernel& k, int m, double x);

SingularPart singular_part(const Kernel& k, int q);

// Diagnostic boundedness probe of |(f-S_q)^{(nu)}(x)| x^{-(delta-Re s_q-nu)}
// at x in {1e-1,..,1e-4}; bounded means max/min ratio < 100.
struct AdmissibilityRow {
    int nu = 0;
    std::array<double, 4> scaled{};
    double ratio = 0.0;
    bool bounded = false;
};

struct AdmissibilityReport {
    std::vector<AdmissibilityRow> rows;
    bool all_bounded = false;
};

AdmissibilityReport admissibility_probe(const Kernel& k, int q, int nu_max);

// Kernel mini-grammar: riesz:s=<complex>, log,
// series:<c0>,<c1>,...;radius=<r>, laurent:K=<k>;<c_-K>,...,<cJ>,
// weighted:s=<complex>;<w0>,<w1>,..., sincw:s=<complex>,
// laplace:(t1,w1),(t2,w2),..., expinv. Complex literals as a+bi.
Kernel parse_kernel(const std::string& spec);

// True when f is real-valued on (0, L/2] (real parameters).
bool kernel_is_real(const Kernel& k);

// Largest x the kernel can be evaluated at (series radius; 2*pi for the
// sinc-weighted family; +inf otherwise).
double kernel_domain_limit(const Kernel& k);

complexd parse_complex(const std::string& text);  // a+bi literals

}  // namespace geoe
