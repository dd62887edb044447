#pragma once

#include <json.hpp>

#include "geoe/kernels.hpp"
#include "geoe/types.hpp"

namespace geoe {

// One term c * N^alpha * (log N)^beta, beta in {0,1}.
struct ExpansionTerm {
    complexd coeff;
    complexd n_power;
    int log_power = 0;
};

// Non-power contribution for the essential-singularity kernel:
// 2N F(N/L) with F(z) = sum_{n>=2} zeta(n) z^n / n!.
enum class ExtraPart { none, expinv_tail };

struct Expansion {
    std::vector<ExpansionTerm> terms;  // sorted by descending Re(n_power)
    int kappa = 0;                     // -1: parity-independent
    double remainder_exponent = 0.0;
    bool remainder_has_log = false;
    double remainder_coefficient = 1.0;  // scale for the remainder bound
    ExtraPart extra = ExtraPart::none;
    double extra_length = 0.0;
};

// Parity-dependent boundary terms
// (2/L) (B_{2n}(kappa/2)/(2n)!) L^{2n} f^{(2n-1)}(L/2) N^{2-2n}, n = 1..p.
std::vector<ExpansionTerm> bp_terms(const Kernel& k, double L, int p,
                                    Parity parity);

// V_f = (2/L)[ sum a_n (L/2)^{1-s_n}/(1-s_n) + int_0^{L/2} (f - S_q) ],
// the integral by adaptive Gauss-Kronrod with absolute tolerance 1e-12.
complexd vf_general(const Kernel& k, double L, int q);

// The exceptional-case V_f with the -a_{q'}(log 2 - gamma) correction;
// exactly one singular exponent must equal 1.
complexd vf_exceptional(const Kernel& k, double L, int q);

// Assembles V_f N^2 (+ N^2 log N in the exceptional case), the zeta tower
// over the singular exponents, and the boundary terms. p = 0 selects a
// default boundary depth. The declared remainder exponent is the first
// omitted term of the complete expansion for the series kernel families,
// never larger than the theorem bound max(1-2p, 1-delta+Re s_q).
Expansion expansion_geodesic(const Kernel& k, double L, int p, int q,
                             Parity parity);

// Riesz dispatch: closed-form towers for s = 0 (log energy), s = 1
// (exceptional), negative integer s (exact), and the general tower
// otherwise; q is the number of parity-dependent correction terms.
Expansion expansion_riesz(complexd s, double L, int q, Parity parity);

// Euclidean roots-of-unity energy; no boundary term. s a positive odd
// integer takes the N^2 log N branch. Parity-independent.
Expansion expansion_euclid(complexd s, int p, int q);

struct ExpansionValue {
    complexd value;
    double remainder_scale = 0.0;
};

// Evaluates at N (parity of N must match); remainder_scale is
// remainder_coefficient * N^remainder_exponent (* log N when flagged).
ExpansionValue evaluate_expansion(const Expansion& e, long n);

// Same, without the parity check; used to demonstrate that cross-parity
// coefficients are load-bearing.
ExpansionValue evaluate_expansion_any_parity(const Expansion& e, long n);

void to_json(nlohmann::json& j, const Expansion& e);
void from_json(const nlohmann::json& j, Expansion& e);

}  // namespace geoe
