#pragma once

#include <functional>
#include <json.hpp>
#include <string>

#include "geoe/asymptotics.hpp"
#include "geoe/kernels.hpp"
#include "geoe/types.hpp"

namespace geoe {

struct OrderFitReport {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<long> n_values;  // the points that entered the fit
    double declared_exponent = 0.0;
    bool pass = false;
    bool exact_match = false;   // every difference underflowed
    bool inconclusive = false;  // fewer than 3 usable points
    double tolerance = 0.3;
};

// Least-squares fit of log|exact - expansion| against log N over a
// geometric N grid of one parity; points where the difference underflows
// 1e-15 |exact| are excluded. All differences underflowing counts as an
// exact match (remainder below working precision), which passes.
OrderFitReport order_fit(const std::function<complexd(long)>& exact_fn,
                         const Expansion& expansion,
                         const std::vector<long>& n_grid,
                         double tolerance = 0.3);

// plain log-log regression helper: returns slope, intercept, r^2
struct LogLogFit {
    double slope = 0.0, intercept = 0.0, r_squared = 1.0;
};
LogLogFit loglog_fit(const std::vector<std::pair<double, double>>& points);

struct OptimalityReport {
    double best_energy = 0.0;
    double reference_energy = 0.0;
    std::vector<double> best_positions;
    int restarts = 0;
    bool pass = false;
};

enum class OptimalityCase { equally_spaced, antipodal };

// Multi-restart coordinate descent on arclength positions with point 0
// gauge-fixed at 0; steps halve from L/4 down to 1e-10 and wrap mod L.
// Deterministic in (seed, restarts). Only real-valued kernels (under the
// signed Riesz convention where applicable) are meaningful here.
OptimalityReport optimality_search(const Kernel& k, OptimalityCase reference,
                                   double L, int n, int restarts,
                                   std::uint64_t seed);

struct IdentityCheck {
    std::string name;
    double error = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass = false;
};

// Cross-identity aggregate: chordal identity, zeta_p flatness at negative
// integers, B_n(1/2) identity, the L_2(N) closed form, Hurwitz reductions,
// and the Fresnel cross-check of the sin-weight energy coefficient.
IdentityReport identity_suite();

// Worst |M_1 exact - expansion| / bound over N in [n_lo, n_hi] of one
// parity, with bound = (2/L)(|B_{2q+2}(kappa/2)|/(2q+2)) 2^{2q+2} N^{-2q};
// computed in quad precision so the comparison is meaningful at large N.
double riesz1_bound_worst_ratio(double L, int q, long n_lo, long n_hi,
                                Parity parity);

void to_json(nlohmann::json& j, const OrderFitReport& r);
void to_json(nlohmann::json& j, const OptimalityReport& r);
void to_json(nlohmann::json& j, const IdentityCheck& c);
void to_json(nlohmann::json& j, const IdentityReport& r);

}  // namespace geoe
