// geoe: command-line front end for exact geodesic energies, asymptotic
// expansions, N-sweeps, remainder-order fits, optimality searches, the
// special-function layer, and the cross-identity suite. JSON or CSV out,
// floats at 17 significant digits so every double round-trips.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>

#include "geoe/asymptotics.hpp"
#include "geoe/energy.hpp"
#include "geoe/specialfn.hpp"
#include "geoe/verify.hpp"

using nlohmann::json;
using namespace geoe;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Output {
    std::string format = "json";
    std::string path = "-";

    void emit_rows(const std::vector<json>& rows,
                   const std::vector<std::string>& columns) const {
        std::ostringstream os;
        if (format == "json") {
            json arr = json::array();
            for (const auto& r : rows) arr.push_back(r);
            os << arr.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < columns.size(); ++i)
                os << (i ? "," : "") << columns[i];
            os << "\n";
            for (const auto& r : rows) {
                for (size_t i = 0; i < columns.size(); ++i) {
                    const auto& v = r.at(columns[i]);
                    os << (i ? "," : "");
                    if (v.is_number_float())
                        os << fmt17(v.get<double>());
                    else
                        os << v.dump();
                }
                os << "\n";
            }
        }
        write(os.str());
    }

    void emit_json(const json& j) const {
        if (format == "csv") {
            // flatten scalar fields into a two-line CSV
            std::ostringstream head, line;
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!it.value().is_primitive()) continue;
                head << (first ? "" : ",") << it.key();
                line << (first ? "" : ",");
                if (it.value().is_number_float())
                    line << fmt17(it.value().get<double>());
                else
                    line << it.value().dump();
                first = false;
            }
            write(head.str() + "\n" + line.str() + "\n");
        } else {
            write(j.dump(2) + "\n");
        }
    }

    void write(const std::string& text) const {
        if (path == "-" || path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(path);
            if (!f) throw std::runtime_error("cannot open output file " + path);
            f << text;
        }
    }
};

std::vector<long> parse_sweep(const std::string& spec) {
    // start:stop:geom[:ratio] or start:stop:lin[:step]
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ':') {
            parts.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    parts.push_back(cur);
    if (parts.size() < 3 || parts.size() > 4)
        throw std::invalid_argument("sweep spec is start:stop:geom|lin[:factor]");
    const long start = std::stol(parts[0]);
    const long stop = std::stol(parts[1]);
    if (start < 2 || stop < start)
        throw std::invalid_argument("sweep spec: need 2 <= start <= stop");
    std::vector<long> out;
    if (parts[2] == "geom") {
        const double ratio = parts.size() == 4 ? std::stod(parts[3]) : 2.0;
        if (ratio <= 1.0)
            throw std::invalid_argument("sweep spec: geom ratio must be > 1");
        double v = static_cast<double>(start);
        while (true) {
            const long n = std::lround(v);
            if (n > stop) break;
            if (out.empty() || n != out.back()) out.push_back(n);
            v *= ratio;
        }
    } else if (parts[2] == "lin") {
        const long step = parts.size() == 4 ? std::stol(parts[3]) : 1;
        if (step < 1)
            throw std::invalid_argument("sweep spec: lin step must be >= 1");
        for (long n = start; n <= stop; n += step) out.push_back(n);
    } else {
        throw std::invalid_argument("sweep spec: mode must be geom or lin");
    }
    return out;
}

// sweep points of the requested parity: wrong-parity grid values are
// nudged up by one
std::vector<long> filter_parity(std::vector<long> grid, const std::string& parity) {
    if (parity == "auto") return grid;
    const int want = parity == "odd" ? 1 : 0;
    std::vector<long> out;
    for (long n : grid) {
        if (static_cast<int>(n & 1) != want) ++n;
        if (out.empty() || out.back() != n) out.push_back(n);
    }
    return out;
}

complexd exact_dispatch(const Kernel& k, double L, long n) {
    if (const auto* rz = std::get_if<RieszKernel>(&k))
        return riesz_exact(rz->s, L, n);
    if (std::holds_alternative<LogKernel>(k))
        return complexd(log_exact(L, n), 0.0);
    return exact_energy(k, L, n);
}

int jobs_default() {
    if (const char* env = std::getenv("GEOE_JOBS")) {
        const int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

template <typename F>
std::vector<json> run_sweep(const std::vector<long>& grid, int jobs, F&& fn) {
    std::vector<json> rows(grid.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < grid.size(); ++i) rows[i] = fn(grid[i]);
        return rows;
    }
    std::atomic<size_t> cursor{0};
    std::vector<std::future<void>> inflight;
    for (int j = 0; j < jobs; ++j) {
        inflight.push_back(std::async(std::launch::async, [&] {
            while (true) {
                const size_t i = cursor.fetch_add(1);
                if (i >= grid.size()) return;
                rows[i] = fn(grid[i]);
            }
        }));
    }
    for (auto& f : inflight) f.get();
    return rows;  // deterministic N order regardless of completion order
}

json compare_row(const Kernel& k, double L, int p, int q, long n) {
    const Parity parity = Parity::of_n(n);
    const Expansion e = expansion_geodesic(k, L, p, q, parity);
    const complexd exact = exact_dispatch(k, L, n);
    const ExpansionValue v = evaluate_expansion(e, n);
    const double diff = std::abs(exact - v.value);
    json row{{"n", n},
             {"kappa", parity.kappa},
             {"exact_re", exact.real()},
             {"exact_im", exact.imag()},
             {"asymptotic_re", v.value.real()},
             {"asymptotic_im", v.value.imag()},
             {"abs_diff", diff},
             {"remainder_scale", v.remainder_scale}};
    row["ratio"] = v.remainder_scale > 0.0
                       ? diff / v.remainder_scale
                       : (diff == 0.0 ? 0.0
                                      : std::numeric_limits<double>::infinity());
    if (n < 2 * std::max(p, 1) + 2) row["below_asymptotic_regime"] = true;
    return row;
}

complexd special_dispatch(const std::string& fn, const std::vector<complexd>& a) {
    auto need = [&](size_t n) {
        if (a.size() != n)
            throw std::invalid_argument("special: " + fn + " takes " +
                                        std::to_string(n) + " argument(s)");
    };
    if (fn == "zeta") {
        need(1);
        return riemann_zeta(a[0]);
    }
    if (fn == "hurwitz") {
        need(2);
        return hurwitz_zeta(a[0], a[1].real());
    }
    if (fn == "loggamma") {
        need(1);
        return log_gamma(a[0]);
    }
    if (fn == "gamma") {
        need(1);
        return complex_gamma(a[0]);
    }
    if (fn == "ei") {
        need(1);
        return complexd(exp_integral_ei(a[0].real()), 0.0);
    }
    if (fn == "bernoulli") {
        need(2);
        return complexd(
            bernoulli_poly(static_cast<int>(a[0].real()), a[1].real()), 0.0);
    }
    if (fn == "pbernoulli") {
        need(2);
        return complexd(
            periodized_bernoulli(static_cast<int>(a[0].real()), a[1].real()),
            0.0);
    }
    if (fn == "pochhammer") {
        need(2);
        return pochhammer(a[0], static_cast<int>(a[1].real()));
    }
    if (fn == "izeta") {
        need(4);
        return incomplete_zeta(static_cast<int>(a[0].real()), a[1].real(),
                               a[2].real(), a[3]);
    }
    if (fn == "psip") {
        need(3);
        return complexd(
            psi_p(static_cast<int>(a[0].real()), a[1].real(), a[2].real()), 0.0);
    }
    if (fn == "alpha") {
        need(2);
        const auto v = euclid_alpha_coeffs(a[0], static_cast<int>(a[1].real()));
        return v.back();
    }
    throw std::invalid_argument("special: unknown function '" + fn + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geodesic energy asymptotics toolkit"};
    app.require_subcommand(1);

    std::string kernel_spec, sweep_spec, parity = "auto", format = "json",
                               out_path = "-", fn_name, fn_args;
    double length = 2.0 * pi;
    long n_value = 0;
    int p = 0, q = 0, restarts = 50, jobs = jobs_default();
    std::uint64_t seed = 1;
    double tolerance = 0.3;
    std::string mode = "equal";

    auto add_common = [&](CLI::App* cmd, bool needs_kernel) {
        if (needs_kernel)
            cmd->add_option("--kernel", kernel_spec, "kernel spec")->required();
        cmd->add_option("--length", length, "curve length L");
        cmd->add_option("--p", p, "boundary-sum depth");
        cmd->add_option("--q", q, "singular-part / correction depth");
        cmd->add_option("--parity", parity, "auto|even|odd");
        cmd->add_option("--format", format, "json|csv");
        cmd->add_option("--out", out_path, "output path or - for stdout");
        cmd->add_option("--jobs", jobs, "parallel sweep evaluations");
    };

    auto* c_exact = app.add_subcommand("exact", "exact discrete energy");
    add_common(c_exact, true);
    c_exact->add_option("--n", n_value, "number of points");
    c_exact->add_option("--sweep", sweep_spec, "start:stop:geom|lin[:factor]");

    auto* c_expand = app.add_subcommand("expand", "build an expansion");
    add_common(c_expand, true);

    auto* c_compare = app.add_subcommand("compare", "exact vs expansion at N");
    add_common(c_compare, true);
    c_compare->add_option("--n", n_value, "number of points")->required();

    auto* c_sweep = app.add_subcommand("sweep", "compare over an N grid");
    add_common(c_sweep, true);
    c_sweep->add_option("--sweep", sweep_spec, "start:stop:geom|lin[:factor]")
        ->required();

    auto* c_order = app.add_subcommand("order", "remainder-order fit");
    add_common(c_order, true);
    c_order->add_option("--sweep", sweep_spec, "start:stop:geom|lin[:factor]")
        ->required();
    c_order->add_option("--tolerance", tolerance, "slope tolerance");

    auto* c_opt = app.add_subcommand("optimize", "minimizer search");
    add_common(c_opt, true);
    c_opt->add_option("--n", n_value, "number of points")->required();
    c_opt->add_option("--restarts", restarts, "restart count");
    c_opt->add_option("--seed", seed, "RNG seed");
    c_opt->add_option("--reference", mode, "equal|antipodal");

    auto* c_special = app.add_subcommand("special", "special functions");
    c_special->add_option("--fn", fn_name, "function name")->required();
    c_special->add_option("--args", fn_args, "comma-separated arguments (a+bi)")
        ->required();
    c_special->add_option("--format", format, "json|csv");
    c_special->add_option("--out", out_path, "output path");

    auto* c_ident = app.add_subcommand("identities", "cross-identity suite");
    c_ident->add_option("--format", format, "json|csv");
    c_ident->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }

    Output output{format, out_path};

    try {
        Kernel kernel = LogKernel{};
        if (!c_special->parsed() && !c_ident->parsed()) {
            try {
                kernel = parse_kernel(kernel_spec);
            } catch (const std::invalid_argument& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return 2;
            }
        }
        const Parity par_fixed = parity == "odd" ? Parity::odd() : Parity::even();

        if (c_exact->parsed()) {
            std::vector<long> grid;
            try {
                grid = sweep_spec.empty()
                           ? std::vector<long>{n_value}
                           : filter_parity(parse_sweep(sweep_spec), parity);
            } catch (const std::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return 2;
            }
            if (grid.empty() || grid[0] < 2) {
                std::cerr << "parse error: need --n >= 2 or --sweep\n";
                return 2;
            }
            auto rows = run_sweep(grid, jobs, [&](long n) {
                const complexd v = exact_dispatch(kernel, length, n);
                return json{{"n", n},
                            {"kappa", static_cast<int>(n & 1)},
                            {"value_re", v.real()},
                            {"value_im", v.imag()}};
            });
            output.emit_rows(rows, {"n", "kappa", "value_re", "value_im"});
            return 0;
        }

        if (c_expand->parsed()) {
            if (parity == "auto") {
                std::cerr << "parse error: expand requires --parity even|odd\n";
                return 2;
            }
            const Expansion e = expansion_geodesic(kernel, length, p, q, par_fixed);
            if (format == "csv") {
                std::vector<json> rows;
                for (const auto& t : e.terms)
                    rows.push_back(json{{"coeff_re", t.coeff.real()},
                                        {"coeff_im", t.coeff.imag()},
                                        {"power_re", t.n_power.real()},
                                        {"power_im", t.n_power.imag()},
                                        {"log_power", t.log_power}});
                output.emit_rows(rows, {"coeff_re", "coeff_im", "power_re",
                                        "power_im", "log_power"});
            } else {
                json j = e;
                output.emit_json(j);
            }
            return 0;
        }

        if (c_compare->parsed() || c_sweep->parsed()) {
            std::vector<long> grid;
            try {
                grid = c_compare->parsed()
                           ? std::vector<long>{n_value}
                           : filter_parity(parse_sweep(sweep_spec), parity);
            } catch (const std::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return 2;
            }
            auto rows = run_sweep(grid, jobs, [&](long n) {
                return compare_row(kernel, length, p, q, n);
            });
            output.emit_rows(rows, {"n", "kappa", "exact_re", "exact_im",
                                    "asymptotic_re", "asymptotic_im",
                                    "abs_diff", "remainder_scale", "ratio"});
            return 0;
        }

        if (c_order->parsed()) {
            std::vector<long> grid;
            try {
                grid = filter_parity(parse_sweep(sweep_spec),
                                     parity == "auto" ? "even" : parity);
            } catch (const std::exception& e) {
                std::cerr << "parse error: " << e.what() << "\n";
                return 2;
            }
            const Parity pr = Parity::of_n(grid.empty() ? 2 : grid[0]);
            const Expansion e = expansion_geodesic(kernel, length, p, q, pr);
            const OrderFitReport rep = order_fit(
                [&](long n) { return exact_dispatch(kernel, length, n); }, e,
                grid, tolerance);
            json j = rep;
            output.emit_json(j);
            return rep.pass ? 0 : 1;
        }

        if (c_opt->parsed()) {
            const OptimalityCase ref = mode == "antipodal"
                                           ? OptimalityCase::antipodal
                                           : OptimalityCase::equally_spaced;
            const OptimalityReport rep = optimality_search(
                kernel, ref, length, static_cast<int>(n_value), restarts, seed);
            json j = rep;
            output.emit_json(j);
            return rep.pass ? 0 : 1;
        }

        if (c_special->parsed()) {
            std::vector<complexd> args;
            std::string cur;
            for (char c : fn_args + ",") {
                if (c == ',') {
                    if (!cur.empty()) args.push_back(parse_complex(cur));
                    cur.clear();
                } else
                    cur += c;
            }
            const complexd v = special_dispatch(fn_name, args);
            output.emit_json(json{{"fn", fn_name},
                                  {"args", fn_args},
                                  {"value_re", v.real()},
                                  {"value_im", v.imag()}});
            return 0;
        }

        if (c_ident->parsed()) {
            const IdentityReport rep = identity_suite();
            if (format == "csv") {
                std::vector<json> rows;
                for (const auto& c : rep.checks) rows.push_back(json(c));
                output.emit_rows(rows, {"name", "error", "tol", "pass"});
            } else {
                json j = rep;
                output.emit_json(j);
            }
            return rep.all_pass ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
