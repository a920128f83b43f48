// Copyright 2026 The exactq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exactq/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "exactq/audit.hpp"
#include "exactq/builders.hpp"
#include "exactq/error.hpp"
#include "exactq/five_three.hpp"
#include "exactq/gamma.hpp"
#include "exactq/polynomial.hpp"
#include "exactq/sym.hpp"

namespace exactq {

namespace {

using ojson = nlohmann::ordered_json;

/// Thrown for parameter problems that map to exit code 2.
struct BadConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int need(const std::optional<int> &v, const char *flag) {
    if (!v) {
        throw BadConfig(std::string("missing --") + flag);
    }
    return *v;
}

bool invalid_parameter(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
        case ErrorCode::DomainError:
        case ErrorCode::DegenerateCase:
        case ErrorCode::NoChain:
        case ErrorCode::InconsistentSpec:
            return true;
        default:
            return false;
    }
}

/// Writes the whole payload once, to --out or the given stream.
int emit(const RunConfig &config, const std::string &payload, std::ostream &out, std::ostream &err) {
    if (config.out.empty() || config.out == "-") {
        out << payload;
        return kExitOk;
    }
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
        err << "cannot write " << config.out << "\n";
        return kExitFailure;
    }
    file << payload;
    return kExitOk;
}

template <typename F>
int guarded(std::ostream &err, F body) {
    try {
        return body();
    } catch (const BadConfig &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return invalid_parameter(e.code()) ? kExitInvalid : kExitFailure;
    }
}

struct Target {
    PlanPtr plan;
    Truth truth;
    EntryFactory entry;
    std::map<std::string, double> extra;
};

void check_unb(int n, int d) {
    if (d < 1 || d > 3) {
        throw BadConfig("--d must be 1, 2 or 3 for this family (use exactk for d = 0, exactkl for larger d)");
    }
    if (n < d || (n - d) % 2 != 0) {
        throw BadConfig("--n must be at least --d with n - d even");
    }
}

SymStrategy parse_strategy(const std::string &s) {
    if (s == "sweep") {
        return SymStrategy::CenterSweep;
    }
    if (s == "outward") {
        return SymStrategy::Outward;
    }
    throw BadConfig("--strategy must be sweep or outward");
}

Target make_target(const RunConfig &c) {
    const std::string &f = c.family;
    Target t;
    if (f == "unb" || f == "unbr") {
        int n = need(c.n, "n"), d = need(c.d, "d");
        check_unb(n, d);
        int k = (n - d) / 2;
        t.truth = truth_exact_kl(k, n - k);
        if (f == "unb") {
            t.plan = build_unb(n, d);
        } else {
            t.plan = build_unbr(n, d);
            double gamma = unbr_gamma(n, d);
            t.entry = [gamma](const std::vector<uint8_t> &x) {
                return unbr_entry_state(x, gamma);
            };
        }
    } else if (f == "equality") {
        int n = need(c.n, "n");
        t.plan = build_equality(n);
        t.truth = truth_exact_kl(0, n);
    } else if (f == "exactk") {
        int n = need(c.n, "n"), k = need(c.k, "k");
        t.plan = build_exact_k(n, k);
        t.truth = truth_exact_kl(k, k);
    } else if (f == "general") {
        int n = need(c.n, "n"), k = need(c.k, "k");
        t.plan = build_general_unbalance(n, k);
        t.truth = truth_exact_kl(k, n - k);
    } else if (f == "exactkl") {
        int n = need(c.n, "n"), k = need(c.k, "k"), l = need(c.l, "l");
        t.plan = build_exact_kl(n, k, l);
        t.truth = truth_exact_kl(k, l);
    } else if (f == "sym") {
        if (c.a.empty()) {
            throw BadConfig("missing --a");
        }
        SymSpec spec = make_sym_spec(c.a, need(c.g, "g"));
        t.plan = build_sym(spec, parse_strategy(c.strategy));
        std::vector<bool> accepts(spec.a.begin(), spec.a.end());
        t.truth = truth_by_weight(accepts);
        t.extra["bound_sweep"] = sym_query_bound(spec, SymStrategy::CenterSweep);
        t.extra["bound_outward"] = sym_query_bound(spec, SymStrategy::Outward);
    } else if (f == "xor") {
        t.plan = build_xor2();
        t.truth = [](const std::vector<uint8_t> &x) {
            return x[0] != x[1];
        };
    } else if (f == "constant") {
        t.plan = build_constant(need(c.n, "n"), true);
        t.truth = [](const std::vector<uint8_t> &) {
            return true;
        };
    } else {
        throw BadConfig("unknown family '" + f + "'");
    }
    return t;
}

std::string format_report(const RunConfig &c, const VerificationReport &r) {
    if (c.format == "csv") {
        return report_to_csv(r, c.verbose);
    }
    if (c.format == "text") {
        return report_to_text(r, c.verbose);
    }
    return report_to_json(r, c.verbose).dump(2) + "\n";
}

std::string num(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
}

ojson complex_json(amp_t a, double tol) {
    if (std::abs(a.imag()) <= tol) {
        return a.real();
    }
    return ojson{{"re", a.real()}, {"im", a.imag()}};
}

}  // namespace

int cmd_verify(const RunConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&]() -> int {
        Target t = make_target(config);
        VerifyOptions options;
        options.branch_epsilon = config.branch_tol;
        options.threads = config.parallel;
        options.entry = t.entry;
        options.keep_per_input = config.verbose;
        VerificationReport report = verify_exactness(*t.plan, t.truth, options);
        for (const auto &[name, value] : t.extra) {
            report.params[name] = value;
        }
        int wrote = emit(config, format_report(config, report), out, err);
        if (wrote != kExitOk) {
            return wrote;
        }
        return report.exact && report.worst_case_queries <= report.claimed_bound ? kExitOk : kExitFailure;
    });
}

int cmd_gamma(const RunConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&]() -> int {
        int d = need(config.d, "d");
        if (d < 1 || d > 3) {
            throw BadConfig("--d must be 1, 2 or 3");
        }
        ChainBase base = chain_base(d);
        if (config.k0 && *config.k0 != base.k0) {
            throw BadConfig("the chain for d = " + std::to_string(d) + " starts at k0 = " + std::to_string(base.k0));
        }
        int n_max = need(config.n_max, "n-max");
        if (n_max < d + 2 * base.k0) {
            throw BadConfig("--n-max is below the chain start");
        }
        GammaChain chain = gamma_chain(d, base.k0, base.gamma0, n_max);
        std::ostringstream s;
        if (config.format == "csv") {
            s << "n,gamma,gamma_le_inv_n\r\n";
            for (const auto &[n, g] : chain.entries) {
                s << n << ',' << num(g) << ',' << (g <= 1.0 / n ? "true" : "false") << "\r\n";
            }
        } else if (config.format == "text") {
            s << "d = " << d << ", k0 = " << base.k0 << "\n";
            for (const auto &[n, g] : chain.entries) {
                s << std::setw(4) << n << "  " << std::setprecision(10) << g << (g <= 1.0 / n ? "  <= 1/n" : "") << "\n";
            }
        } else {
            ojson j;
            j["d"] = d;
            j["k0"] = base.k0;
            ojson rows = ojson::array();
            for (const auto &[n, g] : chain.entries) {
                rows.push_back({{"n", n}, {"gamma", g}, {"gamma_le_inv_n", g <= 1.0 / n}});
            }
            j["rows"] = rows;
            j["valid"] = chain.valid;
            j["decays"] = chain.decays;
            j["tool_version"] = kToolVersion;
            s << j.dump(2) << "\n";
        }
        return emit(config, s.str(), out, err);
    });
}

int cmd_poly(const RunConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&]() -> int {
        Target t = make_target(config);
        const Plan &plan = *t.plan;
        if (plan.info.precomputed_entry) {
            throw BadConfig("family " + config.family + " needs an entry state; use unb");
        }
        if (plan.info.n > 14) {
            throw BadConfig("poly is limited to n <= 14");
        }
        RunOptions run;
        run.branch_epsilon = config.branch_tol;
        MultilinearPoly p = extract_multilinear(plan, PolySelector::acceptance(), run);
        std::optional<UnivariatePoly> q;
        std::string sym_error;
        try {
            q = symmetrize_to_univariate(p, config.tol);
        } catch (const Error &e) {
            sym_error = e.what();
        }
        DegreeAudit audit = audit_leaf_degrees(plan, AuditOptions{config.tol, 14, false});

        std::ostringstream s;
        if (config.format == "csv") {
            s << "section,key,re,im\r\n";
            for (uint32_t m = 0; m < p.coeffs.size(); m++) {
                if (std::abs(p.coeffs[m]) > config.tol) {
                    std::string set;
                    for (int i = 0; i < p.n; i++) {
                        if (m >> i & 1) {
                            set += (set.empty() ? "" : " ") + std::to_string(i + 1);
                        }
                    }
                    s << "alpha," << csv_field("{" + set + "}") << ',' << num(p.coeffs[m].real()) << ','
                      << num(p.coeffs[m].imag()) << "\r\n";
                }
            }
            if (q) {
                for (int k = 0; k <= q->n; k++) {
                    s << "q_value," << k << ',' << num(q->values[k].real()) << ',' << num(q->values[k].imag())
                      << "\r\n";
                }
                for (int k = 0; k <= q->n; k++) {
                    s << "q_coeff," << k << ',' << num(q->coeffs[k].real()) << ',' << num(q->coeffs[k].imag())
                      << "\r\n";
                }
            }
            s << "audit,ok," << (audit.ok ? 1 : 0) << ",0\r\n";
            s << "audit,worst_slack," << audit.worst_slack << ",0\r\n";
        } else if (config.format == "text") {
            s << "acceptance polynomial (degree " << p.degree(config.tol) << "):\n  " << p.str(config.tol) << "\n";
            if (q) {
                s << "q(s):";
                for (int k = 0; k <= q->n; k++) {
                    s << " " << std::setprecision(10) << q->values[k].real();
                }
                s << "\n";
            } else {
                s << "q(s): not symmetric (" << sym_error << ")\n";
            }
            s << "degree audit: " << (audit.ok ? "ok" : "FAILED") << ", " << audit.segments_checked
              << " segments in " << audit.plans_checked << " sub-plans, worst degree - queries = "
              << audit.worst_slack << "\n";
        } else {
            ojson j;
            j["family"] = plan.info.family;
            j["n"] = plan.info.n;
            ojson alpha = ojson::array();
            for (uint32_t m = 0; m < p.coeffs.size(); m++) {
                if (std::abs(p.coeffs[m]) > config.tol) {
                    ojson set = ojson::array();
                    for (int i = 0; i < p.n; i++) {
                        if (m >> i & 1) {
                            set.push_back(i + 1);
                        }
                    }
                    alpha.push_back({{"set", set}, {"coeff", complex_json(p.coeffs[m], config.tol)}});
                }
            }
            j["alpha"] = alpha;
            j["degree"] = p.degree(config.tol);
            if (q) {
                ojson values = ojson::array(), coeffs = ojson::array();
                for (int k = 0; k <= q->n; k++) {
                    values.push_back(complex_json(q->values[k], config.tol));
                    coeffs.push_back(complex_json(q->coeffs[k], config.tol));
                }
                j["q"] = {{"values", values}, {"coeffs", coeffs}};
            } else {
                j["q"] = nullptr;
                j["q_error"] = sym_error;
            }
            ojson violations = ojson::array();
            for (const auto &v : audit.violations) {
                violations.push_back(
                    {{"plan", v.plan},
                     {"entry", v.entry},
                     {"path", v.path},
                     {"terminal", v.terminal},
                     {"label", v.label.str()},
                     {"queries", v.queries},
                     {"degree", v.degree}});
            }
            j["degree_audit"] = {
                {"ok", audit.ok},
                {"plans_checked", audit.plans_checked},
                {"segments_checked", audit.segments_checked},
                {"worst_slack", audit.worst_slack},
                {"violations", violations}};
            j["tool_version"] = kToolVersion;
            s << j.dump(2) << "\n";
        }
        int wrote = emit(config, s.str(), out, err);
        if (wrote != kExitOk) {
            return wrote;
        }
        return audit.ok ? kExitOk : kExitFailure;
    });
}

int cmd_constants(const RunConfig &config, std::ostream &out, std::ostream &err) {
    return guarded(err, [&]() -> int {
        std::vector<std::pair<std::string, double>> rows;
        double residual = 0;
        if (config.appendix_a) {
            FiveThreeConstants a = five_three_constants(config.literal_signs);
            for (int k = 1; k <= 18; k++) {
                rows.emplace_back("a" + std::to_string(k), a[k]);
            }
            residual = max_five_three_residual(a);
        } else {
            int n = need(config.n, "n"), d = need(config.d, "d");
            if (n == d) {
                throw Error(ErrorCode::DegenerateCase, "n = d has no recursive step");
            }
            if (d < 1 || d > 3 || n < d || (n - d) % 2 != 0) {
                throw BadConfig("need d in {1,2,3} and n > d with n - d even");
            }
            ChainBase base = chain_base(d);
            if (n - 2 < d + 2 * base.k0) {
                throw BadConfig("n - 2 lies below the chain start for d = " + std::to_string(d));
            }
            StepConstants k = solve_step_constants(n, d, unbr_gamma(n - 2, d));
            rows.emplace_back("gamma_prev", k.gamma_prev);
            rows.emplace_back("gamma", k.gamma);
            for (int i = 1; i <= 11; i++) {
                rows.emplace_back("c" + std::to_string(i), k[i]);
            }
            residual = max_step_residual(k);
        }
        std::ostringstream s;
        if (config.format == "csv") {
            s << "name,value\r\n";
            for (const auto &[name, v] : rows) {
                s << name << ',' << num(v) << "\r\n";
            }
            s << "max_residual," << num(residual) << "\r\n";
        } else if (config.format == "text") {
            for (const auto &[name, v] : rows) {
                s << std::setw(10) << name << "  " << std::setprecision(15) << v << "\n";
            }
            s << "max residual " << residual << "\n";
        } else {
            ojson j;
            ojson values = ojson::object();
            for (const auto &[name, v] : rows) {
                values[name] = v;
            }
            j["constants"] = values;
            j["max_residual"] = residual;
            j["tolerance"] = config.tol;
            j["tool_version"] = kToolVersion;
            s << j.dump(2) << "\n";
        }
        int wrote = emit(config, s.str(), out, err);
        if (wrote != kExitOk) {
            return wrote;
        }
        return residual <= config.tol ? kExitOk : kExitFailure;
    });
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig config;
    CLI::App app{"Builds, simulates and certifies exact quantum query algorithms.", "exactq"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    auto common = [&config](CLI::App *sub) {
        sub->add_option("--tol", config.tol, "zero / residual tolerance")
            ->envname("EXACTQ_TOL")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", config.format)->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--out", config.out, "output path (default: standard output)");
    };
    auto family_options = [&config](CLI::App *sub) {
        sub->add_option("--family", config.family, "unb, unbr, equality, exactk, general, exactkl, sym, xor, constant")
            ->required();
        sub->add_option("--n", config.n);
        sub->add_option("--k", config.k);
        sub->add_option("--l", config.l);
        sub->add_option("--d", config.d);
        sub->add_option("--a", config.a, "0/1 string a[0..n] for sym");
        sub->add_option("--g", config.g, "distance of the ones from n/2 for sym");
        sub->add_option("--strategy", config.strategy, "sym strategy: sweep or outward");
        sub->add_option("--branch-tol", config.branch_tol, "relative squared norm below which a branch is dropped")
            ->check(CLI::NonNegativeNumber);
    };

    CLI::App *verify = app.add_subcommand("verify", "check a plan on every input");
    family_options(verify);
    common(verify);
    verify->add_option("--parallel", config.parallel, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
    verify->add_flag("--verbose", config.verbose, "include per-input rows");

    CLI::App *gamma = app.add_subcommand("gamma", "tabulate a gamma chain");
    gamma->add_option("--d", config.d)->required();
    gamma->add_option("--k0", config.k0);
    gamma->add_option("--n-max", config.n_max)->required();
    common(gamma);

    CLI::App *poly = app.add_subcommand("poly", "dump the acceptance polynomial and audit leaf degrees");
    family_options(poly);
    common(poly);

    CLI::App *constants = app.add_subcommand("constants", "print step constants and their constraint residual");
    constants->add_option("--n", config.n);
    constants->add_option("--d", config.d);
    constants->add_flag("--appendix-a", config.appendix_a, "the two-query n=5, d=3 routine");
    constants->add_flag("--literal-signs", config.literal_signs, "take every tabulated constant positive");
    common(constants);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitInvalid;
    }

    if (verify->parsed()) {
        config.command = "verify";
        return cmd_verify(config, out, err);
    }
    if (gamma->parsed()) {
        config.command = "gamma";
        return cmd_gamma(config, out, err);
    }
    if (poly->parsed()) {
        config.command = "poly";
        return cmd_poly(config, out, err);
    }
    config.command = "constants";
    return cmd_constants(config, out, err);
}

}  // namespace exactq
