// clausen: evaluate hypergeometric series, verify summation theorems against
// their closed forms, run seeded randomized sweeps, check Mellin-transform
// cases, and list the catalog.
//
// Exit codes: 0 all equal, 1 mismatch found, 2 invalid instance or side
// condition, 3 internal/evaluation error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "clausen/catalog.hpp"
#include "clausen/mellin.hpp"
#include "clausen/series.hpp"
#include "clausen/sweep.hpp"
#include "clausen/version.hpp"

using nlohmann::json;
using namespace clausen;

namespace {

constexpr int exit_equal = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_invalid = 2;
constexpr int exit_internal = 3;

std::string fmt_real(long double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17Lg", x);
    return buf;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw invalid_instance("empty parameter list");
    return out;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

json binding_json(const Binding& b) {
    json j = json::object();
    if (b.m) j["m"] = *b.m;
    if (b.k) j["k"] = *b.k;
    if (b.alpha) j["alpha"] = to_string(*b.alpha);
    if (b.beta) j["beta"] = to_string(*b.beta);
    if (b.gamma) j["gamma"] = to_string(*b.gamma);
    if (b.delta) j["delta"] = to_string(*b.delta);
    return j;
}

json report_json(const VerificationReport& r) {
    json j;
    j["id"] = r.id;
    j["tag"] = r.tag;
    j["mode"] = r.mode == TheoremMode::Exact ? "exact" : "float";
    j["verdict"] = r.verdict;
    j["terms"] = r.terms;
    if (r.verdict != "inapplicable") {
        if (r.lhs_exact) j["lhs"] = to_string(*r.lhs_exact);
        else j["lhs"] = fmt_real(r.lhs_float);
        if (r.rhs_exact) j["rhs"] = to_string(*r.rhs_exact);
        else j["rhs"] = fmt_real(r.rhs_float);
        if (r.mode == TheoremMode::Float) {
            j["rel_error"] = fmt_real(r.rel_error);
            j["tolerance"] = fmt_real(r.tolerance);
        }
    }
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
    return j;
}

void print_report_text(const VerificationReport& r) {
    std::cout << r.id << " [" << r.tag << "] "
              << (r.mode == TheoremMode::Exact ? "exact" : "float") << "\n";
    if (r.verdict != "inapplicable") {
        if (r.lhs_exact) std::cout << "lhs = " << to_string(*r.lhs_exact) << "\n";
        else std::cout << "lhs = " << fmt_real(r.lhs_float) << "\n";
        if (r.rhs_exact) std::cout << "rhs = " << to_string(*r.rhs_exact) << "\n";
        else std::cout << "rhs = " << fmt_real(r.rhs_float) << "\n";
        if (r.mode == TheoremMode::Float)
            std::cout << "rel error = " << fmt_real(r.rel_error) << " (tol " << fmt_real(r.tolerance)
                      << ")\n";
    }
    if (!r.diagnostic.empty()) std::cout << "diagnostic: " << r.diagnostic << "\n";
    std::cout << "verdict: " << r.verdict << "\n";
}

int verdict_exit(const std::string& verdict) {
    if (verdict == "equal") return exit_equal;
    if (verdict == "mismatch") return exit_mismatch;
    return exit_invalid;  // inapplicable: the instance rejected itself
}

// ---- eval -------------------------------------------------------------------

struct EvalArgs {
    std::string num, den, z = "1";
    long long truncate = 0;
    bool has_truncate = false;
    bool as_float = false;
    bool info = false;
    double tol = 1e-15;
};

int run_eval(const EvalArgs& a) {
    HypergeometricSpec spec;
    spec.num = parse_rational_list(a.num);
    spec.den = parse_rational_list(a.den);
    spec.z = parse_rational(a.z);
    if (a.has_truncate) spec.truncation = a.truncate;

    if (a.info) {
        const ConvergenceInfo ci = convergence_info(spec);
        std::cout << "series: " << to_string(spec) << "\n"
                  << "regime: " << regime_name(ci.regime) << "\n"
                  << "omega: " << to_string(ci.omega) << "\n";
    }

    if (spec.truncation || detail::has_terminating_numerator(spec)) {
        const Rational v = spec.truncation ? eval_truncated(spec) : eval_terminating(spec);
        if (a.as_float) std::cout << fmt_real(to_real(v)) << "\n";
        else std::cout << to_string(v) << "\n";
        return exit_equal;
    }
    if (!a.as_float)
        throw invalid_instance("series does not terminate; pass --truncate or --float");
    const FloatEval fe = eval_nonterminating_float(spec, static_cast<RealHP>(a.tol));
    std::cout << fmt_real(fe.value) << "\n";
    if (a.info)
        std::cout << "terms: " << fe.terms << "\nerror estimate: " << fmt_real(fe.error_estimate)
                  << "\n";
    return exit_equal;
}

// ---- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string id;
    std::optional<long long> m, k;
    std::string alpha, beta, gamma, delta;
    double tol = 1e-10;
    bool as_json = false;
};

int run_verify(const VerifyArgs& a) {
    Binding b;
    b.m = a.m;
    b.k = a.k;
    if (!a.alpha.empty()) b.alpha = parse_rational(a.alpha);
    if (!a.beta.empty()) b.beta = parse_rational(a.beta);
    if (!a.gamma.empty()) b.gamma = parse_rational(a.gamma);
    if (!a.delta.empty()) b.delta = parse_rational(a.delta);

    const TheoremInstance inst = instantiate(a.id, b);
    const VerificationReport rep = verify(inst, static_cast<RealHP>(a.tol));
    if (a.as_json) std::cout << report_json(rep).dump(2) << "\n";
    else print_report_text(rep);
    if (rep.verdict == "inapplicable") return exit_internal;
    return rep.verdict == "equal" ? exit_equal : exit_mismatch;
}

// ---- sweep ------------------------------------------------------------------

struct SweepArgs {
    std::string theorems = "all";
    long long trials = 20;
    std::uint64_t seed = 0;
    long long m_max = 8, k_max = 8, bound = 20;
    double tol = 1e-10;
    int jobs = 1;
    std::string out;
};

json sweep_json(const SweepResult& res) {
    const SweepConfig& cfg = res.config;
    json config;
    config["theorems"] = cfg.theorems.empty() ? json::array({"all"}) : json(cfg.theorems);
    config["trials"] = cfg.trials;
    config["seed"] = cfg.seed;
    config["m_max"] = cfg.m_max;
    config["k_max"] = cfg.k_max;
    config["bound"] = cfg.bound;
    config["float_tol"] = fmt_real(cfg.float_tol);
    config["jobs"] = cfg.jobs;
    config["max_attempts"] = cfg.max_attempts;

    json records = json::array();
    for (const auto& rec : res.records) {
        json j;
        j["index"] = rec.index;
        j["theorem"] = rec.theorem;
        j["tag"] = rec.report.tag;
        j["mode"] = rec.report.mode == TheoremMode::Exact ? "exact" : "float";
        j["binding"] = binding_json(rec.binding);
        j["attempts"] = rec.attempts;
        j["terms"] = rec.report.terms;
        j["verdict"] = rec.report.verdict;
        if (rec.report.verdict != "inapplicable") {
            if (rec.report.lhs_exact) j["lhs"] = to_string(*rec.report.lhs_exact);
            else j["lhs"] = fmt_real(rec.report.lhs_float);
            if (rec.report.rhs_exact) j["rhs"] = to_string(*rec.report.rhs_exact);
            else j["rhs"] = fmt_real(rec.report.rhs_float);
            if (rec.report.mode == TheoremMode::Float)
                j["rel_error"] = fmt_real(rec.report.rel_error);
        }
        if (!rec.report.diagnostic.empty()) j["diagnostic"] = rec.report.diagnostic;
        records.push_back(std::move(j));
    }

    json doc;
    doc["schema"] = report_schema;
    doc["tool"] = {{"name", "clausen"}, {"version", library_version}};
    doc["prng"] = sweep_prng_id;
    doc["config"] = config;
    doc["records"] = records;
    doc["summary"] = {{"records", static_cast<long long>(res.records.size())},
                      {"equal", res.equal},
                      {"mismatch", res.mismatch},
                      {"inapplicable", res.inapplicable}};
    return doc;
}

int run_sweep_cmd(const SweepArgs& a) {
    SweepConfig cfg;
    cfg.theorems = split_list(a.theorems);
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    cfg.m_max = a.m_max;
    cfg.k_max = a.k_max;
    cfg.bound = a.bound;
    cfg.float_tol = static_cast<RealHP>(a.tol);
    cfg.jobs = a.jobs;

    const SweepResult res = run_sweep(cfg);
    const std::string text = sweep_json(res).dump(2) + "\n";
    if (a.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + a.out);
        f << text;
    }
    std::cerr << "swept " << res.records.size() << " records: " << res.equal << " equal, "
              << res.mismatch << " mismatch, " << res.inapplicable << " inapplicable\n";
    return res.mismatch == 0 ? exit_equal : exit_mismatch;
}

// ---- mellin -----------------------------------------------------------------

struct MellinArgs {
    std::string case_id;
    long long m = 1, k = 1, ell = 0;
    std::string alpha, beta, gamma;
    std::string a, b, s;
    std::string mu = "1", lambda;
    bool quad = false;
    bool as_json = false;
    double tol = 1e-8;
    int nodes = 0;
};

int run_mellin_generic(const MellinArgs& a) {
    if (a.a.empty() || a.b.empty() || a.s.empty())
        throw invalid_instance("generic transform needs --a, --b and --s");
    MellinInstance in;
    in.M = a.m;
    in.ell = a.ell;
    in.a = parse_rational(a.a);
    in.b = parse_rational(a.b);
    in.s = parse_rational(a.s);
    in.mu = parse_rational(a.mu);
    in.lambda = a.lambda.empty() ? in.mu : parse_rational(a.lambda);

    const MellinValue v = mellin_exact(in);
    json j;
    j["case"] = "generic";
    j["coefficient"] = to_string(v.coeff);
    j["s"] = to_string(v.s);
    j["mu"] = to_string(v.mu);
    j["value"] = fmt_real(v.to_float());
    bool quad_ok = true;
    if (a.quad) {
        const MellinQuadrature q = mellin_quadrature(in, a.nodes);
        j["quadrature"] = fmt_real(q.value);
        j["quadrature_rel_error"] = fmt_real(q.rel_error);
        j["nodes"] = q.nodes;
        quad_ok = q.rel_error <= static_cast<RealHP>(a.tol);
    }
    if (a.as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "generic transform, coefficient of Gamma(s)/mu^s\n"
                  << "coefficient = " << to_string(v.coeff) << "\n"
                  << "s = " << to_string(v.s) << ", mu = " << to_string(v.mu) << "\n"
                  << "value = " << fmt_real(v.to_float()) << "\n";
        if (a.quad)
            std::cout << "quadrature = " << j["quadrature"].get<std::string>() << " (rel error "
                      << j["quadrature_rel_error"].get<std::string>() << ", " << a.nodes
                      << " nodes requested)\n";
    }
    return quad_ok ? exit_equal : exit_mismatch;
}

int run_mellin(const MellinArgs& a) {
    if (a.case_id.empty() || a.case_id == "generic") return run_mellin_generic(a);

    MellinCaseBinding b;
    b.m = a.m;
    b.k = a.k;
    if (!a.alpha.empty()) b.alpha = parse_rational(a.alpha);
    if (!a.beta.empty()) b.beta = parse_rational(a.beta);
    if (!a.gamma.empty()) b.gamma = parse_rational(a.gamma);
    b.mu = parse_rational(a.mu);

    const MellinReport rep = mellin_case_check(a.case_id, b, static_cast<RealHP>(a.tol), a.nodes);
    if (a.as_json) {
        json j;
        j["case"] = rep.name;
        j["theorem"] = rep.theorem;
        j["verdict"] = rep.verdict;
        if (rep.verdict != "inapplicable") {
            j["coefficient"] = to_string(rep.coeff_generic);
            j["coefficient_closed_form"] = to_string(rep.coeff_closed);
            j["s"] = to_string(rep.s);
            j["mu"] = to_string(rep.mu);
            j["value"] = fmt_real(rep.quad_reference);
            j["terms"] = rep.terms;
            if (a.quad || rep.nodes > 0) {
                j["quadrature"] = fmt_real(rep.quad_value);
                j["quadrature_rel_error"] = fmt_real(rep.quad_rel_error);
                j["nodes"] = rep.nodes;
            }
        }
        if (!rep.diagnostic.empty()) j["diagnostic"] = rep.diagnostic;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "case " << rep.name << " -> " << rep.theorem << "\n";
        if (rep.verdict != "inapplicable") {
            std::cout << "coefficient = " << to_string(rep.coeff_generic) << " (closed form "
                      << to_string(rep.coeff_closed) << ")\n"
                      << "s = " << to_string(rep.s) << ", mu = " << to_string(rep.mu) << "\n"
                      << "value = " << fmt_real(rep.quad_reference) << "\n";
            if (a.quad)
                std::cout << "quadrature = " << fmt_real(rep.quad_value) << " (rel error "
                          << fmt_real(rep.quad_rel_error) << ", tol " << fmt_real(rep.quad_tolerance)
                          << ", " << rep.nodes << " nodes)\n";
        }
        if (!rep.diagnostic.empty()) std::cout << "diagnostic: " << rep.diagnostic << "\n";
        std::cout << "verdict: " << rep.verdict << "\n";
    }
    return verdict_exit(rep.verdict);
}

// ---- list -------------------------------------------------------------------

std::string mellin_case_params(const MellinCase& mc) {
    std::string out = "m";
    if (mc.uses_k) out += ", k";
    for (const auto& r : mc.rationals) out += ", " + r;
    return out;
}

int run_list(bool as_json) {
    const auto rows = list_theorems();
    if (as_json) {
        json jt = json::array();
        for (const auto& r : rows)
            jt.push_back({{"id", r.id},
                          {"tag", r.tag},
                          {"mode", r.mode},
                          {"params", r.params},
                          {"rhs", r.rhs}});
        json jm = json::array();
        for (const auto& mc : mellin_cases())
            jm.push_back({{"case", mc.name},
                          {"theorem", mc.theorem},
                          {"zero", mc.rhs_is_zero},
                          {"params", mellin_case_params(mc)}});
        json doc;
        doc["theorems"] = jt;
        doc["mellin_cases"] = jm;
        std::cout << doc.dump(2) << "\n";
        return exit_equal;
    }

    std::cout << "theorems (" << rows.size() << "):\n";
    for (const auto& r : rows) {
        std::printf("  %-24s [%-5s] %-5s rhs=%-8s params: %s\n", r.id.c_str(), r.tag.c_str(),
                    r.mode.c_str(), r.rhs.c_str(), r.params.c_str());
    }
    std::cout << "mellin cases (" << mellin_cases().size() << "):\n";
    for (const auto& mc : mellin_cases()) {
        std::printf("  %-5s -> %-22s %-9s params: %s\n", mc.name.c_str(), mc.theorem.c_str(),
                    mc.rhs_is_zero ? "zero" : "rational", mellin_case_params(mc).c_str());
    }
    return exit_equal;
}

// Merge "--flag value" into "--flag=value" for every value-taking option, so
// dash-leading values like --num -1,1,1 survive CLI parsing.
std::vector<std::string> normalize_args(int argc, char** argv) {
    static const std::vector<std::string> value_flags = {
        "--num",   "--den",   "--z",     "--truncate", "--tol",    "--id",    "--m",
        "--k",     "--alpha", "--beta",  "--gamma",    "--delta",  "--theorems",
        "--trials", "--seed", "--m-max", "--k-max",    "--bound",  "--jobs",  "--out",
        "--case",  "--a",     "--b",     "--s",        "--l",      "--mu",    "--lambda",
        "--nodes"};
    std::vector<std::string> out;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        const bool takes_value =
            std::find(value_flags.begin(), value_flags.end(), arg) != value_flags.end();
        if (takes_value && i + 1 < argc) {
            out.push_back(arg + "=" + argv[i + 1]);
            ++i;
        } else {
            out.push_back(arg);
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and high-precision verification of truncated Clausen summation theorems "
                 "and their Mellin transforms"};
    app.set_version_flag("--version", library_version);
    app.require_subcommand(1);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate a hypergeometric series");
    eval->add_option("--num", ea.num, "comma-separated numerator parameters (p/q)")->required();
    eval->add_option("--den", ea.den, "comma-separated denominator parameters (p/q)")->required();
    eval->add_option("--z", ea.z, "series argument (default 1)");
    auto* topt = eval->add_option("--truncate", ea.truncate, "sum exactly this order + 1 terms");
    eval->add_flag("--float", ea.as_float, "print a float value (required when not terminating)");
    eval->add_flag("--info", ea.info, "print regime and convergence parameter");
    eval->add_option("--tol", ea.tol, "relative tolerance for float summation");

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "verify one theorem instance");
    verify_cmd->add_option("--id", va.id, "theorem id, e.g. watson.trunc-m")->required();
    long long vm = 0, vk = 0;
    auto* vmo = verify_cmd->add_option("--m", vm, "binding for m");
    auto* vko = verify_cmd->add_option("--k", vk, "binding for k");
    verify_cmd->add_option("--alpha", va.alpha, "binding for alpha (p/q)");
    verify_cmd->add_option("--beta", va.beta, "binding for beta (p/q)");
    verify_cmd->add_option("--gamma", va.gamma, "binding for gamma (p/q)");
    verify_cmd->add_option("--delta", va.delta, "binding for delta (p/q)");
    verify_cmd->add_option("--tol", va.tol, "relative tolerance for float entries");
    verify_cmd->add_flag("--json", va.as_json, "emit a JSON report");

    SweepArgs sa;
    auto* sweep_cmd = app.add_subcommand("sweep", "seeded randomized verification sweep");
    sweep_cmd->add_option("--theorems", sa.theorems, "comma-separated ids or \"all\"");
    sweep_cmd->add_option("--trials", sa.trials, "trials per theorem");
    sweep_cmd->add_option("--seed", sa.seed, "64-bit sweep seed");
    sweep_cmd->add_option("--m-max", sa.m_max, "largest m drawn");
    sweep_cmd->add_option("--k-max", sa.k_max, "largest k drawn");
    sweep_cmd->add_option("--bound", sa.bound, "rational magnitude bound");
    sweep_cmd->add_option("--tol", sa.tol, "relative tolerance for float entries");
    sweep_cmd->add_option("--jobs", sa.jobs, "verification worker threads");
    sweep_cmd->add_option("--out", sa.out, "write the JSON report to this file");

    MellinArgs ma;
    auto* mellin_cmd = app.add_subcommand("mellin", "check a Mellin-transform case");
    mellin_cmd->add_option("--case", ma.case_id, "case name I..XVI, or \"generic\"");
    mellin_cmd->add_option("--m", ma.m, "binding for m (generic: truncation order M)");
    mellin_cmd->add_option("--k", ma.k, "binding for k");
    mellin_cmd->add_option("--l", ma.ell, "generic: denominator offset");
    mellin_cmd->add_option("--alpha", ma.alpha, "binding for alpha (p/q)");
    mellin_cmd->add_option("--beta", ma.beta, "binding for beta (p/q)");
    mellin_cmd->add_option("--gamma", ma.gamma, "binding for gamma (p/q)");
    mellin_cmd->add_option("--a", ma.a, "generic: first 2F2 numerator parameter");
    mellin_cmd->add_option("--b", ma.b, "generic: second 2F2 denominator parameter");
    mellin_cmd->add_option("--s", ma.s, "generic: Mellin variable");
    mellin_cmd->add_option("--mu", ma.mu, "exponential rate (default 1)");
    mellin_cmd->add_option("--lambda", ma.lambda, "generic: argument scale (default mu)");
    mellin_cmd->add_flag("--quad", ma.quad, "print the quadrature cross-check");
    mellin_cmd->add_option("--nodes", ma.nodes, "quadrature node count override");
    mellin_cmd->add_option("--tol", ma.tol, "quadrature relative tolerance");
    mellin_cmd->add_flag("--json", ma.as_json, "emit a JSON report");

    bool list_json = false;
    auto* list_cmd = app.add_subcommand("list", "list theorems and Mellin cases");
    list_cmd->add_flag("--json", list_json, "emit JSON");

    const std::vector<std::string> normalized = normalize_args(argc, argv);
    std::vector<std::string> storage;
    storage.push_back(argv[0]);
    for (const auto& s : normalized) storage.push_back(s);
    std::vector<char*> cargs;
    for (auto& s : storage) cargs.push_back(s.data());

    try {
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_invalid;
    }

    ea.has_truncate = topt->count() > 0;
    if (vmo->count() > 0) va.m = vm;
    if (vko->count() > 0) va.k = vk;

    try {
        if (app.got_subcommand(eval)) return run_eval(ea);
        if (app.got_subcommand(verify_cmd)) return run_verify(va);
        if (app.got_subcommand(sweep_cmd)) return run_sweep_cmd(sa);
        if (app.got_subcommand(mellin_cmd)) return run_mellin(ma);
        if (app.got_subcommand(list_cmd)) return run_list(list_json);
    } catch (const side_condition_violated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const invalid_instance& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const evaluation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}
