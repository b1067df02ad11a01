/**
 * @file slcalc.cpp
 * @brief Command-line front end: series tables, operator-word reduction,
 *        boundary-expansion solvers, GJMS/Q-curvature reports, and the
 *        built-in verification suites.  All output is machine-readable.
 *
 * Exit codes: 0 pass, 1 verification failure, 2 parse error,
 *             3 domain error (exceptional weight etc.), 4 internal error.
 */

#include <slcalc/field_parse.hpp>
#include <slcalc/verify.hpp>
#include <slcalc/word_parse.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

using json = nlohmann::ordered_json;
using namespace slcalc;

namespace {

int default_order() {
    if (const char* env = std::getenv("SLCALC_DEFAULT_ORDER")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (...) {
            // fall through to the built-in default on malformed values
        }
    }
    return 10;
}

void warn_large_order(int N) {
    if (N > 40)
        std::cerr << "warning: order " << N
                  << " > 40; exact coefficients grow rapidly, expect long runtimes\n";
}

WeightParam parse_h0_flag(const std::string& s) {
    if (s == "generic")
        return WeightParam::generic();
    RatFunc w = parse_weight_expr(s);
    if (!w.is_constant())
        throw ParseError("--h0 must be 'generic' or a rational number", 1, 1);
    return WeightParam::at(w.constant_value());
}

/// Rational as JSON: integer when exact, "p/q" string otherwise.
json rational_json(const Rational& r) {
    if (r.is_integer() && abs(r) <= Rational(1000000000))
        return static_cast<long long>(r.num());
    return r.str();
}

json solution_json(const ExpansionSolution& sol) {
    json j;
    j["kind"] = op_kind_name(sol.kind);
    j["w0"] = sol.w0.str();
    j["N"] = sol.N;
    j["terms"] = json::array();
    for (const auto& t : sol.terms) {
        json jt;
        jt["sigma_power"] = rational_json(t.sigma_power);
        jt["log"] = t.log;
        jt["field"] = t.field.str();
        j["terms"].push_back(std::move(jt));
    }
    if (sol.exact)
        j["residual_order"] = "inf";
    else if (sol.residual_order)
        j["residual_order"] = rational_json(*sol.residual_order);
    else
        j["residual_order"] = nullptr;
    return j;
}

struct Options {
    bool deterministic = false;
    std::string format = "json";
};

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_series(const std::string& kind, const std::string& h0s, int N) {
    warn_large_order(N);
    WeightParam h0 = parse_h0_flag(h0s);
    FormalSeries s;
    if (kind == "K")
        s = k_series(h0, N);
    else if (kind == "G")
        s = g_series(h0, N);
    else if (kind == "F")
        s = f_polynomial(h0.as_small_int());
    else if (kind == "H")
        s = h_series(h0, N);
    else
        throw DomainError("unknown series kind '" + kind + "' (expected K|G|F|H)");
    json j;
    j["series"] = kind;
    j["h0"] = h0.is_generic() ? "generic" : h0.value->str();
    j["order"] = kind == "F" ? s.order() : N;
    j["coefficients"] = json::array();
    for (int k = 0; k <= s.order(); ++k) {
        json jc;
        jc["k"] = k;
        jc["value"] = s.coeff(k).str();
        j["coefficients"].push_back(std::move(jc));
    }
    emit(j);
    return 0;
}

int cmd_algebra(const std::string& word, const std::string& h0s, const std::string& weight,
                int N, bool contracted) {
    warn_large_order(N);
    WeightParam h0 = parse_h0_flag(h0s);
    Sl2Engine eng({h0, contracted});
    RatFunc w = parse_weight_expr(weight);
    Section target = eng.make_section("f", w);
    OpExpr expr = parse_operator_expr(word, eng, h0, N);
    Form canon = Sl2Engine::filter_below_degree(eng.reduce_expr(expr, target), N);
    json j;
    j["word"] = word;
    j["h0"] = h0.is_generic() ? "generic" : h0.value->str();
    j["target_weight"] = w.str();
    j["order"] = N;
    j["terms"] = json::array();
    for (const auto& t : canon)
        j["terms"].push_back(t.str());
    j["zero"] = canon.empty();
    emit(j);
    return 0;
}

int cmd_solve(const std::string& kind, int d, const std::string& w0s, const std::string& f0s,
              int N, const std::optional<std::string>& logtau,
              const std::optional<std::string>& alphas) {
    warn_large_order(N);
    int n = d - 1;
    if (n < 1)
        throw DomainError("--d must be at least 2");
    Rational w0 = parse_weight_expr(w0s).constant_value();
    DensityField data = parse_field_expr(f0s, n);
    std::optional<DensityField> tau;
    if (logtau) {
        tau = parse_field_expr(*logtau, n);
        tau->set_weight(Rational(0));
    }
    ExpansionSolution sol;
    if (alphas) {
        Rational alpha = parse_weight_expr(*alphas).constant_value();
        data.set_weight(alpha.is_zero() ? w0 : Rational(1 - d) - w0);
        sol = solve_with_exponent(data, d, N, alpha, w0);
    } else if (kind == "first") {
        data.set_weight(w0);
        sol = solve_first_kind(data, d, N);
    } else if (kind == "second") {
        data.set_weight(Rational(1 - d) - w0);
        sol = solve_second_kind(data, d, N);
    } else if (kind == "log") {
        Rational h0 = Rational(d) + Rational(2) * w0;
        if (h0 == Rational(1)) {
            data.set_weight(w0);
            sol = solve_log_kind_h1(data, d, N, tau);
        } else {
            data.set_weight(w0);
            sol = solve_log_kind(data, d, N, tau);
        }
    } else if (kind == "logdensity") {
        data.set_weight(Rational(0));
        sol = solve_log_density(data, d, N, tau);
    } else {
        throw DomainError("unknown solve kind '" + kind +
                          "' (expected first|second|log|logdensity)");
    }
    emit(solution_json(sol));
    return 0;
}

int cmd_gjms(long long k, int d) {
    GjmsReport rep = gjms_constant(k, d);
    LinDiffOp pk = p_k_build(k, d);
    json j;
    j["k"] = k;
    j["d"] = d;
    j["consistent"] = rep.consistent;
    j["zero_restriction"] = rep.zero_restriction;
    j["c"] = rep.c.str();
    if (!rep.witness.empty())
        j["witness"] = rep.witness;
    j["operator"] = json::array();
    for (const auto& [key, coeff] : pk.terms()) {
        json jt;
        jt["dr"] = key.dr;
        jt["dx"] = key.dx;
        json cs = json::array();
        for (const auto& c : coeff)
            cs.push_back(c.str());
        jt["r_poly"] = std::move(cs); // coefficient of the term, by power of r
        j["operator"].push_back(std::move(jt));
    }
    emit(j);
    return 0;
}

int cmd_qcurv(int n, const std::string& omega) {
    DensityField om = parse_field_expr(omega, n);
    BoundaryField q = q_holographic(om, n);
    json j;
    j["n"] = n;
    j["omega"] = omega;
    j["q"] = q.str();
    emit(j);
    return 0;
}

int cmd_verify(const std::string& suite, const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep = verify_suite(suite);
    auto t1 = std::chrono::steady_clock::now();
    rep.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    ReportFormat fmt = ReportFormat::Json;
    if (opt.format == "csv")
        fmt = ReportFormat::Csv;
    else if (opt.format == "text")
        fmt = ReportFormat::Text;
    else if (opt.format != "json")
        throw DomainError("unknown format '" + opt.format + "' (expected json|csv|text)");
    std::cout << emit_report(rep, fmt, opt.deterministic);
    return rep.passed() ? 0 : 1;
}

void emit_error(const std::string& type, const std::string& message) {
    json j;
    j["status"] = "error";
    j["error"] = {{"type", type}, {"message", message}};
    std::cout << j.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sl(2) boundary calculus: series, operator words, "
                 "boundary expansions, GJMS/Q reports, verification"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--deterministic", opt.deterministic,
                 "byte-identical output (drops timing fields)");
    app.add_option("--format", opt.format, "report format: json|csv|text")->capture_default_str();

    const int defN = default_order();

    auto* cseries = app.add_subcommand("series", "emit an exact coefficient table");
    std::string skind = "K", sh0 = "generic";
    int sN = defN;
    cseries->add_option("--kind", skind, "K|G|F|H")->required();
    cseries->add_option("--h0", sh0, "'generic' or a rational p/q");
    cseries->add_option("--order", sN, "truncation order");

    auto* calg = app.add_subcommand("algebra", "reduce an operator word to canonical form");
    std::string aword, ah0 = "generic", aweight = "h0";
    int aN = defN;
    bool acontracted = false;
    calg->add_option("--word", aword, "operator word, e.g. 'y K[h0]' or 'O x'")->required();
    calg->add_option("--h0", ah0, "'generic' or a rational p/q");
    calg->add_option("--weight", aweight, "target section weight (linear in h0)");
    calg->add_option("--order", aN, "truncation x-degree for series blocks");
    calg->add_flag("--contracted", acontracted, "Inonu-Wigner contraction mode ([x,y]=0)");

    auto* csolve = app.add_subcommand("solve", "boundary expansion solvers");
    std::string vkind, vw0 = "0", vf0;
    int vd = 0, vN = defN;
    std::optional<std::string> vtau, valpha;
    csolve->add_option("--kind", vkind, "first|second|log|logdensity")->required();
    csolve->add_option("--d", vd, "interior dimension (n+1)")->required();
    csolve->add_option("--w0", vw0, "solution weight w0 (rational)");
    csolve->add_option("--f0", vf0, "data field expression")->required();
    csolve->add_option("--order", vN, "truncation order N");
    csolve->add_option("--logtau", vtau, "log-scale representative field (weight 0)");
    csolve->add_option("--alpha", valpha, "indicial exponent: 0 or h0-1 as a rational");

    auto* cgjms = app.add_subcommand("gjms", "GJMS operator table and constant report");
    long long gk = 2;
    int gd = 0;
    cgjms->add_option("--k", gk, "operator order k")->required();
    cgjms->add_option("--d", gd, "interior dimension")->required();

    auto* cq = app.add_subcommand("qcurv", "holographic Q-curvature of a boundary scale");
    int qn = 0;
    std::string qomega;
    cq->add_option("--n", qn, "boundary dimension")->required();
    cq->add_option("--omega", qomega, "weight-0 scale field expression")->required();

    auto* cver = app.add_subcommand("verify", "run a verification suite");
    std::string vsuite = "all";
    cver->add_option("--suite", vsuite, "all|sl2|series|model|logops");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cseries->parsed())
            return cmd_series(skind, sh0, sN);
        if (calg->parsed())
            return cmd_algebra(aword, ah0, aweight, aN, acontracted);
        if (csolve->parsed())
            return cmd_solve(vkind, vd, vw0, vf0, vN, vtau, valpha);
        if (cgjms->parsed())
            return cmd_gjms(gk, gd);
        if (cq->parsed())
            return cmd_qcurv(qn, qomega);
        if (cver->parsed())
            return cmd_verify(vsuite, opt);
    } catch (const ParseError& e) {
        emit_error("parse", e.what());
        return 2;
    } catch (const DomainError& e) {
        emit_error("domain", e.what());
        return 3;
    } catch (const PoleError& e) {
        emit_error("domain", e.what());
        return 3;
    } catch (const InternalError& e) {
        emit_error("internal", e.what());
        return 4;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 4;
    }
    return 0;
}
