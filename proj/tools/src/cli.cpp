#include "cli.hpp"

#include <qortho/analysis.hpp>
#include <qortho/errors.hpp>
#include <qortho/operators.hpp>
#include <qortho/parallel.hpp>
#include <qortho/rodrigues.hpp>

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qortho::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

const std::vector<std::string> kQChecks{"orthogonality", "rodrigues", "raising", "lowering",
                                        "diffeq",        "hypergeometric", "zeros"};
const std::vector<std::string> kClassicalChecks{"orthogonality", "rodrigues", "raising", "diffeq",
                                                "recurrence",    "zeros"};
const std::vector<std::string> kAllChecks{"orthogonality", "rodrigues", "raising",    "lowering", "diffeq",
                                          "hypergeometric", "recurrence", "zeros"};

const char* kPass = "pass";
const char* kFail = "fail";
const char* kTrivial = "trivially satisfied";
const char* kNotApplicable = "not applicable";
const char* kError = "error";

Json scalars(const std::vector<Scalar>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
}

Json poly_json(const Poly& p) {
    Json out = Json::array();
    for (const auto& c : coeff_strings(p)) out.push_back(c);
    if (out.empty()) out.push_back("0");
    return out;
}

Scalar max_abs(const std::vector<Scalar>& xs) {
    Scalar m = 0;
    for (const auto& x : xs) m = std::max(m, abs(x));
    return m;
}

Json params_json(const JobConfig& cfg) {
    Json out;
    out["family"] = cfg.family == Family::q ? "q" : "classical";
    if (cfg.family == Family::q && cfg.v) {
        out["v"] = to_string(*cfg.v);
        out["q"] = to_string(*cfg.v * *cfg.v);
    }
    out["p"] = scalars(cfg.p);
    if (cfg.family == Family::q) out["beta"] = scalars(cfg.beta);
    out["N"] = cfg.N;
    out["index"] = cfg.index.entries;
    return out;
}

Json meta_json(const std::string& command) {
    Json out;
    out["tool"] = "qortho";
    out["version"] = kVersion;
    out["command"] = command;
    return out;
}

Json document(const JobConfig& cfg, Json result, Json checks) {
    Json doc;
    doc["params"] = params_json(cfg);
    doc["result"] = std::move(result);
    doc["checks"] = std::move(checks);
    doc["meta"] = meta_json(cfg.command);
    return doc;
}

Poly solve(const JobConfig& cfg) {
    return cfg.family == Family::q ? solve_type2_q(cfg.kravchuk(), cfg.index)
                                   : solve_type2_classical(cfg.classical(), cfg.index);
}

// ---- verify checks --------------------------------------------------------

Json status_entry(bool ok, const Scalar& norm) {
    Json out;
    out["status"] = ok ? kPass : kFail;
    out["residual_norm"] = to_string(norm);
    return out;
}

Json check_orthogonality(const JobConfig& cfg, const Poly& K) {
    if (cfg.index.is_zero()) return Json{{"status", kTrivial}, {"residual_norm", "0"}};
    const auto res = cfg.family == Family::q ? orthogonality_residuals(cfg.kravchuk(), cfg.index, K)
                                             : orthogonality_residuals(cfg.classical(), cfg.index, K);
    Json out = status_entry(max_abs(res) == 0, max_abs(res));
    out["residuals"] = scalars(res);
    return out;
}

Json check_rodrigues(const JobConfig& cfg, const Poly& K) {
    if (cfg.family == Family::classical) {
        const auto R = rodrigues_classical(cfg.classical(), cfg.index);
        Json out = status_entry(R.poly == K, (R.poly - K).max_abs_coeff());
        out["raw_leading"] = to_string(R.raw_leading);
        return out;
    }
    const auto params = cfg.kravchuk();
    Json out;
    try {
        const auto R = rodrigues_q(params, cfg.index, RodriguesForm::printed);
        out = status_entry(R.poly == K, (R.poly - K).max_abs_coeff());
        out["raw_leading"] = to_string(R.raw_leading);
        out["raw_leading_is_one"] = R.raw_leading == 1;
        out["constant"] = to_string(R.constant_G);
    } catch (const TranscriptionError& e) {
        out = Json{{"status", kFail}, {"detail", e.what()}};
    }
    const auto S = rodrigues_q(params, cfg.index, RodriguesForm::lattice_shifted);
    out["supplementary"] = Json{{"form", "lattice-shifted conjugation"},
                                {"status", S.poly == K ? kPass : kFail},
                                {"raw_leading", to_string(S.raw_leading)}};
    return out;
}

Json check_raising(const JobConfig& cfg, const Poly& K) {
    Json dirs = Json::array();
    bool all_ok = true;
    Scalar worst = 0;
    const long d = cfg.index.norm();
    for (std::size_t i = 0; i < cfg.index.size(); ++i) {
        Json entry;
        entry["direction"] = i + 1;
        const MultiIndex up = cfg.index.shifted(i, 1);
        if (cfg.family == Family::classical) {
            ClassicalParams target = cfg.classical();
            target.N += 1;
            const Poly lhs = classical_raising_apply(cfg.p[i], cfg.N, K);
            const Poly diff = lhs + solve_type2_classical(target, up);
            entry.update(status_entry(diff.is_zero(), diff.max_abs_coeff()));
        } else {
            const auto params = cfg.kravchuk();
            const QContext& ctx = params.ctx;
            const Poly lhs = raising_apply(RaisingSpec{params.p[i], params.beta[i], params.N, d}, ctx, K);
            auto compare = [&](const KravchukParams& target) -> Json {
                try {
                    const Poly diff = lhs + solve_type2_q(target, up) * ctx.v();
                    return status_entry(diff.is_zero(), diff.max_abs_coeff());
                } catch (const Error& e) {
                    return Json{{"status", kFail}, {"detail", e.what()}};
                }
            };
            KravchukParams literal = params;
            literal.beta[i] *= ctx.q() * ctx.q();
            literal.N += 1;
            KravchukParams shifted = literal;
            for (std::size_t j = 0; j < shifted.r(); ++j) {
                if (j != i) shifted.beta[j] *= ctx.q();
            }
            entry.update(compare(literal));
            Json sup = compare(shifted);
            sup["target"] = "beta_j -> q beta_j for j != i";
            entry["supplementary"] = sup;
        }
        if (entry["status"] != kPass) all_ok = false;
        if (entry.contains("residual_norm")) worst = std::max(worst, parse_scalar(entry["residual_norm"].get<std::string>()));
        dirs.push_back(entry);
    }
    Json out;
    out["status"] = all_ok ? kPass : kFail;
    out["residual_norm"] = to_string(worst);
    out["directions"] = dirs;
    return out;
}

Json check_lowering(const JobConfig& cfg) {
    if (cfg.family == Family::classical) return Json{{"status", kNotApplicable}};
    if (cfg.index.is_zero()) return Json{{"status", kTrivial}, {"residual_norm", "0"}};
    const auto params = cfg.kravchuk();
    Json out;
    try {
        const Poly res = lowering_identity_check(params, cfg.index);
        out = status_entry(res.is_zero(), res.max_abs_coeff());
    } catch (const Error& e) {
        out = Json{{"status", kFail}, {"detail", e.what()}};
    }
    out["coefficients"] = scalars(lowering_coeffs(params, cfg.index));
    const auto span = lowering_span_check(params, cfg.index);
    out["supplementary"] = Json{{"basis", "beta_j / q^2 on every component, N - 1"},
                                {"status", span.in_span ? kPass : kFail},
                                {"coefficients", scalars(span.coefficients)}};
    return out;
}

Json check_diffeq(const JobConfig& cfg) {
    if (cfg.index.is_zero()) return Json{{"status", kTrivial}, {"residual_norm", "0"}};
    if (cfg.family == Family::classical) {
        const auto printed = classical_diffeq_residual(cfg.classical(), cfg.index, ClassicalBinding::printed);
        const auto positional =
            classical_diffeq_residual(cfg.classical(), cfg.index, ClassicalBinding::positional);
        Json out = status_entry(printed.is_zero(), printed.grid.max_abs());
        out["supplementary"] = Json{{"binding", "positional"},
                                    {"status", positional.is_zero() ? kPass : kFail},
                                    {"residual_norm", to_string(positional.grid.max_abs())}};
        return out;
    }
    std::vector<std::pair<std::string, MConvention>> conventions;
    if (cfg.convention != "fixed-norm") conventions.emplace_back("operand-degree", MConvention::operand_degree);
    if (cfg.convention != "operand-degree") conventions.emplace_back("fixed-norm", MConvention::fixed_norm);
    Json per = Json::object();
    std::vector<std::string> zero;
    Scalar best = -1;
    for (const auto& [name, conv] : conventions) {
        const auto res = diffeq_residual_q(cfg.kravchuk(), cfg.index, conv);
        per[name] = status_entry(res.is_zero(), res.grid.max_abs());
        if (res.is_zero()) zero.push_back(name);
        if (best < 0 || res.grid.max_abs() < best) best = res.grid.max_abs();
    }
    Json out;
    out["status"] = zero.empty() ? kFail : kPass;
    out["residual_norm"] = to_string(best);
    out["conventions"] = per;
    out["adjudicated_convention"] = zero.empty() ? std::string("none") : zero.front();
    return out;
}

Json check_hypergeometric(const JobConfig& cfg, const Poly& K) {
    if (cfg.family == Family::classical || cfg.index.size() != 1) return Json{{"status", kNotApplicable}};
    const auto params = cfg.kravchuk();
    const QContext& ctx = params.ctx;
    const long n = cfg.index[0];
    auto run = [&](HypergeometricForm form) {
        const auto data = hypergeometric_data_r1(ctx, cfg.p[0], cfg.N, n, form);
        const auto res = hypergeometric_residual(ctx, data, K, cfg.N);
        bool separated = true;
        for (long m = 0; m <= std::max(5L, n + 1); ++m) {
            if (m == n) continue;
            const auto other = hypergeometric_data_r1(ctx, cfg.p[0], cfg.N, m, form);
            if (hypergeometric_residual(ctx, data, K, cfg.N, other.lambda_n).all_zero()) separated = false;
        }
        Json out = status_entry(res.all_zero() && separated, res.max_abs());
        out["eigenvalue"] = to_string(data.lambda_n);
        out["other_eigenvalues_rejected"] = separated;
        return out;
    };
    Json out = run(HypergeometricForm::printed);
    if (n == 0 && out["status"] == kPass) out["status"] = kTrivial;
    Json sup = run(HypergeometricForm::corrected);
    sup["form"] = "tau constant term with x(N), sigma = a2";
    out["supplementary"] = sup;
    return out;
}

Json check_recurrence(const JobConfig& cfg) {
    if (cfg.family == Family::q) return Json{{"status", kNotApplicable}};
    if (cfg.index.norm() + 1 > cfg.N) {
        return Json{{"status", kNotApplicable}, {"detail", "needs |n| + 1 <= N"}};
    }
    Json dirs = Json::array();
    bool all_ok = true;
    Scalar worst = 0;
    for (std::size_t k = 0; k < cfg.index.size(); ++k) {
        const Poly res = recurrence_residual(cfg.classical(), cfg.index, k);
        Json entry{{"direction", k + 1}};
        entry.update(status_entry(res.is_zero(), res.max_abs_coeff()));
        all_ok = all_ok && res.is_zero();
        worst = std::max(worst, res.max_abs_coeff());
        dirs.push_back(entry);
    }
    Json out = status_entry(all_ok, worst);
    out["directions"] = dirs;
    return out;
}

Json check_zeros(const JobConfig& cfg, const Poly& K) {
    const long d = cfg.index.norm();
    if (d == 0) return Json{{"status", kTrivial}, {"count", 0}};
    Json out;
    if (K(Scalar(0)) == 0) {
        out["status"] = kFail;
        out["detail"] = "0 is a root";
        return out;
    }
    const Scalar bound = cauchy_bound(K);
    const long count = sturm_count(K, Scalar(0), bound);
    const bool simple = has_simple_roots(K);
    out["status"] = count == d && simple ? kPass : kFail;
    out["count"] = count;
    out["expected"] = d;
    out["simple"] = simple;
    out["upper_bound"] = to_string(bound);
    return out;
}

Json run_check(const std::string& name, const JobConfig& cfg, const Poly& K) {
    try {
        if (name == "orthogonality") return check_orthogonality(cfg, K);
        if (name == "rodrigues") return check_rodrigues(cfg, K);
        if (name == "raising") return check_raising(cfg, K);
        if (name == "lowering") return check_lowering(cfg);
        if (name == "diffeq") return check_diffeq(cfg);
        if (name == "hypergeometric") return check_hypergeometric(cfg, K);
        if (name == "recurrence") return check_recurrence(cfg);
        if (name == "zeros") return check_zeros(cfg, K);
    } catch (const std::exception& e) {
        return Json{{"status", kError}, {"detail", e.what()}};
    }
    throw ParameterError("unknown check '" + name + "'");
}

std::vector<std::string> selected_checks(const JobConfig& cfg) {
    std::vector<std::string> out;
    for (const auto& c : cfg.checks) {
        if (c == "all") {
            const auto& all = cfg.family == Family::q ? kQChecks : kClassicalChecks;
            out.insert(out.end(), all.begin(), all.end());
        } else if (std::find(kAllChecks.begin(), kAllChecks.end(), c) != kAllChecks.end()) {
            out.push_back(c);
        } else {
            throw ParameterError("unknown check '" + c + "'");
        }
    }
    std::vector<std::string> unique;
    for (const auto& c : out) {
        if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
    }
    return unique;
}

// ---- parsing ----------------------------------------------------------------

std::vector<Scalar> parse_list(const std::vector<std::string>& items, const std::string& field) {
    std::vector<Scalar> out;
    for (const auto& s : items) {
        try {
            out.push_back(parse_scalar(s));
        } catch (const ParameterError& e) {
            throw ParameterError("--" + field + ": " + e.what());
        }
    }
    return out;
}

void finalize(JobConfig& cfg) {
    if (cfg.p.empty()) throw ParameterError("--p: at least one value is required");
    if (cfg.index.size() != cfg.p.size()) {
        throw ParameterError("--index: expected " + std::to_string(cfg.p.size()) + " entries, got " +
                             std::to_string(cfg.index.size()));
    }
    for (long e : cfg.index.entries) {
        if (e < 0) throw ParameterError("--index: entries must be nonnegative");
    }
    if (cfg.N < 0) throw ParameterError("--N: must be nonnegative");
    if (cfg.index.norm() > cfg.N) throw ParameterError("--index: |n| exceeds --N");
    if (!cfg.beta_given) cfg.beta = complement(cfg.p);
    if (cfg.beta.size() != cfg.p.size()) {
        throw ParameterError("--beta: expected " + std::to_string(cfg.p.size()) + " entries");
    }
    if (cfg.format != "json" && cfg.format != "csv") throw ParameterError("--format: json or csv");
    if (cfg.family == Family::q && cfg.command != "limit") {
        if (!cfg.v) throw ParameterError("--v: required for the q family");
        const auto ctx_report = validate_context(*cfg.v);
        if (!ctx_report.ok()) throw ParameterError("--v: " + ctx_report.message());
        const auto report = validate(cfg.kravchuk());
        if (!report.ok()) throw ParameterError(report.message());
    } else {
        const auto report = validate(cfg.classical());
        if (!report.ok()) throw ParameterError(report.message());
    }
    if (cfg.convention != "operand-degree" && cfg.convention != "fixed-norm" && cfg.convention != "both") {
        throw ParameterError("--convention: operand-degree, fixed-norm or both");
    }
    if (cfg.command == "zeros" && cfg.precision < 1) throw ParameterError("--precision: must be >= 1");
    if (cfg.command == "limit") {
        if (cfg.delta <= 0) throw ParameterError("--delta: must be positive");
        if (cfg.steps < 1) throw ParameterError("--steps: must be >= 1");
        if (cfg.beta_given) throw ParameterError("--beta: the limit scan fixes beta = 1 - p");
    }
    if (cfg.command == "verify" && cfg.format == "csv") {
        throw ParameterError("--format csv is available for compute, zeros and limit");
    }
}

// ---- csv ----------------------------------------------------------------------

std::string csv(const JobConfig& cfg, const Json& doc) {
    std::ostringstream os;
    const Json& result = doc["result"];
    if (cfg.command == "compute") {
        os << "power,coefficient\n";
        const auto& c = result["coefficients"];
        for (std::size_t k = 0; k < c.size(); ++k) os << k << "," << c[k].get<std::string>() << "\n";
    } else if (cfg.command == "zeros") {
        os << "root,lo,hi,decimal\n";
        std::size_t k = 0;
        for (const auto& r : result["roots"]) {
            os << ++k << "," << r["lo"].get<std::string>() << "," << r["hi"].get<std::string>() << ","
               << r["decimal"].get<std::string>() << "\n";
        }
    } else if (cfg.command == "limit") {
        os << "k,v,deviation,ratio\n";
        for (const auto& row : result["scan"]) {
            os << row["k"].get<long>() << "," << row["v"].get<std::string>() << ","
               << row["deviation"].get<std::string>() << ","
               << (row["ratio"].is_null() ? std::string() : row["ratio"].get<std::string>()) << "\n";
        }
    }
    return os.str();
}

} // namespace

KravchukParams JobConfig::kravchuk() const {
    if (!v) throw ParameterError("--v: required for the q family");
    return KravchukParams{QContext(*v), p, beta, N};
}

ClassicalParams JobConfig::classical() const { return ClassicalParams{p, N}; }

Outcome cmd_compute(const JobConfig& cfg) {
    const Poly K = solve(cfg);
    Json result;
    result["degree"] = K.degree();
    result["variable"] = cfg.family == Family::q ? "X = x(s)" : "x";
    result["coefficients"] = poly_json(K);
    bool agree = false;
    Json rod;
    if (cfg.family == Family::q) {
        const auto params = cfg.kravchuk();
        const auto S = rodrigues_q(params, cfg.index, RodriguesForm::lattice_shifted);
        agree = S.poly == K;
        rod["form"] = "lattice-shifted conjugation";
        try {
            const auto R = rodrigues_q(params, cfg.index, RodriguesForm::printed);
            rod["printed_agrees"] = R.poly == K;
            rod["raw_leading"] = to_string(R.raw_leading);
            rod["constant"] = to_string(R.constant_G);
        } catch (const TranscriptionError& e) {
            rod["printed_agrees"] = false;
            rod["printed_detail"] = e.what();
        }
    } else {
        const auto R = rodrigues_classical(cfg.classical(), cfg.index);
        agree = R.poly == K;
        rod["form"] = "classical";
        rod["raw_leading"] = to_string(R.raw_leading);
        rod["constant"] = to_string(R.constant_G);
    }
    result["agreement"] = agree;
    result["rodrigues"] = rod;
    Json checks;
    checks["solver_vs_rodrigues"] = agree ? kPass : kFail;
    return Outcome{document(cfg, std::move(result), std::move(checks)), agree ? ok : inconsistent};
}

Outcome cmd_verify(const JobConfig& cfg, const Tamper& tamper) {
    const auto names = selected_checks(cfg);
    Poly K = solve(cfg);
    if (tamper) tamper(K);
    std::vector<Json> results(names.size());
    parallel_for(names.size(), [&](std::size_t i) { results[i] = run_check(names[i], cfg, K); });
    Json checks = Json::object();
    bool failed = false;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto status = results[i]["status"].get<std::string>();
        if (status == kFail || status == kError) failed = true;
        checks[names[i]] = results[i];
    }
    Json result;
    result["coefficients"] = poly_json(K);
    result["passed"] = !failed;
    return Outcome{document(cfg, std::move(result), std::move(checks)), failed ? check_failed : ok};
}

Outcome cmd_zeros(const JobConfig& cfg) {
    const Poly K = solve(cfg);
    const long d = cfg.index.norm();
    Json result;
    result["coefficients"] = poly_json(K);
    Json roots = Json::array();
    bool pass = true;
    if (d > 0) {
        const auto report = isolate_roots(K, cfg.precision);
        for (std::size_t k = 0; k < report.intervals.size(); ++k) {
            roots.push_back(Json{{"lo", to_string(report.intervals[k].first)},
                                 {"hi", to_string(report.intervals[k].second)},
                                 {"exact", report.intervals[k].first == report.intervals[k].second},
                                 {"decimal", report.decimals[k]}});
        }
        result["count_positive"] = report.count_positive;
        result["simple"] = report.simple;
        pass = report.count_positive == d && report.simple &&
               static_cast<long>(report.intervals.size()) == d;
    } else {
        result["count_positive"] = 0;
        result["simple"] = true;
    }
    result["roots"] = roots;
    result["precision"] = cfg.precision;
    Json checks;
    checks["count_equals_degree"] = pass ? kPass : kFail;
    return Outcome{document(cfg, std::move(result), std::move(checks)), pass ? ok : check_failed};
}

Outcome cmd_limit(const JobConfig& cfg) {
    const auto scan = limit_scan(cfg.classical(), cfg.index, cfg.delta, cfg.steps);
    Json rows = Json::array();
    for (std::size_t k = 0; k < scan.v_sequence.size(); ++k) {
        Json row;
        row["k"] = static_cast<long>(k);
        row["v"] = to_string(scan.v_sequence[k]);
        row["deviation"] = to_string(scan.deviations[k]);
        row["deviation_decimal"] = to_decimal(scan.deviations[k], 6);
        if (k > 0 && scan.ratios[k - 1]) {
            row["ratio"] = to_string(*scan.ratios[k - 1]);
            row["ratio_decimal"] = to_decimal(*scan.ratios[k - 1], 6);
        } else {
            row["ratio"] = nullptr;
            row["ratio_decimal"] = nullptr;
        }
        rows.push_back(row);
    }
    const Scalar lo(17, 10), hi(23, 10);
    const std::size_t tail = std::min<std::size_t>(3, scan.ratios.size());
    bool band = true;
    for (std::size_t k = scan.ratios.size() - tail; k < scan.ratios.size(); ++k) {
        const auto& r = scan.ratios[k];
        if (!r || *r < lo || *r > hi) band = false;
    }
    const std::size_t mono_from = scan.deviations.size() >= 4 ? scan.deviations.size() - 4 : 0;
    bool decreasing = true;
    for (std::size_t k = mono_from + 1; k < scan.deviations.size(); ++k) {
        if (!(scan.deviations[k] < scan.deviations[k - 1])) decreasing = false;
    }
    Json result;
    result["beta"] = "1 - p";
    result["scan"] = rows;
    Json checks;
    checks["ratio_band"] = tail == 0 ? kTrivial : (band ? kPass : kFail);
    checks["band"] = Json::array({"17/10", "23/10"});
    checks["deviations_decreasing"] = decreasing ? kPass : kFail;
    const bool pass = band && decreasing;
    return Outcome{document(cfg, std::move(result), std::move(checks)), pass ? ok : check_failed};
}

std::string render(const JobConfig& cfg, const Outcome& outcome) {
    if (cfg.format == "csv") return csv(cfg, outcome.doc);
    return outcome.doc.dump(2) + "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiple q-Kravchuk and Kravchuk orthogonal polynomials in exact arithmetic", "qortho"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::string family = "q", v_text, index_text, convention = "both", format = "json", out_path;
    std::string delta_text = "1/8";
    std::vector<std::string> p_items, beta_items, index_items, check_items{"all"};
    long N = -1, steps = 5;
    int precision = 10;

    app.add_option("--family", family, "q or classical")->check(CLI::IsMember({"q", "classical"}));
    app.add_option("--v", v_text, "v = q^(1/2) as NUM/DEN");
    app.add_option("--p", p_items, "comma-separated p values")->delimiter(',');
    app.add_option("--beta", beta_items, "comma-separated beta values (default 1 - p)")->delimiter(',');
    app.add_option("--N", N, "number of lattice sites minus one")->required();
    app.add_option("--index", index_items, "comma-separated multi-index")->delimiter(',')->required();
    app.add_option("--format", format, "json or csv");
    app.add_option("--out", out_path, "write output to this file");
    app.set_config("--config", "", "key=value configuration file; flags take precedence");
    app.add_option("--checks", check_items, "verify: checks to run")->delimiter(',');
    app.add_option("--convention", convention, "verify: operand-degree, fixed-norm or both");
    app.add_option("--precision", precision, "zeros: decimal digits");
    app.add_option("--delta", delta_text, "limit: v_k = 1 + delta 2^-k");
    app.add_option("--steps", steps, "limit: number of scan points");

    auto* compute = app.add_subcommand("compute", "monic polynomial and Rodrigues agreement");
    auto* verify = app.add_subcommand("verify", "identity checks with exact residuals");
    auto* zeros = app.add_subcommand("zeros", "isolate the real zeros");
    auto* limit = app.add_subcommand("limit", "q -> 1 convergence scan");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForVersion& e) {
        out << kVersion << "\n";
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    }

    JobConfig cfg;
    try {
        cfg.command = compute->parsed() ? "compute"
                      : verify->parsed() ? "verify"
                      : zeros->parsed()  ? "zeros"
                      : limit->parsed()  ? "limit"
                                         : "";
        cfg.family = family == "q" ? Family::q : Family::classical;
        if (!v_text.empty()) cfg.v = parse_scalar(v_text);
        cfg.p = parse_list(p_items, "p");
        cfg.beta_given = !beta_items.empty();
        if (cfg.beta_given) cfg.beta = parse_list(beta_items, "beta");
        cfg.N = N;
        for (const auto& item : index_items) {
            try {
                std::size_t used = 0;
                const long e = std::stol(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                cfg.index.entries.push_back(e);
            } catch (const std::logic_error&) {
                throw ParameterError("--index: '" + item + "' is not an integer");
            }
        }
        cfg.format = format;
        cfg.out = out_path;
        cfg.checks = check_items;
        cfg.convention = convention;
        cfg.precision = precision;
        cfg.delta = parse_scalar(delta_text);
        cfg.steps = steps;
        finalize(cfg);
        if (cfg.command == "verify") selected_checks(cfg);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    }

    Outcome outcome;
    try {
        if (cfg.command == "compute") outcome = cmd_compute(cfg);
        else if (cfg.command == "verify") outcome = cmd_verify(cfg);
        else if (cfg.command == "zeros") outcome = cmd_zeros(cfg);
        else outcome = cmd_limit(cfg);
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return inconsistent;
    }

    const std::string text = render(cfg, outcome);
    if (cfg.out.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << cfg.out << "\n";
            return invalid_input;
        }
        file << text;
    }
    return outcome.code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"qortho"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace qortho::cli
