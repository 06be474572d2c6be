#include <qortho/weights.hpp>

#include <qortho/errors.hpp>

namespace qortho {

namespace {

void check_site(long N, long s) {
    if (s < 0 || s > N) {
        throw ParameterError("site " + std::to_string(s) + " outside [0, " + std::to_string(N) + "]");
    }
}

void check_component(std::size_t r, std::size_t i) {
    if (i >= r) throw ParameterError("component index " + std::to_string(i + 1) + " out of range");
}

Integer binomial(long n, long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

void check_p(const std::vector<Scalar>& p, ValidationReport& report) {
    if (p.empty()) report.violations.emplace_back("r must be at least 1");
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0 || p[i] >= 1) {
            report.violations.push_back("p[" + std::to_string(i + 1) + "] = " + to_string(p[i]) +
                                        " not in (0, 1)");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (p[i] == p[j]) {
                report.violations.push_back("p[" + std::to_string(j + 1) + "] and p[" +
                                            std::to_string(i + 1) + "] coincide");
            }
        }
    }
}

} // namespace

std::vector<Scalar> complement(const std::vector<Scalar>& p) {
    std::vector<Scalar> out;
    out.reserve(p.size());
    for (const auto& x : p) out.emplace_back(1 - x);
    return out;
}

Scalar q_weight(const QContext& ctx, const Scalar& p, const Scalar& beta, long N, long s) {
    check_site(N, s);
    Scalar num = ctx.qpow(s * (s - 1) / 2) * q_factorial_sym(ctx, N) * pow(p, s) * pow(beta, N - s);
    return num / (q_gamma_int(ctx, s + 1) * q_gamma_int(ctx, N - s + 1));
}

Scalar q_weight(const KravchukParams& params, std::size_t i, long s) {
    check_component(params.r(), i);
    return q_weight(params.ctx, params.p[i], params.beta[i], params.N, s);
}

Scalar pearson_ratio(const KravchukParams& params, std::size_t i, long s) {
    check_component(params.r(), i);
    if (s < 1 || s > params.N) {
        throw ParameterError("Pearson ratio needs 1 <= s <= N, got s = " + std::to_string(s));
    }
    const QContext& ctx = params.ctx;
    const Scalar xs = lattice_x(ctx, s);
    return params.p[i] / (ctx.q() * params.beta[i]) * (lattice_x(ctx, params.N + 1) - xs) / xs;
}

Scalar measure_mass(const KravchukParams& params, std::size_t i, long s) {
    return q_weight(params, i, s) * delta_x_half(params.ctx, s);
}

Scalar classical_weight(const ClassicalParams& params, std::size_t i, long x) {
    check_component(params.r(), i);
    check_site(params.N, x);
    const Scalar& p = params.p[i];
    return Scalar(binomial(params.N, x)) * pow(p, x) * pow(Scalar(1 - p), params.N - x);
}

std::string ValidationReport::message() const {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v;
    }
    return out;
}

ValidationReport validate_context(const Scalar& v) {
    ValidationReport report;
    if (v <= 0) report.violations.push_back("v = " + to_string(v) + " must be positive");
    if (v == 1) report.violations.emplace_back("v = 1 (q = 1) is not allowed");
    return report;
}

ValidationReport validate(const KravchukParams& params) {
    ValidationReport report = validate_context(params.ctx.v());
    check_p(params.p, report);
    if (params.beta.size() != params.p.size()) {
        report.violations.push_back("beta has " + std::to_string(params.beta.size()) +
                                    " entries, p has " + std::to_string(params.p.size()));
        return report;
    }
    if (params.N < 0) report.violations.emplace_back("N must be nonnegative");
    for (std::size_t i = 0; i < params.r(); ++i) {
        if (params.beta[i] <= 0) {
            report.violations.push_back("beta[" + std::to_string(i + 1) + "] = " +
                                        to_string(params.beta[i]) + " must be positive");
        }
    }
    // Components with equal p/beta carry proportional measures.
    for (std::size_t i = 0; i < params.r(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (params.beta[i] > 0 && params.beta[j] > 0 &&
                params.p[i] / params.beta[i] == params.p[j] / params.beta[j]) {
                report.violations.push_back("p/beta ratios of components " + std::to_string(j + 1) +
                                            " and " + std::to_string(i + 1) + " coincide");
            }
        }
    }
    return report;
}

ValidationReport validate(const ClassicalParams& params) {
    ValidationReport report;
    check_p(params.p, report);
    if (params.N < 0) report.violations.emplace_back("N must be nonnegative");
    return report;
}

void require_valid(const KravchukParams& params) {
    const auto report = validate(params);
    if (!report.ok()) throw ParameterError(report.message());
}

void require_valid(const ClassicalParams& params) {
    const auto report = validate(params);
    if (!report.ok()) throw ParameterError(report.message());
}

} // namespace qortho
