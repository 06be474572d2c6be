#include <qortho/rodrigues.hpp>

#include <qortho/errors.hpp>

namespace qortho {

GridFunction nabla_pow_grid(const QContext& ctx, const GridFunction& f, long m) {
    if (m < 0) throw ParameterError("negative difference order");
    return nabla_pow_grid(ctx, f, m, f.first() + m, f.last());
}

GridFunction nabla_pow_grid(const QContext& ctx, const GridFunction& f, long m, long lo, long hi) {
    if (m < 0) throw ParameterError("negative difference order");
    if (lo - m < f.first() || hi > f.last() || f.values.empty()) {
        throw RangeError("nabla^" + std::to_string(m) + " on [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "] needs sites from " + std::to_string(lo - m));
    }
    GridFunction cur = tabulate(lo - m, hi, [&](long s) { return f.at(s); });
    for (long step = 0; step < m; ++step) {
        cur = tabulate(cur.first() + 1, hi, [&](long s) {
            return Scalar((cur.at(s) - cur.at(s - 1)) / delta_x_half(ctx, s));
        });
    }
    return cur;
}

GridFunction q_leibniz_expansion(const QContext& ctx, const GridFunction& f, long m) {
    if (m < 0) throw ParameterError("negative difference order");
    if (f.values.empty() || f.first() + m > f.last()) {
        throw RangeError("closed-sum nabla^" + std::to_string(m) + " needs more sites");
    }
    std::vector<Scalar> coef;
    for (long k = 0; k <= m; ++k) {
        Scalar c = q_binomial_bracket(ctx, m, k) * ctx.qpow(k * (k - 1) / 2);
        coef.push_back(k % 2 == 0 ? c : Scalar(-c));
    }
    return tabulate(f.first() + m, f.last(), [&](long s) {
        Scalar acc = 0;
        for (long k = 0; k <= m; ++k) acc += coef[static_cast<std::size_t>(k)] * f.at(s - k);
        return Scalar(acc * ctx.vpow(m - 2 * m * s));
    });
}

GridFunction backward_diff_pow(const GridFunction& f, long m) {
    if (m < 0) throw ParameterError("negative difference order");
    if (f.values.empty() || f.first() + m > f.last()) {
        throw RangeError("backward difference of order " + std::to_string(m) + " needs more sites");
    }
    GridFunction cur = f;
    for (long step = 0; step < m; ++step) {
        cur = tabulate(cur.first() + 1, cur.last(),
                       [&](long s) { return Scalar(cur.at(s) - cur.at(s - 1)); });
    }
    return cur;
}

Scalar rodrigues_constant(const KravchukParams& params, const MultiIndex& n) {
    const QContext& ctx = params.ctx;
    const long d = n.norm();
    if (n.size() != params.r()) throw ParameterError("multi-index length mismatch");
    if (d > params.N) throw ParameterError("|n| exceeds N");
    Scalar out = q_stirling_value(ctx, params.N, static_cast<int>(d)) * ctx.vpow(-5 * d);
    if (d % 2 != 0) out = -out;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const long pre = n.prefix(i);
        Scalar den = 1;
        for (long j = 1; j <= n[i]; ++j) {
            den *= ctx.qpow(-j) * (params.p[i] * (ctx.qpow(d - pre - j - 1) - 1) + 1);
        }
        if (den == 0) throw ParameterError("closed-form constant has a zero denominator");
        out *= pow(params.p[i], n[i]) / den;
        long later = 0;
        for (std::size_t j = i + 1; j < n.size(); ++j) later += n[j];
        out *= ctx.qpow(n[i] * later);
    }
    return out;
}

namespace {

RodriguesResult finish(const std::vector<Scalar>& xs, GridFunction values, long d, const Scalar& G,
                       const std::string& what) {
    std::span<const Scalar> all(xs);
    std::span<const Scalar> vals(values.values);
    Poly poly = interpolate(all.first(static_cast<std::size_t>(d + 1)),
                            vals.first(static_cast<std::size_t>(d + 1)));
    for (std::size_t s = static_cast<std::size_t>(d + 1); s < xs.size(); ++s) {
        if (poly(xs[s]) != vals[s]) {
            throw TranscriptionError("closed-form values are not polynomial of degree " +
                                     std::to_string(d) + " at site " + std::to_string(s) + ": " + what);
        }
    }
    if (poly.degree() != d) {
        throw TranscriptionError("closed form has degree " + std::to_string(poly.degree()) +
                                 ", expected " + std::to_string(d) + ": " + what);
    }
    RodriguesResult out;
    out.raw_leading = poly.leading();
    out.poly = poly.monic();
    out.constant_G = G;
    out.values = std::move(values);
    return out;
}

} // namespace

RodriguesResult rodrigues_q(const KravchukParams& params, const MultiIndex& n, RodriguesForm form) {
    require_valid(params);
    if (n.size() != params.r()) throw ParameterError("multi-index length mismatch");
    const QContext& ctx = params.ctx;
    const long N = params.N;
    const long d = n.norm();
    if (d > N) throw ParameterError("|n| exceeds N");

    // Innermost function, zero where 1/Gamma_q has a pole.
    const Scalar fact = q_factorial_sym(ctx, N - d);
    GridFunction g = tabulate(-d, N, [&](long s) {
        if (s < 0 || s > N - d) return Scalar(0);
        return Scalar(ctx.qpow(s * (s - 1) / 2) * fact /
                      (q_gamma_int(ctx, N - d - s + 1) * q_gamma_int(ctx, s + 1)));
    });
    for (std::size_t idx = n.size(); idx-- > 0;) {
        const long shift = form == RodriguesForm::lattice_shifted ? n.prefix(idx) : 0;
        const Scalar inner = params.p[idx] * ctx.qpow(2 * n[idx] + shift) / params.beta[idx];
        const Scalar outer = params.beta[idx] / (params.p[idx] * ctx.qpow(shift));
        for (long s = g.first(); s <= g.last(); ++s) g.at(s) *= pow(inner, s);
        g = nabla_pow_grid(ctx, g, n[idx]);
        for (long s = g.first(); s <= g.last(); ++s) g.at(s) *= pow(outer, s);
    }
    const Scalar G = rodrigues_constant(params, n);
    const Scalar nfact = q_factorial_sym(ctx, N);
    std::vector<Scalar> xs;
    GridFunction values = tabulate(0, N, [&](long s) {
        xs.push_back(lattice_x(ctx, s));
        return Scalar(G * q_gamma_int(ctx, N - s + 1) * q_gamma_int(ctx, s + 1) /
                      (ctx.qpow(s * (s - 1) / 2) * nfact) * g.at(s));
    });
    return finish(xs, std::move(values), d, G, "n=" + n.str());
}

RodriguesResult rodrigues_classical(const ClassicalParams& params, const MultiIndex& n) {
    require_valid(params);
    if (n.size() != params.r()) throw ParameterError("multi-index length mismatch");
    const long N = params.N;
    const long d = n.norm();
    if (d > N) throw ParameterError("|n| exceeds N");

    auto factorial = [](long k) {
        Integer out;
        mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
        return Scalar(out);
    };
    GridFunction g = tabulate(-d, N, [&](long x) {
        if (x < 0 || x > N - d) return Scalar(0);
        return Scalar(factorial(N - d) / (factorial(x) * factorial(N - d - x)));
    });
    for (std::size_t idx = n.size(); idx-- > 0;) {
        const Scalar ratio = params.p[idx] / (1 - params.p[idx]);
        for (long x = g.first(); x <= g.last(); ++x) g.at(x) *= pow(ratio, x);
        g = backward_diff_pow(g, n[idx]);
        for (long x = g.first(); x <= g.last(); ++x) g.at(x) /= pow(ratio, x);
    }
    // (-N)_d prod p_i^(n_i)
    Scalar G = 1;
    for (long j = 0; j < d; ++j) G *= Scalar(j - N);
    for (std::size_t i = 0; i < n.size(); ++i) G *= pow(params.p[i], n[i]);
    std::vector<Scalar> xs;
    GridFunction values = tabulate(0, N, [&](long x) {
        xs.emplace_back(x);
        return Scalar(G * factorial(x) * factorial(N - x) / factorial(N) * g.at(x));
    });
    return finish(xs, std::move(values), d, G, "classical n=" + n.str());
}

} // namespace qortho
