#include <qortho/operators.hpp>

#include <qortho/errors.hpp>

namespace qortho {

Poly op_delta(const QContext& ctx, const Poly& f) {
    // Delta [s]^(k) = q^(3/2-k) x(k) [s]^(k-1)
    const auto c = to_stirling_basis(ctx, f);
    std::vector<Scalar> out(c.empty() ? 0 : c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        out[k - 1] = c[k] * ctx.vpow(3 - 2 * static_cast<long>(k)) * lattice_x(ctx, static_cast<long>(k));
    }
    return from_stirling_basis(ctx, out);
}

Poly op_nabla(const QContext& ctx, const Poly& f) {
    // nabla [s]^(k) = q^(1/2-k) x(k) [s-1]^(k-1)
    const auto c = to_stirling_basis(ctx, f);
    std::vector<Scalar> lowered(c.empty() ? 0 : c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        lowered[k - 1] = c[k] * ctx.vpow(1 - 2 * static_cast<long>(k)) * lattice_x(ctx, static_cast<long>(k));
    }
    const Scalar qinv = 1 / ctx.q();
    return from_stirling_basis(ctx, lowered).compose_affine(qinv, Scalar(-qinv));
}

Poly backward_step(const QContext& ctx, const Poly& f) {
    const Scalar qinv = 1 / ctx.q();
    return f - f.compose_affine(qinv, Scalar(-qinv));
}

Scalar raising_denominator(const QContext& ctx, const RaisingSpec& spec) {
    return spec.p * (ctx.qpow(spec.m - 1) - 1) + 1;
}

Poly raising_apply(const RaisingSpec& spec, const QContext& ctx, const Poly& f) {
    const Scalar d = raising_denominator(ctx, spec);
    if (d == 0) throw ParameterError("raising operator prefactor vanishes (p(q^(m-1)-1)+1 = 0)");
    if (f.is_zero()) return Poly();
    const Scalar& q = ctx.q();
    const Poly mult({Scalar(spec.p * lattice_x(ctx, spec.N + 1)), Scalar(-(spec.p + q * spec.beta))});
    Poly out = mult * f * Scalar(1 / (q * d));
    out += Poly::identity() * backward_step(ctx, f) * Scalar(spec.beta / d);
    return out * ctx.vpow(2 * spec.m + 1);
}

GridFunction raising_apply_pointwise(const RaisingSpec& spec, const QContext& ctx, const Poly& f) {
    const Scalar d = raising_denominator(ctx, spec);
    if (d == 0) throw ParameterError("raising operator prefactor vanishes (p(q^(m-1)-1)+1 = 0)");
    const long N = spec.N;
    auto w = [&](long s) {
        if (s < 0 || s > N) return Scalar(0);
        return q_weight(ctx, spec.p, spec.beta, N, s);
    };
    const Scalar c = spec.p * spec.beta * ctx.qpow(spec.m + 2 * N + 1) * q_number_sym(ctx, N + 1) / d;
    const Scalar beta_up = ctx.q() * ctx.q() * spec.beta;
    return tabulate(0, N + 1, [&](long s) {
        const Scalar diff = w(s) * f(lattice_x(ctx, s)) - w(s - 1) * f(lattice_x(ctx, s - 1));
        return Scalar(c / q_weight(ctx, spec.p, beta_up, N + 1, s) * diff / delta_x_half(ctx, s));
    });
}

std::vector<Scalar> lowering_coeffs(const KravchukParams& params, const MultiIndex& n) {
    const QContext& ctx = params.ctx;
    const long d = n.norm();
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const Scalar& p = params.p[i];
        out.push_back(ctx.vpow(2 * (d - n[i]) + 1) * (p * (ctx.qpow(n[i]) - 1) + 1) /
                      (p * (ctx.qpow(d) - 1) + 1) * lattice_x(ctx, n[i]));
    }
    return out;
}

KravchukParams lowered_params(const KravchukParams& params, std::optional<std::size_t> only) {
    KravchukParams out = params;
    const Scalar qq = params.ctx.q() * params.ctx.q();
    for (std::size_t i = 0; i < out.r(); ++i) {
        if (!only || *only == i) out.beta[i] /= qq;
    }
    out.N -= 1;
    return out;
}

Poly lowering_identity_check(const KravchukParams& params, const MultiIndex& n) {
    if (n.norm() < 1) throw ParameterError("lowering expansion needs |n| >= 1");
    const Poly K = solve_type2_q(params, n);
    const auto xi = lowering_coeffs(params, n);
    Poly res = op_delta(params.ctx, K);
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0) continue;
        res -= solve_type2_q(lowered_params(params, i), n.shifted(i, -1)) * xi[i];
    }
    return res;
}

LoweringSpan lowering_span_check(const KravchukParams& params, const MultiIndex& n) {
    if (n.norm() < 1) throw ParameterError("lowering expansion needs |n| >= 1");
    const long d = n.norm();
    const Poly target = op_delta(params.ctx, solve_type2_q(params, n));
    const KravchukParams low = lowered_params(params, std::nullopt);
    std::vector<std::size_t> used;
    std::vector<Poly> basis;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0) continue;
        used.push_back(i);
        basis.push_back(solve_type2_q(low, n.shifted(i, -1)));
    }
    Matrix a(static_cast<std::size_t>(d));
    std::vector<Scalar> b(static_cast<std::size_t>(d));
    for (long c = 0; c < d; ++c) {
        for (const auto& pb : basis) a[static_cast<std::size_t>(c)].push_back(pb.coeff(static_cast<int>(c)));
        b[static_cast<std::size_t>(c)] = target.coeff(static_cast<int>(c));
    }
    LoweringSpan out;
    out.printed = lowering_coeffs(params, n);
    out.coefficients.assign(n.size(), Scalar(0));
    if (auto sol = solve_consistent(a, b)) {
        out.in_span = true;
        for (std::size_t j = 0; j < used.size(); ++j) out.coefficients[used[j]] = (*sol)[j];
    }
    return out;
}

namespace {

GridFunction grid_of(const QContext* ctx, const Poly& p, long N) {
    return tabulate(0, N, [&](long s) { return p(ctx ? lattice_x(*ctx, s) : Scalar(s)); });
}

DiffeqResult assemble(Poly lhs, Poly rhs, const QContext* ctx, long N) {
    DiffeqResult out;
    out.residual = lhs - rhs;
    out.grid = grid_of(ctx, out.residual, N);
    out.lhs = std::move(lhs);
    out.rhs = std::move(rhs);
    return out;
}

} // namespace

DiffeqResult diffeq_residual_q(const KravchukParams& params, const MultiIndex& n, MConvention convention) {
    const QContext& ctx = params.ctx;
    const Poly K = solve_type2_q(params, n);
    const long d = n.norm();
    const Scalar qq = ctx.q() * ctx.q();
    // Product of operators, rightmost (last component) applied first.
    auto chain = [&](Poly f, std::optional<std::size_t> skip) {
        for (std::size_t j = params.r(); j-- > 0;) {
            if (skip && *skip == j) continue;
            const long m = convention == MConvention::fixed_norm ? d : std::max(f.degree(), 0);
            const RaisingSpec spec{params.p[j], params.beta[j] / qq, params.N - 1, m};
            f = raising_apply(spec, ctx, f);
        }
        return f;
    };
    Poly lhs = chain(op_delta(ctx, K), std::nullopt);
    Poly rhs;
    const auto xi = lowering_coeffs(params, n);
    for (std::size_t i = 0; i < params.r(); ++i) {
        if (n[i] == 0) continue;
        // q^(|n|-n_i+1) (...) x(n_i) = v xi_i
        rhs -= chain(K, i) * Scalar(ctx.v() * xi[i]);
    }
    return assemble(std::move(lhs), std::move(rhs), &ctx, params.N);
}

HypergeometricData hypergeometric_data_r1(const QContext& ctx, const Scalar& p, long N, long n,
                                          HypergeometricForm form) {
    if (n < 0) throw ParameterError("negative degree");
    const Scalar& q = ctx.q();
    const Scalar& v = ctx.v();
    HypergeometricData out;
    out.a2 = Poly({Scalar(0), Scalar(1), Scalar(q - 1)});
    const Scalar tail = form == HypergeometricForm::printed ? Scalar(ctx.qpow(N) - 1) : lattice_x(ctx, N);
    out.a1 = Poly({Scalar(v * p * q * tail / (1 - p)), Scalar(-(v / (1 - p)) * (p * (q - 1) + 1))});
    if (form == HypergeometricForm::printed) {
        // Delta x(s-1/2) = q^(s-1/2) = v^-1 ((q-1) X + 1)
        const Poly dx({Scalar(1 / v), Scalar((q - 1) / v)});
        out.sigma = out.a2 - out.a1 * dx * Scalar(1, 2);
    } else {
        out.sigma = out.a2;
    }
    out.tau = out.a1;
    out.lambda_n = ctx.vpow(2 - n) * q_number_sym(ctx, n) * (p * (ctx.qpow(n) - 1) + 1) / (1 - p);
    return out;
}

GridFunction hypergeometric_residual(const QContext& ctx, const HypergeometricData& data, const Poly& y,
                                     long N) {
    return hypergeometric_residual(ctx, data, y, N, data.lambda_n);
}

GridFunction hypergeometric_residual(const QContext& ctx, const HypergeometricData& data, const Poly& y,
                                     long N, const Scalar& lambda) {
    auto Y = [&](long s) { return y(lattice_x(ctx, s)); };
    auto back_ratio = [&](long s) {
        return Scalar((Y(s) - Y(s - 1)) / (lattice_x(ctx, s) - lattice_x(ctx, s - 1)));
    };
    return tabulate(0, N, [&](long s) {
        const Scalar X = lattice_x(ctx, s);
        const Scalar second = (back_ratio(s + 1) - back_ratio(s)) / delta_x_half(ctx, s);
        const Scalar first = (Y(s + 1) - Y(s)) / (lattice_x(ctx, s + 1) - X);
        return Scalar(data.sigma(X) * second + data.tau(X) * first + lambda * Y(s));
    });
}

Poly classical_raising_apply(const Scalar& p, long N, const Poly& f) {
    const Poly left({Scalar(p * (N + 1)), Scalar(-p)});
    const Poly right({Scalar(0), Scalar(-(1 - p))});
    return left * f + right * f.compose_affine(Scalar(1), Scalar(-1));
}

Poly forward_diff(const Poly& f) {
    return f.compose_affine(Scalar(1), Scalar(1)) - f;
}

DiffeqResult classical_diffeq_residual(const ClassicalParams& params, const MultiIndex& n,
                                       ClassicalBinding binding) {
    const Poly K = solve_type2_classical(params, n);
    const long r = static_cast<long>(params.r());
    const long N = params.N;
    // `start` is the N of the innermost operator under positional binding.
    auto chain = [&](Poly f, std::optional<std::size_t> skip, long start) {
        long slot = 0;
        for (std::size_t j = params.r(); j-- > 0;) {
            if (skip && *skip == j) continue;
            const long nj = binding == ClassicalBinding::printed
                                ? N + r - static_cast<long>(j + 1) - 1
                                : start + slot;
            f = classical_raising_apply(params.p[j], nj, f);
            ++slot;
        }
        return f;
    };
    Poly lhs = chain(forward_diff(K), std::nullopt, N - 1);
    Poly rhs;
    for (std::size_t i = 0; i < params.r(); ++i) {
        if (n[i] == 0) continue;
        rhs -= chain(K, i, N) * Scalar(n[i]);
    }
    return assemble(std::move(lhs), std::move(rhs), nullptr, N);
}

Poly recurrence_residual(const ClassicalParams& params, const MultiIndex& n, std::size_t k) {
    if (k >= params.r()) throw ParameterError("direction index out of range");
    const long N = params.N;
    const long d = n.norm();
    if (d + 1 > N) throw ParameterError("recurrence needs |n| + 1 <= N");
    const Poly K = solve_type2_classical(params, n);
    Scalar mid = (N - d) * params.p[k];
    for (std::size_t i = 0; i < params.r(); ++i) mid += n[i] * (1 - params.p[i]);
    Poly res = Poly::identity() * K - solve_type2_classical(params, n.shifted(k, 1)) - K * mid;
    for (std::size_t i = 0; i < params.r(); ++i) {
        if (n[i] == 0) continue;
        const Scalar& p = params.p[i];
        res -= solve_type2_classical(params, n.shifted(i, -1)) * Scalar(n[i] * p * (p - 1) * (d - N - 1));
    }
    return res;
}

} // namespace qortho
