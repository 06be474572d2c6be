#include <qortho/qlattice.hpp>

#include <qortho/errors.hpp>
#include <qortho/grid.hpp>

namespace qortho {

const Scalar& GridFunction::at(long s) const {
    if (!contains(s)) throw RangeError("grid site " + std::to_string(s) + " not covered");
    return values[static_cast<std::size_t>(s - base)];
}

Scalar& GridFunction::at(long s) {
    if (!contains(s)) throw RangeError("grid site " + std::to_string(s) + " not covered");
    return values[static_cast<std::size_t>(s - base)];
}

bool GridFunction::all_zero() const {
    for (const auto& x : values) {
        if (x != 0) return false;
    }
    return true;
}

Scalar GridFunction::max_abs() const {
    Scalar m = 0;
    for (const auto& x : values) {
        Scalar a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

QContext::QContext(Scalar v) : v_(std::move(v)) {
    if (v_ <= 0) throw ParameterError("v = q^(1/2) must be positive, got " + to_string(v_));
    if (v_ == 1) throw ParameterError("v = 1 (q = 1) is excluded: the lattice degenerates");
    q_ = v_ * v_;
}

Scalar lattice_x(const QContext& ctx, long s) {
    return (ctx.qpow(s) - 1) / (ctx.q() - 1);
}

Scalar delta_x_half(const QContext& ctx, long s) {
    return ctx.vpow(2 * s - 1);
}

Scalar q_stirling_value(const QContext& ctx, long s, int k) {
    Scalar out = 1;
    for (int j = 0; j < k; ++j) out *= lattice_x(ctx, s - j);
    return out;
}

Poly q_stirling_poly(const QContext& ctx, int k) {
    // x(s) - x(j) = q^j x(s - j), hence x(s - j) = q^-j (X - x(j)).
    Poly out = Poly::constant(1);
    for (int j = 0; j < k; ++j) {
        const Scalar scale = ctx.qpow(-j);
        out = out * Poly({Scalar(-scale * lattice_x(ctx, j)), scale});
    }
    return out;
}

Scalar q_number_sym(const QContext& ctx, long n) {
    return (ctx.vpow(n) - ctx.vpow(-n)) / (ctx.v() - 1 / ctx.v());
}

Scalar q_gamma_int(const QContext& ctx, long n) {
    if (n <= 0) throw ParameterError("Gamma_q has a pole at " + std::to_string(n));
    Scalar out = 1;
    for (long k = 1; k < n; ++k) out *= lattice_x(ctx, k);
    return out;
}

Scalar q_factorial_sym(const QContext& ctx, long n) {
    if (n < 0) throw ParameterError("q-factorial of a negative integer");
    Scalar out = 1;
    for (long k = 1; k <= n; ++k) out *= q_number_sym(ctx, k);
    return out;
}

Scalar q_binomial_bracket(const QContext& ctx, long m, long k) {
    if (k < 0 || k > m) return Scalar(0);
    const Scalar& q = ctx.q();
    // (q;q)_m / ((q;q)_k (q;q)_{m-k}) = prod_{j=1..k} (1 - q^(m-k+j)) / (1 - q^j).
    Scalar out = 1;
    for (long j = 1; j <= k; ++j) {
        out *= (1 - pow(q, m - k + j)) / (1 - pow(q, j));
    }
    return out;
}

Scalar q_pochhammer(const QContext& ctx, const Scalar& a, long k) {
    if (k < 0) throw ParameterError("q-Pochhammer with negative length");
    Scalar out = 1;
    for (long j = 0; j < k; ++j) out *= 1 - a * ctx.qpow(j);
    return out;
}

std::vector<Scalar> to_stirling_basis(const QContext& ctx, const Poly& p) {
    // [s]^(k) has leading coefficient q^(-k(k-1)/2); peel off from the top.
    std::vector<Scalar> out(static_cast<std::size_t>(std::max(p.degree() + 1, 0)));
    Poly rest = p;
    for (int k = p.degree(); k >= 0; --k) {
        const Scalar c = rest.coeff(k) * ctx.qpow(static_cast<long>(k) * (k - 1) / 2);
        out[static_cast<std::size_t>(k)] = c;
        if (c != 0) rest -= q_stirling_poly(ctx, k) * c;
    }
    return out;
}

Poly from_stirling_basis(const QContext& ctx, const std::vector<Scalar>& c) {
    Poly out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) out += q_stirling_poly(ctx, static_cast<int>(k)) * c[k];
    }
    return out;
}

} // namespace qortho
