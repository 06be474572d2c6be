#ifndef QORTHO_TESTS_ORACLE_HPP
#define QORTHO_TESTS_ORACLE_HPP

// Reference computations written independently of the library: direct
// sums, branch formulas and dense Gauss-Jordan on the monomial basis.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace oracle {

using Q = mpq_class;

inline Q power(Q base, long e) {
    if (e < 0) {
        base = 1 / base;
        e = -e;
    }
    Q out = 1;
    for (long k = 0; k < e; ++k) out *= base;
    return out;
}

/// 1 + q + ... + q^(s-1) for s >= 0, and -(q^-1 + ... + q^s) for s < 0.
inline Q lattice(const Q& v, long s) {
    const Q q = v * v;
    Q out = 0;
    if (s >= 0) {
        for (long j = 0; j < s; ++j) out += power(q, j);
    } else {
        for (long j = s; j < 0; ++j) out -= power(q, j);
    }
    return out;
}

/// Gamma_q at a positive integer from the infinite-product definition: for
/// 0 < q < 1 the products telescope to (1-q)^(1-n) prod_{j<n} (1-q^j); for
/// q > 1 the value is q^((n-1)(n-2)/2) times the same with q -> 1/q.
inline Q gamma_branch(const Q& v, long n) {
    if (n < 1) throw std::invalid_argument("pole");
    const Q q = v * v;
    auto f = [n](const Q& base) {
        Q out = power(1 - base, 1 - n);
        for (long j = 1; j < n; ++j) out *= 1 - power(base, j);
        return out;
    };
    if (q < 1) return f(q);
    return power(q, (n - 1) * (n - 2) / 2) * f(1 / q);
}

/// [n]_q = q^((1-n)/2) Gamma_q(n+1) / Gamma_q(n), with the half power taken in v.
inline Q qnum_gamma(const Q& v, long n) {
    return power(v, 1 - n) * gamma_branch(v, n + 1) / gamma_branch(v, n);
}

inline Q qfact_gamma(const Q& v, long n) {
    Q out = 1;
    for (long k = 1; k <= n; ++k) out *= qnum_gamma(v, k);
    return out;
}

/// (p/(1-p))^s q^(s(s-1)/2) [N]! (1-p)^N / (Gamma_q(N-s+1) Gamma_q(s+1)).
inline Q omega(const Q& v, const Q& p, long N, long s) {
    const Q q = v * v;
    return power(p / (1 - p), s) * power(q, s * (s - 1) / 2) * qfact_gamma(v, N) * power(1 - p, N) /
           (gamma_branch(v, N - s + 1) * gamma_branch(v, s + 1));
}

/// Weight with free beta, built from weight(0) = beta^N [N]!/Gamma_q(N+1) and the ratio chain
/// weight(s)/weight(s-1) = q^(s-1) (p/beta) x(N-s+1)/x(s).
inline std::vector<Q> weight_chain(const Q& v, const Q& p, const Q& beta, long N) {
    const Q q = v * v;
    std::vector<Q> w{power(beta, N) * qfact_gamma(v, N) / gamma_branch(v, N + 1)};
    for (long s = 1; s <= N; ++s) {
        w.push_back(w.back() * power(q, s - 1) * (p / beta) * lattice(v, N - s + 1) / lattice(v, s));
    }
    return w;
}

inline Q binom(long n, long k) {
    Q out = 1;
    for (long j = 1; j <= k; ++j) out = out * (n - k + j) / j;
    return out;
}

/// Gauss-Jordan on a dense rational matrix (first nonzero pivot).
inline std::optional<std::vector<Q>> gauss_jordan(std::vector<std::vector<Q>> a, std::vector<Q> b) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[k]);
        std::swap(b[piv], b[k]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const Q f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<Q> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

inline Q eval(const std::vector<Q>& c, const Q& x) {
    Q out = 0;
    for (std::size_t k = c.size(); k-- > 0;) out = out * x + c[k];
    return out;
}

/// Monic type II polynomial on the monomial basis. `points` are the
/// abscissae, `masses[i]` the measure of component i at each point and
/// `tests[k]` the test function of order k at each point.
inline std::optional<std::vector<Q>> type2_monomial(const std::vector<Q>& points,
                                                    const std::vector<std::vector<Q>>& masses,
                                                    const std::vector<std::vector<Q>>& tests,
                                                    const std::vector<long>& n) {
    long d = 0;
    for (long e : n) d += e;
    std::vector<std::vector<Q>> a;
    std::vector<Q> b;
    for (std::size_t i = 0; i < n.size(); ++i) {
        for (long k = 0; k < n[i]; ++k) {
            std::vector<Q> row(static_cast<std::size_t>(d));
            Q rhs = 0;
            for (std::size_t s = 0; s < points.size(); ++s) {
                const Q w = masses[i][s] * tests[static_cast<std::size_t>(k)][s];
                Q xp = 1;
                for (long j = 0; j < d; ++j) {
                    row[static_cast<std::size_t>(j)] += xp * w;
                    xp *= points[s];
                }
                rhs -= xp * w;
            }
            a.push_back(std::move(row));
            b.push_back(rhs);
        }
    }
    auto sol = gauss_jordan(std::move(a), std::move(b));
    if (!sol) return std::nullopt;
    sol->push_back(1);
    return sol;
}

/// q-family data for type2_monomial with beta free.
struct QData {
    std::vector<Q> points;
    std::vector<std::vector<Q>> masses;
    std::vector<std::vector<Q>> tests;
};

inline QData q_data(const Q& v, const std::vector<Q>& p, const std::vector<Q>& beta, long N, long max_order) {
    QData d;
    for (long s = 0; s <= N; ++s) d.points.push_back(lattice(v, s));
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto w = weight_chain(v, p[i], beta[i], N);
        for (long s = 0; s <= N; ++s) w[static_cast<std::size_t>(s)] *= power(v, 2 * s - 1);
        d.masses.push_back(std::move(w));
    }
    for (long k = 0; k <= max_order; ++k) {
        std::vector<Q> row;
        for (long s = 0; s <= N; ++s) {
            Q t = 1;
            for (long j = 0; j < k; ++j) t *= lattice(v, s - j);
            row.push_back(t);
        }
        d.tests.push_back(std::move(row));
    }
    return d;
}

inline std::optional<std::vector<Q>> q_type2(const Q& v, const std::vector<Q>& p, const std::vector<Q>& beta,
                                             long N, const std::vector<long>& n) {
    long mx = 0;
    for (long e : n) mx = std::max(mx, e);
    const auto d = q_data(v, p, beta, N, mx);
    return type2_monomial(d.points, d.masses, d.tests, n);
}

inline std::optional<std::vector<Q>> classical_type2(const std::vector<Q>& p, long N, const std::vector<long>& n) {
    long mx = 0;
    for (long e : n) mx = std::max(mx, e);
    std::vector<Q> points;
    std::vector<std::vector<Q>> masses(p.size()), tests;
    for (long x = 0; x <= N; ++x) points.emplace_back(x);
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (long x = 0; x <= N; ++x) masses[i].push_back(binom(N, x) * power(p[i], x) * power(1 - p[i], N - x));
    }
    for (long k = 0; k <= mx; ++k) {
        std::vector<Q> row;
        for (long x = 0; x <= N; ++x) {
            Q t = 1;
            for (long m = 0; m < k; ++m) t *= Q(-x + m);
            row.push_back(t);
        }
        tests.push_back(std::move(row));
    }
    return type2_monomial(points, masses, tests, n);
}

} // namespace oracle

#endif // QORTHO_TESTS_ORACLE_HPP
