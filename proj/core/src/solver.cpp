#include <qortho/solver.hpp>

#include <qortho/errors.hpp>

namespace qortho {

long MultiIndex::norm() const {
    long out = 0;
    for (long e : entries) out += e;
    return out;
}

long MultiIndex::prefix(std::size_t i) const {
    long out = 0;
    for (std::size_t j = 0; j < i && j < entries.size(); ++j) out += entries[j];
    return out;
}

MultiIndex MultiIndex::shifted(std::size_t i, long delta) const {
    MultiIndex out = *this;
    out.entries.at(i) += delta;
    return out;
}

std::string MultiIndex::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(entries[i]);
    }
    return out + ")";
}

std::vector<MultiIndex> multi_indices(std::size_t r, long max_norm) {
    std::vector<MultiIndex> out;
    for (long total = 0; total <= max_norm; ++total) {
        MultiIndex cur(std::vector<long>(r, 0));
        // Compositions of `total` into r parts, lexicographically descending.
        auto rec = [&](auto&& self, std::size_t pos, long left) -> void {
            if (pos + 1 == r) {
                cur[pos] = left;
                out.push_back(cur);
                return;
            }
            for (long v = left; v >= 0; --v) {
                cur[pos] = v;
                self(self, pos + 1, left - v);
            }
        };
        if (r > 0) rec(rec, 0, total);
    }
    return out;
}

namespace {

void check_index(std::size_t r, long N, const MultiIndex& n) {
    if (n.size() != r) {
        throw ParameterError("multi-index " + n.str() + " has " + std::to_string(n.size()) +
                             " entries, expected " + std::to_string(r));
    }
    for (long e : n.entries) {
        if (e < 0) throw ParameterError("multi-index " + n.str() + " has a negative entry");
    }
    if (n.norm() > N) {
        throw ParameterError("|n| = " + std::to_string(n.norm()) + " exceeds N = " + std::to_string(N));
    }
}

std::string describe(const KravchukParams& params, const MultiIndex& n) {
    std::string out = "v=" + to_string(params.ctx.v()) + " N=" + std::to_string(params.N) + " p=(";
    for (std::size_t i = 0; i < params.r(); ++i) out += (i ? "," : "") + to_string(params.p[i]);
    out += ") beta=(";
    for (std::size_t i = 0; i < params.r(); ++i) out += (i ? "," : "") + to_string(params.beta[i]);
    return out + ") n=" + n.str();
}

// Tabulated lattice data shared by every entry of one system.
struct QTable {
    std::vector<std::vector<Scalar>> mass;      // [i][s]
    std::vector<std::vector<Scalar>> stirling;  // [k][s]
};

QTable make_table(const KravchukParams& params, long max_order) {
    QTable t;
    const long N = params.N;
    for (std::size_t i = 0; i < params.r(); ++i) {
        std::vector<Scalar> row;
        row.reserve(static_cast<std::size_t>(N + 1));
        for (long s = 0; s <= N; ++s) row.push_back(measure_mass(params, i, s));
        t.mass.push_back(std::move(row));
    }
    for (long k = 0; k <= max_order; ++k) {
        std::vector<Scalar> row;
        for (long s = 0; s <= N; ++s) row.push_back(q_stirling_value(params.ctx, s, static_cast<int>(k)));
        t.stirling.push_back(std::move(row));
    }
    return t;
}

Scalar table_entry(const QTable& t, std::size_t i, long j, long k) {
    Scalar acc = 0;
    const auto& a = t.stirling[static_cast<std::size_t>(j)];
    const auto& b = t.stirling[static_cast<std::size_t>(k)];
    const auto& m = t.mass[i];
    for (std::size_t s = 0; s < m.size(); ++s) {
        if (a[s] != 0 && b[s] != 0) acc += a[s] * b[s] * m[s];
    }
    return acc;
}

Poly solve_system(const OrthoSystem& sys, const std::vector<Poly>& basis, const Scalar& top_scale,
                  const std::string& what) {
    const std::size_t d = sys.rows.size();
    Matrix a(d);
    std::vector<Scalar> b(d);
    for (std::size_t r = 0; r < d; ++r) {
        a[r].assign(sys.matrix[r].begin(), sys.matrix[r].begin() + static_cast<long>(d));
        b[r] = sys.matrix[r][d];
    }
    auto sol = bareiss_solve(a, b);
    if (!sol) throw NormalityError("singular orthogonality system: " + what);
    Poly out = basis[d] * top_scale;
    for (std::size_t j = 0; j < d; ++j) {
        if ((*sol)[j] != 0) out += basis[j] * (*sol)[j];
    }
    return out;
}

} // namespace

Scalar inner_sum_q(const KravchukParams& params, std::size_t i, const Poly& f, long k) {
    if (k < 0) throw ParameterError("negative test-function order");
    Scalar acc = 0;
    for (long s = 0; s <= params.N; ++s) {
        const Scalar x = lattice_x(params.ctx, s);
        acc += f(x) * q_stirling_value(params.ctx, s, static_cast<int>(k)) * measure_mass(params, i, s);
    }
    return acc;
}

OrthoSystem build_system_q(const KravchukParams& params, const MultiIndex& n) {
    check_index(params.r(), params.N, n);
    const long d = n.norm();
    long max_k = 0;
    for (long e : n.entries) max_k = std::max(max_k, e);
    const QTable t = make_table(params, std::max(d, max_k));
    // The unknown polynomial is q^C(d,2) S_d + sum_{j<d} c_j S_j, monic in X.
    const Scalar top = params.ctx.qpow(d * (d - 1) / 2);
    OrthoSystem sys;
    for (std::size_t i = 0; i < params.r(); ++i) {
        for (long k = 0; k < n[i]; ++k) {
            std::vector<Scalar> row;
            row.reserve(static_cast<std::size_t>(d + 1));
            for (long j = 0; j < d; ++j) row.push_back(table_entry(t, i, j, k));
            row.push_back(-top * table_entry(t, i, d, k));
            sys.matrix.push_back(std::move(row));
            sys.rows.emplace_back(i, k);
        }
    }
    return sys;
}

Poly solve_type2_q(const KravchukParams& params, const MultiIndex& n) {
    require_valid(params);
    const OrthoSystem sys = build_system_q(params, n);
    const long d = n.norm();
    std::vector<Poly> basis;
    for (long j = 0; j <= d; ++j) basis.push_back(q_stirling_poly(params.ctx, static_cast<int>(j)));
    return solve_system(sys, basis, params.ctx.qpow(d * (d - 1) / 2), describe(params, n));
}

Poly rising_neg(long j) {
    Poly out = Poly::constant(1);
    for (long m = 0; m < j; ++m) out = out * Poly({Scalar(m), Scalar(-1)});
    return out;
}

Poly falling(long j) {
    Poly out = Poly::constant(1);
    for (long m = 0; m < j; ++m) out = out * Poly({Scalar(-m), Scalar(1)});
    return out;
}

Scalar inner_sum_classical(const ClassicalParams& params, std::size_t i, const Poly& f, long k) {
    if (k < 0) throw ParameterError("negative test-function order");
    const Poly test = rising_neg(k);
    Scalar acc = 0;
    for (long x = 0; x <= params.N; ++x) {
        const Scalar xs(x);
        acc += f(xs) * test(xs) * classical_weight(params, i, x);
    }
    return acc;
}

OrthoSystem build_system_classical(const ClassicalParams& params, const MultiIndex& n) {
    check_index(params.r(), params.N, n);
    const long d = n.norm();
    long max_k = 0;
    for (long e : n.entries) max_k = std::max(max_k, e);
    // Tabulate falling factorials, test functions and weights once.
    std::vector<std::vector<Scalar>> fall(static_cast<std::size_t>(d + 1)), test(static_cast<std::size_t>(max_k));
    for (long j = 0; j <= d; ++j) {
        const Poly f = falling(j);
        for (long x = 0; x <= params.N; ++x) fall[static_cast<std::size_t>(j)].push_back(f(Scalar(x)));
    }
    for (long k = 0; k < max_k; ++k) {
        const Poly f = rising_neg(k);
        for (long x = 0; x <= params.N; ++x) test[static_cast<std::size_t>(k)].push_back(f(Scalar(x)));
    }
    OrthoSystem sys;
    for (std::size_t i = 0; i < params.r(); ++i) {
        std::vector<Scalar> w;
        for (long x = 0; x <= params.N; ++x) w.push_back(classical_weight(params, i, x));
        auto entry = [&](long j, long k) {
            Scalar acc = 0;
            for (std::size_t x = 0; x < w.size(); ++x) {
                acc += fall[static_cast<std::size_t>(j)][x] * test[static_cast<std::size_t>(k)][x] * w[x];
            }
            return acc;
        };
        for (long k = 0; k < n[i]; ++k) {
            std::vector<Scalar> row;
            for (long j = 0; j < d; ++j) row.push_back(entry(j, k));
            row.push_back(-entry(d, k));
            sys.matrix.push_back(std::move(row));
            sys.rows.emplace_back(i, k);
        }
    }
    return sys;
}

Poly solve_type2_classical(const ClassicalParams& params, const MultiIndex& n) {
    require_valid(params);
    const OrthoSystem sys = build_system_classical(params, n);
    const long d = n.norm();
    std::vector<Poly> basis;
    for (long j = 0; j <= d; ++j) basis.push_back(falling(j));
    std::string what = "classical N=" + std::to_string(params.N) + " n=" + n.str();
    return solve_system(sys, basis, Scalar(1), what);
}

std::vector<Scalar> orthogonality_residuals(const KravchukParams& params, const MultiIndex& n,
                                            const Poly& K) {
    check_index(params.r(), params.N, n);
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < params.r(); ++i) {
        for (long k = 0; k < n[i]; ++k) out.push_back(inner_sum_q(params, i, K, k));
    }
    return out;
}

std::vector<Scalar> orthogonality_residuals(const ClassicalParams& params, const MultiIndex& n,
                                            const Poly& K) {
    check_index(params.r(), params.N, n);
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < params.r(); ++i) {
        for (long k = 0; k < n[i]; ++k) out.push_back(inner_sum_classical(params, i, K, k));
    }
    return out;
}

Scalar normality_determinant(const KravchukParams& params, const MultiIndex& n) {
    const OrthoSystem sys = build_system_q(params, n);
    const std::size_t d = sys.rows.size();
    Matrix a(d);
    for (std::size_t r = 0; r < d; ++r) {
        a[r].assign(sys.matrix[r].begin(), sys.matrix[r].begin() + static_cast<long>(d));
    }
    return determinant(a);
}

} // namespace qortho
