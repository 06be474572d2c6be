#ifndef QORTHO_WEIGHTS_HPP
#define QORTHO_WEIGHTS_HPP

#include <qortho/qlattice.hpp>
#include <qortho/scalar.hpp>

#include <string>
#include <vector>

namespace qortho {

/// Data of the vector measure on the q-lattice. Components are indexed
/// from 0 in code.
struct KravchukParams {
    QContext ctx;
    std::vector<Scalar> p;
    std::vector<Scalar> beta;
    long N = 0;

    std::size_t r() const { return p.size(); }
};

/// Data of the vector measure on the uniform lattice 0..N.
struct ClassicalParams {
    std::vector<Scalar> p;
    long N = 0;

    std::size_t r() const { return p.size(); }
};

/// beta_i = 1 - p_i.
std::vector<Scalar> complement(const std::vector<Scalar>& p);

/// q^C(s,2) [N]! p^s beta^(N-s) / (Gamma_q(s+1) Gamma_q(N-s+1)) for a single
/// component; throws ParameterError for s outside [0, N].
Scalar q_weight(const QContext& ctx, const Scalar& p, const Scalar& beta, long N, long s);
Scalar q_weight(const KravchukParams& params, std::size_t i, long s);

/// weight(s) / weight(s-1) for 1 <= s <= N.
Scalar pearson_ratio(const KravchukParams& params, std::size_t i, long s);

/// weight(s) * Delta x(s - 1/2).
Scalar measure_mass(const KravchukParams& params, std::size_t i, long s);

/// Binomial weight C(N,x) p^x (1-p)^(N-x).
Scalar classical_weight(const ClassicalParams& params, std::size_t i, long x);

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    /// Violations joined with "; ".
    std::string message() const;
};

ValidationReport validate_context(const Scalar& v);
ValidationReport validate(const KravchukParams& params);
ValidationReport validate(const ClassicalParams& params);

/// Throws ParameterError carrying the report when validation fails.
void require_valid(const KravchukParams& params);
void require_valid(const ClassicalParams& params);

} // namespace qortho

#endif // QORTHO_WEIGHTS_HPP
