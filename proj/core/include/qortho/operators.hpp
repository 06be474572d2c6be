#ifndef QORTHO_OPERATORS_HPP
#define QORTHO_OPERATORS_HPP

#include <qortho/grid.hpp>
#include <qortho/poly.hpp>
#include <qortho/solver.hpp>
#include <qortho/weights.hpp>

#include <optional>
#include <vector>

namespace qortho {

/// Delta f(s) = (f(s+1) - f(s)) / q^(s-1/2), as a polynomial in X.
Poly op_delta(const QContext& ctx, const Poly& f);
/// nabla f(s) = (f(s) - f(s-1)) / q^(s-1/2), as a polynomial in X.
Poly op_nabla(const QContext& ctx, const Poly& f);
/// Plain backward difference f(x(s)) - f(x(s-1)), using x(s-1) = (X-1)/q.
Poly backward_step(const QContext& ctx, const Poly& f);

struct RaisingSpec {
    Scalar p;
    Scalar beta;
    long N = 0;
    long m = 0;  // norm entering the scalar prefactor
};

/// p(q^(m-1) - 1) + 1.
Scalar raising_denominator(const QContext& ctx, const RaisingSpec& spec);

/// q^(m+1/2) [ (q^-1/d)(p(x(N+1) - X) - q beta X) f + (beta/d) X (f - f((X-1)/q)) ].
/// Throws ParameterError when d = 0.
Poly raising_apply(const RaisingSpec& spec, const QContext& ctx, const Poly& f);

/// The same operator written through weights:
/// p beta q^(m+2N+1) [N+1] / (d w'(s)) * nabla(w(s) f(x(s))), with
/// w = weight(p, beta, N), w' = weight(p, q^2 beta, N+1), and w = 0 outside
/// [0, N]. Evaluated on s = 0..N+1.
GridFunction raising_apply_pointwise(const RaisingSpec& spec, const QContext& ctx, const Poly& f);

/// xi_i = q^(|n|-n_i+1/2) (p_i(q^(n_i)-1)+1)/(p_i(q^|n|-1)+1) x(n_i).
std::vector<Scalar> lowering_coeffs(const KravchukParams& params, const MultiIndex& n);

/// Parameters with every beta divided by q^2 (component `only`, if set,
/// is the sole one changed) and N lowered by one.
KravchukParams lowered_params(const KravchukParams& params, std::optional<std::size_t> only);

/// Delta K_n - sum_i xi_i K_(n-e_i), where the i-th term uses beta_i/q^2 and
/// N-1. Zero polynomial iff the expansion holds.
Poly lowering_identity_check(const KravchukParams& params, const MultiIndex& n);

struct LoweringSpan {
    bool in_span = false;
    std::vector<Scalar> coefficients;  // per component; zero where n_i = 0
    std::vector<Scalar> printed;       // lowering_coeffs for comparison
};

/// Expands Delta K_n over {K_(n-e_i)} built with beta/q^2 on every
/// component and N-1.
LoweringSpan lowering_span_check(const KravchukParams& params, const MultiIndex& n);

enum class MConvention { operand_degree, fixed_norm };

struct DiffeqResult {
    Poly lhs;
    Poly rhs;
    Poly residual;
    GridFunction grid;  // residual on s = 0..N (or x = 0..N)

    bool is_zero() const { return residual.is_zero(); }
};

DiffeqResult diffeq_residual_q(const KravchukParams& params, const MultiIndex& n, MConvention convention);

enum class HypergeometricForm {
    /// tau constant term uses q^N - 1; sigma = a2 - a1 Delta x(s-1/2) / 2.
    printed,
    /// tau constant term uses x(N); sigma = a2.
    corrected,
};

struct HypergeometricData {
    Poly a2;
    Poly a1;
    Poly sigma;
    Poly tau;
    Scalar lambda_n;
};

HypergeometricData hypergeometric_data_r1(const QContext& ctx, const Scalar& p, long N, long n,
                                          HypergeometricForm form = HypergeometricForm::printed);

/// sigma Delta(nabla y / nabla x) / Delta x(s-1/2) + tau Delta y / Delta x + lambda y
/// on s = 0..N, with lambda = data.lambda_n.
GridFunction hypergeometric_residual(const QContext& ctx, const HypergeometricData& data, const Poly& y,
                                     long N);
GridFunction hypergeometric_residual(const QContext& ctx, const HypergeometricData& data, const Poly& y,
                                     long N, const Scalar& lambda);

/// p(N+1-x) f(x) - (1-p) x f(x-1).
Poly classical_raising_apply(const Scalar& p, long N, const Poly& f);

/// f(x+1) - f(x).
Poly forward_diff(const Poly& f);

enum class ClassicalBinding {
    /// Operator for component j always carries N + r - j - 1 (1-based j).
    printed,
    /// Operators take N from their position in the product: N-1, N, ... on
    /// the left, N, N+1, ... on the right.
    positional,
};

DiffeqResult classical_diffeq_residual(const ClassicalParams& params, const MultiIndex& n,
                                       ClassicalBinding binding = ClassicalBinding::printed);

/// x K_n - K_(n+e_k) - b K_n - sum_i c_i K_(n-e_i).
Poly recurrence_residual(const ClassicalParams& params, const MultiIndex& n, std::size_t k);

} // namespace qortho

#endif // QORTHO_OPERATORS_HPP
