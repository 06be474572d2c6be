#ifndef QORTHO_QLATTICE_HPP
#define QORTHO_QLATTICE_HPP

#include <qortho/poly.hpp>
#include <qortho/scalar.hpp>

#include <vector>

namespace qortho {

/// The deformation parameter, stored as v = q^(1/2) so that every
/// half-integer power of q is an exact rational.
class QContext {
public:
    /// Throws ParameterError unless v > 0 and v != 1.
    explicit QContext(Scalar v);

    const Scalar& v() const { return v_; }
    const Scalar& q() const { return q_; }

    /// v^e = q^(e/2).
    Scalar vpow(long e) const { return pow(v_, e); }
    Scalar qpow(long e) const { return pow(q_, e); }

    friend bool operator==(const QContext& a, const QContext& b) { return a.v_ == b.v_; }

private:
    Scalar v_;
    Scalar q_;
};

/// x(s) = (q^s - 1)/(q - 1).
Scalar lattice_x(const QContext& ctx, long s);

/// Delta x(s - 1/2) = nabla x(s + 1/2) = q^(s - 1/2).
Scalar delta_x_half(const QContext& ctx, long s);

/// [s]_q^(k) = x(s) x(s-1) ... x(s-k+1); 1 for k = 0.
Scalar q_stirling_value(const QContext& ctx, long s, int k);

/// The degree-k polynomial in X whose value at X = x(s) is [s]_q^(k):
/// prod_{j<k} q^(-j) (X - x(j)).
Poly q_stirling_poly(const QContext& ctx, int k);

/// Symmetric q-number (v^n - v^-n)/(v - v^-1).
Scalar q_number_sym(const QContext& ctx, long n);

/// Gamma_q(n) = x(1) x(2) ... x(n-1) for n >= 1; throws at the poles n <= 0.
Scalar q_gamma_int(const QContext& ctx, long n);

/// [n]_q! = prod_{k=1..n} [k]_q (symmetric q-numbers).
Scalar q_factorial_sym(const QContext& ctx, long n);

/// Gaussian binomial (q;q)_m / ((q;q)_k (q;q)_(m-k)); zero outside 0 <= k <= m.
Scalar q_binomial_bracket(const QContext& ctx, long m, long k);

/// (a;q)_k = prod_{j<k} (1 - a q^j).
Scalar q_pochhammer(const QContext& ctx, const Scalar& a, long k);

/// Coefficients of p in the basis {[s]_q^(k)}: p(X) = sum_k c_k [s]^(k).
std::vector<Scalar> to_stirling_basis(const QContext& ctx, const Poly& p);
Poly from_stirling_basis(const QContext& ctx, const std::vector<Scalar>& c);

} // namespace qortho

#endif // QORTHO_QLATTICE_HPP
