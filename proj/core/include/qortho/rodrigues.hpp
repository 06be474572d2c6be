#ifndef QORTHO_RODRIGUES_HPP
#define QORTHO_RODRIGUES_HPP

#include <qortho/grid.hpp>
#include <qortho/poly.hpp>
#include <qortho/solver.hpp>
#include <qortho/weights.hpp>

namespace qortho {

/// m-fold nabla, nabla f(s) = (f(s) - f(s-1)) / v^(2s-1). The result covers
/// [f.first() + m, f.last()].
GridFunction nabla_pow_grid(const QContext& ctx, const GridFunction& f, long m);
/// Same, restricted to [lo, hi]; throws RangeError when f lacks the m guard
/// sites below lo or does not reach hi.
GridFunction nabla_pow_grid(const QContext& ctx, const GridFunction& f, long m, long lo, long hi);

/// Closed-sum form of the m-fold nabla:
/// q^(m/2 - m s) sum_k (-1)^k [m,k] q^C(k,2) f(s-k).
GridFunction q_leibniz_expansion(const QContext& ctx, const GridFunction& f, long m);

/// Ordinary backward difference, m times, on the uniform lattice.
GridFunction backward_diff_pow(const GridFunction& f, long m);

/// Normalizing constant attached to the closed formula.
Scalar rodrigues_constant(const KravchukParams& params, const MultiIndex& n);

enum class RodriguesForm {
    /// Layer i: (beta_i/p_i)^s nabla^(n_i) (p_i q^(2 n_i)/beta_i)^s.
    printed,
    /// Layer i additionally carries q^(|n|_i s) inside and q^(-|n|_i s) outside,
    /// where |n|_i is the sum of the entries before i.
    lattice_shifted,
};

struct RodriguesResult {
    Poly poly;           // monic
    Scalar raw_leading;  // leading coefficient including the constant
    Scalar constant_G;
    GridFunction values; // closed-form values on s = 0..N, constant included
};

/// Evaluates the closed formula on s = 0..N (innermost layer is the last
/// component), interpolates at x(0..|n|) and checks every remaining site.
/// Throws TranscriptionError if the values are not those of a degree-|n|
/// polynomial.
RodriguesResult rodrigues_q(const KravchukParams& params, const MultiIndex& n,
                            RodriguesForm form = RodriguesForm::printed);

RodriguesResult rodrigues_classical(const ClassicalParams& params, const MultiIndex& n);

} // namespace qortho

#endif // QORTHO_RODRIGUES_HPP
