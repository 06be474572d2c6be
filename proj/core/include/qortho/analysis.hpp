#ifndef QORTHO_ANALYSIS_HPP
#define QORTHO_ANALYSIS_HPP

#include <qortho/poly.hpp>
#include <qortho/solver.hpp>
#include <qortho/weights.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qortho {

/// p, p', and the negated remainders down to a constant.
std::vector<Poly> sturm_sequence(const Poly& p);

/// Distinct real roots of p in (lo, hi]. Throws ParameterError for the zero
/// polynomial, lo >= hi, or p(lo) = 0.
long sturm_count(const Poly& p, const Scalar& lo, const Scalar& hi);

/// 1 + max |a_k / a_n|; every real root lies strictly inside (-B, B).
Scalar cauchy_bound(const Poly& p);

/// p / gcd(p, p'), made monic.
Poly square_free_part(const Poly& p);

/// True when gcd(p, p') is constant.
bool has_simple_roots(const Poly& p);

struct RootReport {
    long count_positive = 0;
    /// Half-open intervals (lo, hi]; lo == hi marks an exact rational root.
    std::vector<std::pair<Scalar, Scalar>> intervals;
    std::vector<std::string> decimals;
    bool simple = true;
};

/// Isolates every real root of p to width below 10^-precision.
RootReport isolate_roots(const Poly& p, int precision);

enum class LimitSource { solver, rodrigues_printed, rodrigues_shifted };

struct LimitScan {
    std::vector<Scalar> v_sequence;
    std::vector<Scalar> deviations;
    /// deviations[k-1] / deviations[k]; empty when deviations[k] is zero.
    std::vector<std::optional<Scalar>> ratios;
};

/// v_k = 1 + delta 2^-k for k = 0..steps-1, with beta = 1 - p. Compares the
/// q-polynomial at x(s) with the classical one at s over s = 0..N.
LimitScan limit_scan(const ClassicalParams& cparams, const MultiIndex& n, const Scalar& delta, long steps,
                     LimitSource source = LimitSource::solver);

} // namespace qortho

#endif // QORTHO_ANALYSIS_HPP
