#ifndef QORTHO_POLY_HPP
#define QORTHO_POLY_HPP

#include <qortho/scalar.hpp>

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qortho {

/// Exact univariate polynomial, coefficients stored by increasing power.
///
/// The variable is whatever the caller decides: X = x(s) on the q-lattice,
/// x = s on the uniform lattice. Trailing zero coefficients are always
/// trimmed, so the zero polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs);
    Poly(std::initializer_list<Scalar> coeffs);

    static Poly constant(const Scalar& c);
    /// The monomial X.
    static Poly identity();
    /// c * X^k.
    static Poly monomial(const Scalar& c, int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    /// Coefficient of X^k (zero beyond the degree).
    Scalar coeff(int k) const;
    const Scalar& leading() const;
    std::span<const Scalar> coeffs() const { return coeffs_; }

    Scalar operator()(const Scalar& x) const;

    /// p(alpha * X + shift).
    Poly compose_affine(const Scalar& alpha, const Scalar& shift) const;
    Poly derivative() const;
    Poly monic() const;
    /// Largest |coefficient|; zero for the zero polynomial.
    Scalar max_abs_coeff() const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Scalar& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return Poly() - a; }
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    void trim();

    std::vector<Scalar> coeffs_;
};

/// Euclidean division; throws ParameterError on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);

/// Monic gcd (zero if both inputs are zero).
Poly gcd(Poly a, Poly b);

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
/// Abscissae must be distinct.
Poly interpolate(std::span<const Scalar> xs, std::span<const Scalar> ys);

/// Coefficients as exact strings, lowest power first.
std::vector<std::string> coeff_strings(const Poly& p);

} // namespace qortho

#endif // QORTHO_POLY_HPP
