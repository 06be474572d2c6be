#include <qortho/poly.hpp>

#include <qortho/errors.hpp>

#include <algorithm>

namespace qortho {

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Poly::Poly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) {
    trim();
}

Poly Poly::constant(const Scalar& c) {
    return Poly(std::vector<Scalar>{c});
}

Poly Poly::identity() {
    return Poly({Scalar(0), Scalar(1)});
}

Poly Poly::monomial(const Scalar& c, int k) {
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar Poly::coeff(int k) const {
    if (k < 0 || k > degree()) return Scalar(0);
    return coeffs_[static_cast<std::size_t>(k)];
}

const Scalar& Poly::leading() const {
    if (is_zero()) throw ParameterError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Scalar Poly::operator()(const Scalar& x) const {
    Scalar acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Poly Poly::compose_affine(const Scalar& alpha, const Scalar& shift) const {
    // Horner in polynomial arithmetic: acc = acc * (alpha X + shift) + c.
    const Poly inner({shift, alpha});
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner + Poly::constant(*it);
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * static_cast<long>(k);
    }
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) throw ParameterError("cannot normalize the zero polynomial");
    const Scalar inv = 1 / leading();
    return *this * Scalar(inv);
}

Scalar Poly::max_abs_coeff() const {
    Scalar m = 0;
    for (const auto& c : coeffs_) {
        Scalar a = qortho::abs(c);
        if (a > m) m = a;
    }
    return m;
}

Poly& Poly::operator+=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw ParameterError("polynomial division by zero");
    std::vector<Scalar> rem(num.coeffs().begin(), num.coeffs().end());
    const int dd = den.degree();
    const int nd = num.degree();
    if (nd < dd) return {Poly(), num};
    std::vector<Scalar> quot(static_cast<std::size_t>(nd - dd) + 1);
    const Scalar lead = den.leading();
    for (int i = nd - dd; i >= 0; --i) {
        const Scalar c = rem[static_cast<std::size_t>(i + dd)] / lead;
        quot[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<std::size_t>(i + j)] -= c * den.coeff(j);
        }
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly interpolate(std::span<const Scalar> xs, std::span<const Scalar> ys) {
    if (xs.size() != ys.size()) throw ParameterError("interpolate: size mismatch");
    // Newton divided differences.
    const std::size_t n = xs.size();
    std::vector<Scalar> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Scalar gap = xs[i] - xs[i - level];
            if (gap == 0) throw ParameterError("interpolate: repeated abscissa");
            dd[i] = (dd[i] - dd[i - 1]) / gap;
        }
    }
    Poly out;
    for (std::size_t i = n; i-- > 0;) {
        out = out * Poly({Scalar(-xs[i]), Scalar(1)}) + Poly::constant(dd[i]);
    }
    return out;
}

std::vector<std::string> coeff_strings(const Poly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

} // namespace qortho
