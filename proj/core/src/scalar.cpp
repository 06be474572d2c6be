#include <qortho/scalar.hpp>

#include <qortho/errors.hpp>

#include <cctype>

namespace qortho {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view s) {
    std::string digits(s);
    if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
    return Integer(digits, 10);
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    auto trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.remove_suffix(1);

    const auto slash = trimmed.find('/');
    const auto num_part = trimmed.substr(0, slash);
    const auto den_part = slash == std::string_view::npos ? std::string_view("1") : trimmed.substr(slash + 1);
    if (!is_integer_literal(num_part) || !is_integer_literal(den_part) || den_part[0] == '-') {
        throw ParameterError("malformed rational '" + std::string(text) + "' (expected a or a/b)");
    }
    Integer den = parse_integer(den_part);
    if (den == 0) {
        throw ParameterError("zero denominator in '" + std::string(text) + "'");
    }
    Scalar out(parse_integer(num_part), den);
    out.canonicalize();
    return out;
}

std::string to_string(const Scalar& x) {
    return x.get_str(10);
}

std::string to_decimal(const Scalar& x, int digits) {
    if (digits < 0) digits = 0;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Scalar scaled = abs(x) * scale + Scalar(1, 2);
    Integer q = scaled.get_num() / scaled.get_den();
    std::string body = q.get_str(10);
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) {
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        }
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    if (sgn(x) < 0 && q != 0) body.insert(0, "-");
    return body;
}

Scalar pow(const Scalar& x, long e) {
    if (e < 0 && x == 0) {
        throw ParameterError("zero raised to a negative power");
    }
    const unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar out;
    mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), n);
    if (e < 0) {
        mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    }
    out.canonicalize();
    return out;
}

Scalar abs(const Scalar& x) {
    return sgn(x) < 0 ? Scalar(-x) : x;
}

int sign(const Scalar& x) {
    return sgn(x);
}

} // namespace qortho
