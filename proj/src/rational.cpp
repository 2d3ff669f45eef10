#include "boxlike/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace boxlike {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational operator/(const Rational& x, const Rational& y) {
    if (y.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(x.v_ / y.v_));
}

Rational& Rational::operator/=(const Rational& y) {
    if (y.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= y.v_;
    return *this;
}

double Rational::log() const {
    if (sign() <= 0) throw std::domain_error("Rational::log: non-positive value");
    // mpz_get_d_2exp splits |z| = d * 2^e with d in [0.5, 1), so the log stays
    // finite for numerators/denominators beyond double range.
    signed long en = 0, ed = 0;
    const double dn = mpz_get_d_2exp(&en, v_.get_num().get_mpz_t());
    const double dd = mpz_get_d_2exp(&ed, v_.get_den().get_mpz_t());
    return std::log(dn) - std::log(dd) + (static_cast<double>(en) - static_cast<double>(ed)) * M_LN2;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    // trim
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    std::string s(text);
    const auto slash = s.find('/');
    try {
        // base 10 throughout: GMP would read a leading zero as octal
        if (slash != std::string::npos) {
            const std::string num = s.substr(0, slash);
            const std::string den = s.substr(slash + 1);
            if (num.empty() || den.empty()) return std::nullopt;
            mpq_class q{mpz_class(num, 10), mpz_class(den, 10)};
            if (q.get_den() == 0) return std::nullopt;
            return Rational(std::move(q));
        }
        const auto dot = s.find('.');
        if (dot == std::string::npos) {
            return Rational(mpq_class(mpz_class(s, 10)));
        }
        // decimal: sign + integer part + fractional digits
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
        mpz_class num(digits, 10);
        mpz_class den(1);
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(mpq_class(num, den));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace boxlike
