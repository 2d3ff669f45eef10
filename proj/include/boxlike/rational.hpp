#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace boxlike {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Backed by GMP so coordinates stay exact no matter how many
/// map compositions they pass through.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long num) : v_(num) {}
    Rational(long num, long den);
    explicit Rational(mpq_class v);

    /// Accepts "3/5", "-7/2", integers ("2") and decimals ("0.75", "-1.5").
    static std::optional<Rational> parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    double to_double() const { return v_.get_d(); }

    /// Natural log; requires a positive value. Exact even when the numerator
    /// or denominator overflows double range.
    double log() const;

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ + y.v_)); }
    friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ - y.v_)); }
    friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ * y.v_)); }
    friend Rational operator/(const Rational& x, const Rational& y);
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.v_)); }

    Rational& operator+=(const Rational& y) { v_ += y.v_; return *this; }
    Rational& operator-=(const Rational& y) { v_ -= y.v_; return *this; }
    Rational& operator*=(const Rational& y) { v_ *= y.v_; return *this; }
    Rational& operator/=(const Rational& y);

    friend bool operator==(const Rational& x, const Rational& y) { return cmp(x.v_, y.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        const int c = cmp(x.v_, y.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace boxlike
