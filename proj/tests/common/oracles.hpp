#pragma once

// Brute-force oracles, kept independent of the level-table pipeline: word
// enumeration with per-word weights, and exact 2x2 rational matrix products
// for singular values.

#include "boxlike/ifs.hpp"
#include "boxlike/rational.hpp"

#include <cmath>
#include <vector>

namespace testutil {

// Exact linear part of a composed map.
struct Mat2q {
    boxlike::Rational xx, xy, yx, yy;

    static Mat2q identity() {
        using boxlike::Rational;
        return Mat2q{Rational(1), Rational(0), Rational(0), Rational(1)};
    }

    static Mat2q of(const boxlike::AffineMap& m) {
        using boxlike::Rational;
        const boxlike::IsoMatrix iso = boxlike::matrix_of(m.iso);
        return Mat2q{m.a * Rational(iso.xx), m.a * Rational(iso.xy),
                     m.b * Rational(iso.yx), m.b * Rational(iso.yy)};
    }

    Mat2q operator*(const Mat2q& o) const {
        return Mat2q{xx * o.xx + xy * o.yx, xx * o.xy + xy * o.yy,
                     yx * o.xx + yy * o.yx, yx * o.xy + yy * o.yy};
    }

    bool diagonal() const { return xy.is_zero() && yx.is_zero(); }
    bool antidiagonal() const { return xx.is_zero() && yy.is_zero(); }

    // |entries| of a signed-diagonal or signed-antidiagonal matrix, sorted
    // descending: the exact singular values.
    std::pair<boxlike::Rational, boxlike::Rational> singular_values() const {
        using boxlike::Rational;
        const Rational p = diagonal() ? boxlike::abs(xx) : boxlike::abs(xy);
        const Rational q = diagonal() ? boxlike::abs(yy) : boxlike::abs(yx);
        return p >= q ? std::make_pair(p, q) : std::make_pair(q, p);
    }
};

// Visits every word of length k in lexicographic order.
template <typename F>
void for_each_word(std::size_t alphabet, int k, F&& f) {
    std::vector<std::size_t> word(static_cast<std::size_t>(k), 0);
    while (true) {
        f(word);
        int pos = k - 1;
        while (pos >= 0 && word[pos] == alphabet - 1) {
            word[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++word[pos];
    }
}

// The per-word projection exponent, restated from the four-case definition.
inline double oracle_selector(boxlike::MapClass cls, double log_base, double log_height, double s1,
                              double s2) {
    if (cls == boxlike::MapClass::A) return log_base >= log_height ? s1 : s2;
    return log_base >= log_height ? s2 : s1;
}

// log Ψ_k^s by summing over all m^k words.
inline double brute_psi_sum_log(const boxlike::BoxLikeIFS& ifs, int k, double s, double s1,
                                double s2) {
    long double acc = 0.0L;
    for_each_word(ifs.size(), k, [&](const std::vector<std::size_t>& word) {
        boxlike::SizeState st;
        for (std::size_t letter : word) st = boxlike::extend_size(st, letter, ifs);
        const double la1 = std::max(st.log_base, st.log_height);
        const double la2 = std::min(st.log_base, st.log_height);
        const double sel = oracle_selector(st.cls, st.log_base, st.log_height, s1, s2);
        acc += std::exp(static_cast<long double>(sel * la1 + (s - sel) * la2));
    });
    return static_cast<double>(std::log(acc));
}

// log Φ_k^s (singular value function) by enumeration.
inline double brute_phi_sum_log(const boxlike::BoxLikeIFS& ifs, int k, double s) {
    long double acc = 0.0L;
    for_each_word(ifs.size(), k, [&](const std::vector<std::size_t>& word) {
        boxlike::SizeState st;
        for (std::size_t letter : word) st = boxlike::extend_size(st, letter, ifs);
        const double la1 = std::max(st.log_base, st.log_height);
        const double la2 = std::min(st.log_base, st.log_height);
        const double term = s <= 1.0 ? s * la1 : la1 + (s - 1.0) * la2;
        acc += std::exp(static_cast<long double>(term));
    });
    return static_cast<double>(std::log(acc));
}

// log ψ^s of a single word (for the multiplicativity checks).
inline double word_log_psi(const boxlike::BoxLikeIFS& ifs, const std::vector<std::size_t>& word,
                           double s, double s1, double s2) {
    boxlike::SizeState st;
    for (std::size_t letter : word) st = boxlike::extend_size(st, letter, ifs);
    const double la1 = std::max(st.log_base, st.log_height);
    const double la2 = std::min(st.log_base, st.log_height);
    const double sel = oracle_selector(st.cls, st.log_base, st.log_height, s1, s2);
    return sel * la1 + (s - sel) * la2;
}

}  // namespace testutil
