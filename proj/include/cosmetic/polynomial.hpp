#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cosmetic/rational.hpp"

namespace cosmetic {

// Dense univariate polynomial, coefficient i multiplies x^i. The zero
// polynomial is the empty vector; trailing zeros are always trimmed.
template <class Coeff>
struct Poly {
    std::vector<Coeff> c;

    Poly() = default;
    explicit Poly(std::vector<Coeff> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly constant(const Coeff& v) { return Poly(std::vector<Coeff>{v}); }
    static Poly monomial(const Coeff& v, std::size_t degree) {
        std::vector<Coeff> out(degree + 1, Coeff(0));
        out[degree] = v;
        return Poly(std::move(out));
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Coeff& lead() const { return c.back(); }
    Coeff at(std::size_t i) const { return i < c.size() ? c[i] : Coeff(0); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Coeff> out(std::max(a.c.size(), b.c.size()), Coeff(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<Coeff> out = a.c;
        for (auto& v : out) v = -v;
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Coeff> out(a.c.size() + b.c.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
        }
        return Poly(std::move(out));
    }
    friend Poly operator*(const Coeff& k, const Poly& a) { return Poly::constant(k) * a; }

    template <class X>
    X eval(const X& x) const {
        X acc(0);
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + X(c[i]);
        return acc;
    }
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

// Division by a monic integer polynomial stays in Z[x].
inline std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& m) {
    if (m.is_zero() || m.lead() != 1) throw std::invalid_argument("divmod_monic: divisor must be monic");
    std::vector<Integer> r = a.c;
    const std::size_t dm = m.c.size() - 1;
    if (r.size() <= dm) return {IntPoly(), a};
    std::vector<Integer> q(r.size() - dm, Integer(0));
    for (std::size_t i = r.size(); i-- > dm;) {
        const Integer coef = r[i];
        if (coef == 0) continue;
        q[i - dm] = coef;
        for (std::size_t j = 0; j <= dm; ++j) r[i - dm + j] -= coef * m.c[j];
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& m) {
    if (m.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.c;
    const std::size_t dm = m.c.size() - 1;
    if (r.size() <= dm) return {RatPoly(), a};
    std::vector<Rational> q(r.size() - dm, Rational(0));
    for (std::size_t i = r.size(); i-- > dm;) {
        if (r[i] == 0) continue;
        const Rational coef = r[i] / m.lead();
        q[i - dm] = coef;
        for (std::size_t j = 0; j <= dm; ++j) r[i - dm + j] -= coef * m.c[j];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

inline RatPoly to_rational(const IntPoly& a) {
    std::vector<Rational> out;
    out.reserve(a.c.size());
    for (const auto& v : a.c) out.emplace_back(v);
    return RatPoly(std::move(out));
}

// n-th cyclotomic polynomial, by dividing x^n - 1 by Phi_d for the proper divisors d.
inline IntPoly cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
    IntPoly acc = IntPoly::monomial(Integer(1), static_cast<std::size_t>(n)) - IntPoly::constant(Integer(1));
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto [q, r] = divmod_monic(acc, cyclotomic(d));
        if (!r.is_zero()) throw std::logic_error("cyclotomic: inexact division");
        acc = q;
    }
    return acc;
}

// Minimal polynomial of 2cos(2*pi/n) over Q.
//
// For n >= 3, Phi_n is palindromic of even degree 2d and x^{-d} Phi_n(x) is a
// polynomial in y = x + 1/x; x^j + x^{-j} = V_j(y) with V_0 = 2, V_1 = y,
// V_{j+1} = y V_j - V_{j-1}.
inline IntPoly min_poly_two_cos(long n) {
    if (n < 1) throw std::invalid_argument("min_poly_two_cos: n must be positive");
    if (n == 1) return IntPoly({Integer(-2), Integer(1)});
    if (n == 2) return IntPoly({Integer(2), Integer(1)});
    const IntPoly phi = cyclotomic(n);
    const std::size_t d = static_cast<std::size_t>(phi.degree()) / 2;
    const IntPoly y = IntPoly::monomial(Integer(1), 1);
    IntPoly v_prev = IntPoly::constant(Integer(2));
    IntPoly v_cur = y;
    IntPoly out = IntPoly::constant(phi.at(d));
    for (std::size_t j = 1; j <= d; ++j) {
        out = out + IntPoly::constant(phi.at(d + j)) * v_cur;
        IntPoly next = y * v_cur - v_prev;
        v_prev = std::move(v_cur);
        v_cur = std::move(next);
    }
    return out;
}

}  // namespace cosmetic
