#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cosmetic/polynomial.hpp"
#include "cosmetic/rational.hpp"

namespace cosmetic {

// Closed rational interval [lo, hi].
struct Interval {
    Rational lo;
    Rational hi;

    bool contains_zero() const { return lo <= 0 && hi >= 0; }

    friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend Interval operator*(const Interval& a, const Interval& b) {
        const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
        return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
    }
};

// The real subfield Q(cos(2*pi*r/m)) of the m-th cyclotomic field, embedded in R
// at the specific generator u0 = 2cos(2*pi*r/m). Elements are rational
// polynomials in u of degree below the minimal polynomial's. Signs are decided
// exactly: zero is recognised algebraically, and nonzero signs by shrinking an
// isolating interval around u0 until the element's interval enclosure excludes 0.
//
// The isolating interval is mutable working state of one instance; instances are
// cheap and meant to be function-local.
class RealCyclotomicField {
public:
    using Element = RatPoly;

    RealCyclotomicField(long r, long m) {
        if (m < 1 || r <= 0 || r >= m) throw std::invalid_argument("RealCyclotomicField: need 0 < r < m");
        const long g = std::gcd(r, m);
        order_ = m / g;
        residue_ = r / g;
        modulus_ = to_rational(min_poly_two_cos(order_));
        isolate_root();
    }

    long order() const { return order_; }
    long residue() const { return residue_; }
    long degree() const { return modulus_.degree(); }
    const RatPoly& modulus() const { return modulus_; }

    Element from_rational(const Rational& v) const { return RatPoly::constant(v); }
    // u = 2cos(2*pi*r/m).
    Element generator() const { return reduce(RatPoly::monomial(Rational(1), 1)); }

    Element reduce(const RatPoly& a) const { return divmod(a, modulus_).second; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
    bool is_zero(const Element& a) const { return a.is_zero(); }

    // Inverse via the extended Euclidean algorithm against the (irreducible) modulus.
    Element inv(const Element& a) const {
        if (a.is_zero()) throw std::domain_error("RealCyclotomicField: inverse of zero");
        RatPoly r0 = modulus_, r1 = a;
        RatPoly s0, s1 = RatPoly::constant(Rational(1));
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            RatPoly s = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        if (r0.degree() != 0) throw std::logic_error("RealCyclotomicField: modulus not irreducible");
        return reduce(RatPoly::constant(Rational(1) / r0.lead()) * s0);
    }

    // Sign of the element at u0; exact.
    int sign(const Element& a) {
        if (a.is_zero()) return 0;
        if (a.degree() == 0) return a.lead().sign();
        for (int iter = 0; iter < kMaxRefinements; ++iter) {
            const Interval e = enclose(a);
            if (e.lo > 0) return 1;
            if (e.hi < 0) return -1;
            refine();
        }
        throw std::runtime_error("RealCyclotomicField: sign refinement did not terminate");
    }

    Interval root_interval() const { return root_; }

    double approx(const Element& a) const {
        const double u = 2.0 * std::cos(2.0 * std::numbers::pi * residue_ / order_);
        double acc = 0.0;
        for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * u + static_cast<double>(a.c[i]);
        return acc;
    }

private:
    static constexpr int kMaxRefinements = 4096;

    Interval enclose(const Element& a) const {
        Interval acc{Rational(0), Rational(0)};
        for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * root_ + Interval{a.c[i], a.c[i]};
        return acc;
    }

    int modulus_sign_at(const Rational& x) const { return modulus_.eval(x).sign(); }

    // Pick [lo, hi] around the double approximation of u0, narrower than half the
    // gap to every other conjugate 2cos(2*pi*k/order), and confirm a sign change.
    void isolate_root() {
        if (modulus_.degree() == 1) {
            const Rational root = -modulus_.c[0] / modulus_.c[1];
            root_ = {root, root};
            return;
        }
        const double u0 = 2.0 * std::cos(2.0 * std::numbers::pi * residue_ / order_);
        double gap = 4.0;
        for (long k = 1; 2 * k <= order_; ++k) {
            if (std::gcd(k, order_) != 1) continue;
            const double other = 2.0 * std::cos(2.0 * std::numbers::pi * k / order_);
            const double d = std::abs(other - u0);
            if (k != residue_ && k != order_ - residue_) gap = std::min(gap, d);
        }
        const double half = gap / 4.0;
        root_ = {Rational(u0 - half), Rational(u0 + half)};
        const int slo = modulus_sign_at(root_.lo);
        const int shi = modulus_sign_at(root_.hi);
        if (slo == 0 || shi == 0 || slo == shi)
            throw std::runtime_error("RealCyclotomicField: failed to isolate 2cos(2*pi*r/m)");
    }

    void refine() {
        if (root_.lo == root_.hi) return;
        const Rational mid = (root_.lo + root_.hi) / 2;
        const int smid = modulus_sign_at(mid);
        if (smid == 0) {
            root_ = {mid, mid};
            return;
        }
        if (smid == modulus_sign_at(root_.lo))
            root_.lo = mid;
        else
            root_.hi = mid;
    }

    long order_ = 1;
    long residue_ = 0;
    RatPoly modulus_;
    Interval root_;
};

// Inertia (positive, negative, zero counts) of a symmetric matrix over an ordered
// field, by congruence: repeatedly eliminate a nonzero 1x1 diagonal pivot, or a
// 2x2 block [[0, b], [b, 0]] (one positive and one negative eigenvalue) when the
// whole remaining diagonal vanishes. Inertia is additive over Schur complements.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    int signature() const { return positive - negative; }
};

template <class Field>
Inertia symmetric_inertia(std::vector<std::vector<typename Field::Element>> s, Field& field) {
    using Element = typename Field::Element;
    Inertia out;
    std::vector<std::size_t> live(s.size());
    std::iota(live.begin(), live.end(), std::size_t{0});

    auto eliminate_1x1 = [&](std::size_t i) {
        const Element inv = field.inv(s[i][i]);
        for (std::size_t j : live) {
            if (j == i || field.is_zero(s[j][i])) continue;
            const Element f = field.mul(s[j][i], inv);
            for (std::size_t k : live) {
                if (k == i || field.is_zero(s[i][k])) continue;
                s[j][k] = field.sub(s[j][k], field.mul(f, s[i][k]));
            }
        }
        live.erase(std::find(live.begin(), live.end(), i));
    };

    // Schur complement of B = [[0, b], [b, 0]]: S' = S - C B^{-1} C^T with
    // B^{-1} = [[0, 1/b], [1/b, 0]].
    auto eliminate_2x2 = [&](std::size_t i, std::size_t j) {
        const Element inv_b = field.inv(s[i][j]);
        std::vector<std::size_t> rest;
        for (std::size_t k : live)
            if (k != i && k != j) rest.push_back(k);
        for (std::size_t a : rest) {
            for (std::size_t c : rest) {
                const Element t = field.add(field.mul(s[a][i], s[j][c]), field.mul(s[a][j], s[i][c]));
                if (field.is_zero(t)) continue;
                s[a][c] = field.sub(s[a][c], field.mul(t, inv_b));
            }
        }
        live = std::move(rest);
    };

    while (!live.empty()) {
        bool done = false;
        for (std::size_t i : live) {
            if (field.is_zero(s[i][i])) continue;
            const int sg = field.sign(s[i][i]);
            (sg > 0 ? out.positive : out.negative) += 1;
            eliminate_1x1(i);
            done = true;
            break;
        }
        if (done) continue;
        for (std::size_t a = 0; a < live.size() && !done; ++a) {
            for (std::size_t b = a + 1; b < live.size() && !done; ++b) {
                if (field.is_zero(s[live[a]][live[b]])) continue;
                out.positive += 1;
                out.negative += 1;
                eliminate_2x2(live[a], live[b]);
                done = true;
            }
        }
        if (done) continue;
        out.zero += static_cast<int>(live.size());
        break;
    }
    return out;
}

}  // namespace cosmetic
