#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "cosmetic/rational.hpp"

namespace cosmetic {

// Sawtooth ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
inline Rational sawtooth(const Rational& x) {
    if (is_integer(x)) return Rational(0);
    return x - Rational(floor_of(x)) - Rational(1, 2);
}

// s(q, p) = sign(p) * sum_{k=1}^{|p|-1} ((k/p)) ((kq/p)).
//
// Summed exactly over the common denominator 4p^2: for 0 < k < |p|,
// ((k/|p|)) = (2k - |p|) / (2|p|), and ((kq/|p|)) = (2r - |p|) / (2|p|) with
// r = kq mod |p| (zero when r = 0). Replacing p by -p flips both sawtooth
// factors, so the sum only depends on |p| and sign(p) is applied at the end.
inline Rational dedekind_sum(std::int64_t q, std::int64_t p) {
    if (p == 0) throw std::invalid_argument("dedekind_sum: p must be nonzero");
    const __int128 n = p < 0 ? -static_cast<__int128>(p) : p;
    __int128 qr = q % static_cast<__int128>(n);
    if (qr < 0) qr += n;
    __int128 acc = 0;
    __int128 r = 0;
    for (__int128 k = 1; k < n; ++k) {
        r += qr;
        if (r >= n) r -= n;
        if (r != 0) acc += (2 * k - n) * (2 * r - n);
    }
    if (p < 0) acc = -acc;
    auto to_integer = [](__int128 v) {
        const bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
        Integer out = 0;
        Integer scale = 1;
        while (u != 0) {
            out += scale * static_cast<std::uint64_t>(u & 0xFFFFFFFFu);
            scale <<= 32;
            u >>= 32;
        }
        return neg ? Integer(-out) : out;
    };
    return Rational(to_integer(acc), to_integer(4 * n * n));
}

// L(p, q): p/q surgery on the unknot. L(p, q) and L(-p, -q) are the same space.
struct LensSpace {
    std::int64_t p;
    std::int64_t q;

    LensSpace(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
        if (p == 0) throw std::invalid_argument("lens space needs p != 0");
        if (std::gcd(p, q) != 1) throw std::invalid_argument("lens space needs gcd(p, q) = 1");
    }

    // Representative with p > 0.
    LensSpace normalized() const { return p > 0 ? *this : LensSpace(-p, -q); }
};

inline Rational lens_lambda(const LensSpace& lens) { return dedekind_sum(lens.q, lens.p); }

// Total Casson-Gordon invariant -4p s(q,p), evaluated on the p > 0 representative
// so that reversing orientation (q -> -q) negates it.
inline Rational lens_tau_cg(const LensSpace& lens) {
    const LensSpace l = lens.normalized();
    return Rational(-4 * l.p) * dedekind_sum(l.q, l.p);
}

// Orientation-preserving classification: |p| equal and, for the positive
// representatives, q2 = q1^{+1} or q1^{-1} mod p.
inline bool lens_op_homeomorphic(const LensSpace& a, const LensSpace& b) {
    const LensSpace x = a.normalized();
    const LensSpace y = b.normalized();
    if (x.p != y.p) return false;
    const std::int64_t p = x.p;
    auto mod = [p](std::int64_t v) { return ((v % p) + p) % p; };
    const std::int64_t q1 = mod(x.q);
    const std::int64_t q2 = mod(y.q);
    return q1 == q2 || mod(static_cast<std::int64_t>((static_cast<__int128>(q1) * q2) % p)) == mod(1);
}

}  // namespace cosmetic
