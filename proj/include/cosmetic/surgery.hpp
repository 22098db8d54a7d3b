#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cosmetic/dedekind.hpp"
#include "cosmetic/rational.hpp"

namespace cosmetic {

// Reduced surgery slope p/q with q >= 0; 1/0 is the trivial (infinity) surgery.
class Slope {
public:
    Slope(std::int64_t p, std::int64_t q) {
        if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0 is undefined");
        const std::int64_t g = std::gcd(p, q);
        p /= g;
        q /= g;
        if (q < 0 || (q == 0 && p < 0)) {
            p = -p;
            q = -q;
        }
        p_ = p;
        q_ = q;
    }

    static Slope infinity() { return Slope(1, 0); }

    // "p/q", "p", or "inf".
    static Slope parse(const std::string& text) {
        if (text == "inf" || text == "infinity") return infinity();
        try {
            std::size_t used = 0;
            const auto slash = text.find('/');
            const std::string ps = text.substr(0, slash);
            const std::int64_t p = std::stoll(ps, &used);
            if (used != ps.size()) throw std::invalid_argument("trailing characters");
            if (slash == std::string::npos) return Slope(p, 1);
            const std::string qs = text.substr(slash + 1);
            const std::int64_t q = std::stoll(qs, &used);
            if (used != qs.size()) throw std::invalid_argument("trailing characters");
            return Slope(p, q);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed slope '" + text + "' (expected p/q or inf)");
        }
    }

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    bool is_infinite() const { return q_ == 0; }
    // Sign as a rational number; 0 for infinity.
    int sign() const { return q_ == 0 ? 0 : (p_ > 0 ? 1 : (p_ < 0 ? -1 : 0)); }
    Slope negated() const { return Slope(-p_, q_); }
    Rational value() const {
        if (is_infinite()) throw std::domain_error("infinite slope has no rational value");
        return make_rational(p_, q_);
    }
    std::string str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

    friend bool operator==(const Slope&, const Slope&) = default;

private:
    std::int64_t p_ = 1;
    std::int64_t q_ = 0;
};

// Class mu_coeff * x + lambda_coeff * y on the peripheral torus, <x, y> = 1.
struct PeripheralClass {
    std::int64_t mu_coeff;
    std::int64_t lambda_coeff;

    bool primitive() const { return std::gcd(mu_coeff, lambda_coeff) == 1; }
};

// <a, b> = a1 b2 - a2 b1.
inline std::int64_t intersection(const PeripheralClass& a, const PeripheralClass& b) {
    return a.mu_coeff * b.lambda_coeff - a.lambda_coeff * b.mu_coeff;
}

// Longitude l = d y.
struct LongitudeData {
    std::int64_t d = 1;

    explicit LongitudeData(std::int64_t d_ = 1) : d(d_) {
        if (d < 1) throw std::invalid_argument("longitude multiplicity d must be >= 1");
    }
    PeripheralClass as_class() const { return {0, d}; }
};

// Ambient integral homology L-space, identified by its Casson-Walker invariant.
struct AmbientData {
    Rational lambda_y{0};
    std::string name{"S3"};
};

// tau(a, b; l) = -s(<x,a>, <y,a>) + s(<x,b>, <y,b>) + (d^2 - 1)/12 * <a,b> / (<a,l> <b,l>).
inline Rational walker_correction(const PeripheralClass& a, const PeripheralClass& b, const LongitudeData& l) {
    if (!a.primitive() || !b.primitive()) throw std::invalid_argument("surgery classes must be primitive");
    const PeripheralClass x{1, 0};
    const PeripheralClass y{0, 1};
    const PeripheralClass lc = l.as_class();
    const std::int64_t al = intersection(a, lc);
    const std::int64_t bl = intersection(b, lc);
    if (al == 0 || bl == 0) throw std::invalid_argument("surgery classes must pair nontrivially with the longitude");
    const Rational ab_ratio = Rational(intersection(a, b)) / (Rational(al) * Rational(bl));
    return -dedekind_sum(intersection(x, a), intersection(y, a)) + dedekind_sum(intersection(x, b), intersection(y, b)) +
           Rational(l.d * l.d - 1, 12) * ab_ratio;
}

// lambda(K_a) = lambda(K_b) + tau(a, b; l) + <a,b> / (<a,l> <b,l>) * Delta''(1).
inline Rational walker_general(const Rational& lambda_at_b, std::int64_t delta2, const PeripheralClass& a,
                               const PeripheralClass& b, const LongitudeData& l) {
    const Rational correction = walker_correction(a, b, l);
    const PeripheralClass lc = l.as_class();
    const Rational ab_ratio =
        Rational(intersection(a, b)) / (Rational(intersection(a, lc)) * Rational(intersection(b, lc)));
    return lambda_at_b + correction + ab_ratio * delta2;
}

// lambda(Y_{p/q}(K)) = lambda(Y) + s(q, p) - (q/p) Delta''(1), for null-homologous K.
inline Rational casson_walker_surgered(const AmbientData& y, std::int64_t delta2, const Slope& s) {
    if (s.p() == 0) throw std::invalid_argument("0-surgery is not a rational homology sphere");
    return y.lambda_y + dedekind_sum(s.q(), s.p()) - make_rational(s.q(), s.p()) * delta2;
}

// tau(Y_{p/q}(K)) = tau(L(p,q)) - sigma(K, |p|), with the lens value taken
// orientation-correctly for p < 0.
inline Rational casson_gordon_surgered(std::int64_t sigma_p, const Slope& s) {
    if (s.p() == 0) throw std::invalid_argument("0-surgery is not a rational homology sphere");
    return lens_tau_cg(LensSpace(s.p(), s.q())) - Rational(sigma_p);
}

}  // namespace cosmetic
