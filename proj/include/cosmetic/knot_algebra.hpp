#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cosmetic/polynomial.hpp"
#include "cosmetic/rational.hpp"
#include "cosmetic/real_cyclotomic.hpp"

namespace cosmetic {

namespace detail {

// Bareiss fraction-free determinant.
inline Integer bareiss_det(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Integer(1);
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Integer(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace detail

// Square integer matrix of a Seifert pairing. The 0x0 matrix is the unknot.
class SeifertMatrix {
public:
    SeifertMatrix() = default;

    // Validates squareness and det(A - A^T) = +-1 (which forces even size).
    explicit SeifertMatrix(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
        const std::size_t n = rows_.size();
        for (const auto& row : rows_)
            if (row.size() != n) throw std::invalid_argument("Seifert matrix must be square");
        std::vector<std::vector<Integer>> skew(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) skew[i][j] = Integer(rows_[i][j]) - Integer(rows_[j][i]);
        const Integer d = detail::bareiss_det(std::move(skew));
        if (d != 1 && d != -1)
            throw std::invalid_argument("Seifert matrix must satisfy det(A - A^T) = +-1, got " + d.str());
    }

    std::size_t size() const { return rows_.size(); }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

    // Seifert matrix of the mirror image: -A^T.
    SeifertMatrix mirror() const {
        const std::size_t n = size();
        std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i][j] = -rows_[j][i];
        SeifertMatrix m;
        m.rows_ = std::move(out);
        return m;
    }

    friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

private:
    std::vector<std::vector<std::int64_t>> rows_;
};

// Symmetric Laurent polynomial a_0 + sum_{j>=1} a_j (T^j + T^-j), normalized so
// that its value at T = 1 is 1.
class SymLaurentPoly {
public:
    SymLaurentPoly() : a_{1} {}

    // a[0] is the constant term, a[j] multiplies T^j + T^-j.
    explicit SymLaurentPoly(std::vector<std::int64_t> a) : a_(std::move(a)) {
        while (a_.size() > 1 && a_.back() == 0) a_.pop_back();
        if (a_.empty()) throw std::invalid_argument("Alexander polynomial needs a constant term");
        std::int64_t at_one = a_[0];
        for (std::size_t j = 1; j < a_.size(); ++j) at_one += 2 * a_[j];
        if (at_one != 1) throw std::invalid_argument("Alexander polynomial must evaluate to 1 at T = 1");
    }

    std::size_t degree() const { return a_.size() - 1; }
    std::int64_t coeff(std::size_t j) const { return j < a_.size() ? a_[j] : 0; }
    const std::vector<std::int64_t>& coeffs() const { return a_; }
    bool is_one() const { return a_.size() == 1; }

    // T^g * Delta(T), an ordinary integer polynomial of degree 2g.
    IntPoly shifted() const {
        const std::size_t g = degree();
        std::vector<Integer> c(2 * g + 1, Integer(0));
        c[g] = a_[0];
        for (std::size_t j = 1; j <= g; ++j) c[g + j] = c[g - j] = a_[j];
        return IntPoly(std::move(c));
    }

    // Descending powers, e.g. "T - 1 + T^-1".
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        auto term = [&](std::int64_t coef, long power) {
            if (coef == 0) return;
            const std::int64_t mag = coef < 0 ? -coef : coef;
            if (first)
                os << (coef < 0 ? "-" : "");
            else
                os << (coef < 0 ? " - " : " + ");
            first = false;
            if (power == 0) {
                os << mag;
                return;
            }
            if (mag != 1) os << mag << "*";
            os << "T";
            if (power != 1) os << "^" << power;
        };
        const long g = static_cast<long>(degree());
        for (long j = g; j >= 1; --j) term(a_[j], j);
        term(a_[0], 0);
        for (long j = 1; j <= g; ++j) term(a_[j], -j);
        return os.str();
    }

    friend bool operator==(const SymLaurentPoly&, const SymLaurentPoly&) = default;

private:
    std::vector<std::int64_t> a_;
};

// det(A - T A^T) as an integer polynomial: exact determinants at T = 0..n and
// Newton interpolation.
inline IntPoly seifert_determinant_poly(const SeifertMatrix& a) {
    const std::size_t n = a.size();
    std::vector<Rational> xs, ys;
    for (std::size_t t = 0; t <= n; ++t) {
        std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = Integer(a(i, j)) - Integer(static_cast<std::int64_t>(t)) * a(j, i);
        xs.emplace_back(static_cast<long>(t));
        ys.emplace_back(detail::bareiss_det(std::move(m)));
    }
    // Divided differences, then expand the Newton form.
    std::vector<Rational> coef = ys;
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t i = n; i >= level; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
    RatPoly acc = RatPoly::constant(coef[n]);
    for (std::size_t i = n; i-- > 0;)
        acc = acc * RatPoly({-xs[i], Rational(1)}) + RatPoly::constant(coef[i]);
    std::vector<Integer> out;
    for (const auto& c : acc.c) {
        if (!is_integer(c)) throw std::logic_error("Alexander interpolation produced a non-integer");
        out.push_back(numerator_of(c));
    }
    return IntPoly(std::move(out));
}

// Normalized Alexander polynomial: det(A - T A^T) times the unique +-T^k making
// it symmetric with value 1 at T = 1.
inline SymLaurentPoly alexander_from_seifert(const SeifertMatrix& a) {
    if (a.size() == 0) return SymLaurentPoly();
    const IntPoly p = seifert_determinant_poly(a);
    if (p.is_zero()) throw std::invalid_argument("det(A - T A^T) vanishes identically");
    std::size_t lo = 0;
    while (p.c[lo] == 0) ++lo;
    const std::size_t hi = p.c.size() - 1;
    if ((lo + hi) % 2 != 0) throw std::invalid_argument("det(A - T A^T) is not symmetric up to a unit");
    const std::size_t mid = (lo + hi) / 2;
    Integer at_one = 0;
    for (const auto& c : p.c) at_one += c;
    const int sg = at_one == 1 ? 1 : (at_one == -1 ? -1 : 0);
    if (sg == 0) throw std::invalid_argument("det(A - A^T) must be +-1");
    std::vector<std::int64_t> coeffs;
    for (std::size_t j = 0; mid + j <= hi; ++j) {
        if (p.c[mid + j] != p.c[mid - j]) throw std::invalid_argument("det(A - T A^T) is not symmetric");
        coeffs.push_back(sg * to_int64(p.c[mid + j]));
    }
    return SymLaurentPoly(std::move(coeffs));
}

// Delta''(1) = 2 sum_j a_j j^2, since (T^j + T^-j)'' at 1 is 2j^2.
inline std::int64_t delta2_at_one(const SymLaurentPoly& delta) {
    std::int64_t acc = 0;
    for (std::size_t j = 1; j <= delta.degree(); ++j) acc += delta.coeff(j) * static_cast<std::int64_t>(j * j);
    return 2 * acc;
}

// Raised when the signature is requested at a root of the Alexander polynomial.
class SingularValueError : public std::domain_error {
public:
    SingularValueError(long r, long m)
        : std::domain_error("Alexander polynomial vanishes at exp(2*pi*i*" + std::to_string(r) + "/" +
                            std::to_string(m) + ")"),
          r_(r), m_(m) {}
    long r() const { return r_; }
    long m() const { return m_; }

private:
    long r_;
    long m_;
};

// Exact test of Delta(exp(2*pi*i*r/m)) = 0: the primitive root of order
// m/gcd(r,m) is a root iff that cyclotomic polynomial divides T^g Delta(T).
inline bool alexander_vanishes_at(const SymLaurentPoly& delta, long r, long m) {
    const long order = m / std::gcd(r, m);
    return divmod_monic(delta.shifted(), cyclotomic(order)).second.is_zero();
}

// Tristram-Levine signature of (1 - conj(xi)) A + (1 - xi) A^T at xi = exp(2*pi*i*r/m).
//
// Writing xi = c + i s, the Hermitian matrix is R + iI with R = (1-c)(A+A^T),
// I = s(A-A^T). Its realification [[R, -I], [I, R]] has twice the signature.
// For xi != -1, congruence by diag(1, 1/s) and scaling by 1 + c > 0 give
//   [[(1-c^2)(A+A^T), -(1+c)(A-A^T)], [(1+c)(A-A^T), A+A^T]],
// whose entries lie in Z[c], so the inertia is computed exactly over Q(c).
inline int tl_signature(const SeifertMatrix& a, long r, long m) {
    if (!(0 < r && r < m)) throw std::invalid_argument("tl_signature needs 0 < r < m");
    const std::size_t n = a.size();
    if (n == 0) return 0;
    if (alexander_vanishes_at(alexander_from_seifert(a), r, m)) throw SingularValueError(r, m);

    RealCyclotomicField field(r, m);
    using Element = RealCyclotomicField::Element;
    auto sym = [&](std::size_t i, std::size_t j) { return Rational(a(i, j) + a(j, i)); };
    auto skew = [&](std::size_t i, std::size_t j) { return Rational(a(i, j) - a(j, i)); };

    if (field.order() == 2) {
        std::vector<std::vector<Element>> s(n, std::vector<Element>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s[i][j] = field.from_rational(2 * sym(i, j));
        const Inertia in = symmetric_inertia(std::move(s), field);
        if (in.zero != 0) throw SingularValueError(r, m);
        return in.signature();
    }

    const Element c = field.mul(field.generator(), field.from_rational(Rational(1, 2)));
    const Element one = field.from_rational(Rational(1));
    const Element one_minus_c2 = field.sub(one, field.mul(c, c));
    const Element one_plus_c = field.add(one, c);
    std::vector<std::vector<Element>> s(2 * n, std::vector<Element>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            s[i][j] = field.mul(one_minus_c2, field.from_rational(sym(i, j)));
            s[i][n + j] = field.mul(one_plus_c, field.from_rational(-skew(i, j)));
            s[n + i][j] = field.mul(one_plus_c, field.from_rational(skew(i, j)));
            s[n + i][n + j] = field.from_rational(sym(i, j));
        }
    }
    const Inertia in = symmetric_inertia(std::move(s), field);
    if (in.zero != 0) throw SingularValueError(r, m);
    if (in.signature() % 2 != 0) throw std::logic_error("realified signature must be even");
    return in.signature() / 2;
}

// sigma(K, m) = sum_{r=1}^{m-1} sigma_K(exp(2*pi*i*r/m)).
inline int sigma_total(const SeifertMatrix& a, long m) {
    if (m < 1) throw std::invalid_argument("sigma_total needs m >= 1");
    int acc = 0;
    for (long r = 1; r < m; ++r) acc += tl_signature(a, r, m);
    return acc;
}

// Exponents 0 < n_1 < ... < n_k of an Alexander polynomial of the form
// (-1)^k + sum_j (-1)^{k-j} (T^{n_j} + T^{-n_j}). Empty means Delta = 1.
struct LSpaceForm {
    std::vector<std::int64_t> exponents;

    LSpaceForm() = default;
    explicit LSpaceForm(std::vector<std::int64_t> n) : exponents(std::move(n)) {
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] <= 0) throw std::invalid_argument("L-space form exponents must be positive");
            if (i > 0 && exponents[i] <= exponents[i - 1])
                throw std::invalid_argument("L-space form exponents must strictly increase");
        }
    }

    std::size_t k() const { return exponents.size(); }
    std::int64_t top() const { return exponents.empty() ? 0 : exponents.back(); }

    SymLaurentPoly polynomial() const {
        std::vector<std::int64_t> a(static_cast<std::size_t>(top()) + 1, 0);
        const std::size_t kk = k();
        a[0] = kk % 2 == 0 ? 1 : -1;
        for (std::size_t j = 1; j <= kk; ++j) a[static_cast<std::size_t>(exponents[j - 1])] = (kk - j) % 2 == 0 ? 1 : -1;
        return SymLaurentPoly(std::move(a));
    }

    friend bool operator==(const LSpaceForm&, const LSpaceForm&) = default;
};

// Empty optional: Delta is not of L-space form, so the knot has no L-space surgery.
inline std::optional<LSpaceForm> parse_lspace_form(const SymLaurentPoly& delta) {
    std::vector<std::int64_t> n;
    for (std::size_t j = 1; j <= delta.degree(); ++j)
        if (delta.coeff(j) != 0) n.push_back(static_cast<std::int64_t>(j));
    const std::size_t k = n.size();
    auto expected = [](std::size_t e) { return e % 2 == 0 ? std::int64_t{1} : std::int64_t{-1}; };
    if (delta.coeff(0) != expected(k)) return std::nullopt;
    for (std::size_t j = 1; j <= k; ++j)
        if (delta.coeff(static_cast<std::size_t>(n[j - 1])) != expected(k - j)) return std::nullopt;
    return LSpaceForm(std::move(n));
}

// 2 sum_j (-1)^{k-j} n_j^2.
inline std::int64_t delta2_from_form(const LSpaceForm& f) {
    std::int64_t acc = 0;
    const std::size_t k = f.k();
    for (std::size_t j = 1; j <= k; ++j) {
        const std::int64_t sq = f.exponents[j - 1] * f.exponents[j - 1];
        acc += (k - j) % 2 == 0 ? sq : -sq;
    }
    return 2 * acc;
}

}  // namespace cosmetic
