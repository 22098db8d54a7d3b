#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosmetic/gf2.hpp"
#include "cosmetic/knot_algebra.hpp"
#include "cosmetic/surgery.hpp"

namespace cosmetic {

// Homology-level knot Floer data for the hat surgery formula.
//
// For each Alexander grading s the model records a_s = dim H(A_s) and the
// induced maps v_s, h_s : H(A_s) -> H(B) = F. Maps are determined by
// nu = min{s : v_s != 0}: v_s != 0 iff s >= nu, and by flip symmetry
// h_s != 0 iff s <= -nu. Where both are nonzero they are either the same
// functional or independent ones; tau in {nu, nu - 1} carries that bit:
//   nu >= 1  : tau = nu (v and h never both nonzero)
//   nu == 0  : tau = 0 (v_0 = h_0) or tau = -1 (independent at s = 0)
//   nu <= -1 : tau = nu - 1 (independent on |s| <= -nu)
// Outside |s| <= g every A_s has rank one.
class KnotFloerData {
public:
    // a holds a_{-g}, ..., a_g.
    KnotFloerData(int g, std::vector<std::int64_t> a, int nu, std::optional<int> tau = std::nullopt)
        : g_(g), a_(std::move(a)), nu_(nu) {
        if (g_ < 0) throw std::invalid_argument("hf data: g must be >= 0");
        if (a_.size() != static_cast<std::size_t>(2 * g_ + 1))
            throw std::invalid_argument("hf data: expected 2g+1 ranks a_{-g..g}");
        for (int s = -g_; s <= g_; ++s) {
            const std::int64_t r = rank(s);
            if (r < 1 || r % 2 == 0)
                throw std::invalid_argument("hf data: a_" + std::to_string(s) + " must be a positive odd integer");
            if (r != rank(-s)) throw std::invalid_argument("hf data: ranks must satisfy a_s = a_{-s}");
        }
        if (rank(g_) != 1) throw std::invalid_argument("hf data: a_g must be 1");
        if (nu_ < -g_ || nu_ > g_) throw std::invalid_argument("hf data: v_threshold must lie in [-g, g]");
        const int default_tau = nu_ >= 0 ? nu_ : nu_ - 1;
        tau_ = tau.value_or(default_tau);
        const bool ok = (nu_ >= 1 && tau_ == nu_) || (nu_ == 0 && (tau_ == 0 || tau_ == -1)) ||
                        (nu_ <= -1 && tau_ == nu_ - 1);
        if (!ok)
            throw std::invalid_argument("hf data: (v_threshold, tau) = (" + std::to_string(nu_) + ", " +
                                        std::to_string(tau_) + ") is outside the supported model");
        for (int s = -g_; s <= g_; ++s)
            if (independent(s) && rank(s) < 3)
                throw std::invalid_argument("hf data: independent v/h at s = " + std::to_string(s) +
                                            " needs a_s >= 3");
    }

    // Unknot: g = 0, a_0 = 1, nu = 0.
    static KnotFloerData unknot() { return KnotFloerData(0, {1}, 0); }

    int g() const { return g_; }
    int nu() const { return nu_; }
    int tau() const { return tau_; }
    const std::vector<std::int64_t>& ranks() const { return a_; }

    std::int64_t rank(std::int64_t s) const {
        if (s < -g_ || s > g_) return 1;
        return a_[static_cast<std::size_t>(s + g_)];
    }
    bool v_nonzero(std::int64_t s) const { return s >= nu_; }
    bool h_nonzero(std::int64_t s) const { return s <= -nu_; }
    bool independent(std::int64_t s) const { return v_nonzero(s) && h_nonzero(s) && tau_ == nu_ - 1; }

    // dim of the image of (v_s, h_s) in F + F.
    int delta(std::int64_t s) const {
        const bool v = v_nonzero(s), h = h_nonzero(s);
        if (v && h) return independent(s) ? 2 : 1;
        return static_cast<int>(v) + static_cast<int>(h);
    }

    // Sum of (a_s - 1).
    std::int64_t excess() const {
        std::int64_t acc = 0;
        for (auto r : a_) acc += r - 1;
        return acc;
    }

    friend bool operator==(const KnotFloerData&, const KnotFloerData&) = default;

private:
    int g_;
    std::vector<std::int64_t> a_;
    int nu_;
    int tau_ = 0;
};

// min{s : v_s nonzero in homology}.
inline int nu_of(const KnotFloerData& data) {
    for (int s = -data.g() - 1; s <= data.g(); ++s)
        if (data.v_nonzero(s)) return s;
    throw std::logic_error("hf data: v_s vanishes for every s <= g");
}

// Mirror image m(K) in -Y. Large +N surgery on K is -(large -N surgery on m(K)),
// and the cone of the latter gives a_s(m) = a_s + 2 - 2 delta_s; applied twice,
// delta_s(m) = 2 - delta_s. The zero set of delta(m) (both maps vanish) is
// |s| < nu(m), and its 2-set (independent maps) is |s| <= -nu(m).
inline KnotFloerData mirror_of(const KnotFloerData& data) {
    const int g = data.g();
    std::vector<std::int64_t> a;
    int zero_reach = -1;  // max |s| with delta(m) = 0
    int two_reach = -1;   // max |s| with delta(m) = 2
    for (int s = -g; s <= g; ++s) {
        const int dm = 2 - data.delta(s);
        a.push_back(data.rank(s) + 2 - 2 * data.delta(s));
        if (dm == 0) zero_reach = std::max(zero_reach, s < 0 ? -s : s);
        if (dm == 2) two_reach = std::max(two_reach, s < 0 ? -s : s);
    }
    if (zero_reach >= 0) return KnotFloerData(g, std::move(a), zero_reach + 1, zero_reach + 1);
    if (two_reach >= 0) return KnotFloerData(g, std::move(a), -two_reach, -two_reach - 1);
    return KnotFloerData(g, std::move(a), 0, 0);
}

// Spin^c label i in [0, |p|).
struct SpincIndex {
    std::int64_t i;
};

// Homology-level matrix of D restricted to one Spin^c summand of a truncated
// window: columns are basis vectors of the H(A_t), rows are the H(B_t) = F.
struct ConeMatrix {
    std::vector<std::int64_t> a_labels;  // t of each column
    std::vector<std::int64_t> b_labels;  // t of each row
    BitMatrix d{0, 0};

    // dim ker + dim coker of D, the homology of the mapping cone.
    std::size_t homology_rank() const {
        const std::size_t r = d.rank();
        return (d.cols() - r) + (d.rows() - r);
    }
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t mod_pos(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace detail

// D(a_t) = v(a_t) in B_t + h(a_t) in B_{t+p}, with A_t = A_{floor(t/q)}, over
// t = i (mod p). Outside floor(t/q) in [-W, W], W = g + |p| + 1 + extra, one of
// v, h is an isomorphism and the other vanishes, so the discarded part is an
// acyclic sub/quotient complex: A_t is kept for t in [L, U] and B_t for t in [L + p, U].
inline ConeMatrix build_cone(const KnotFloerData& data, const Slope& slope, SpincIndex spinc, int extra = 0) {
    const std::int64_t p = slope.p();
    const std::int64_t q = slope.q();
    if (q <= 0) throw std::invalid_argument("build_cone needs q >= 1");
    if (p == 0) throw std::invalid_argument("build_cone needs p != 0");
    const std::int64_t abs_p = p < 0 ? -p : p;
    if (spinc.i < 0 || spinc.i >= abs_p) throw std::invalid_argument("Spin^c index must lie in [0, |p|)");

    const std::int64_t w = data.g() + abs_p + 1 + extra;
    const std::int64_t lo = -q * w;
    const std::int64_t hi = q * (w + 1) - 1;

    ConeMatrix cone;
    for (std::int64_t t = lo + p; t <= hi; ++t)
        if (detail::mod_pos(t - spinc.i, abs_p) == 0) cone.b_labels.push_back(t);
    struct Column {
        std::int64_t t;
        std::int64_t s;
        std::int64_t k;
    };
    std::vector<Column> cols;
    for (std::int64_t t = lo; t <= hi; ++t) {
        if (detail::mod_pos(t - spinc.i, abs_p) != 0) continue;
        const std::int64_t s = detail::floor_div(t, q);
        for (std::int64_t k = 0; k < data.rank(s); ++k) {
            cols.push_back({t, s, k});
            cone.a_labels.push_back(t);
        }
    }
    auto row_of = [&](std::int64_t t) {
        const auto it = std::lower_bound(cone.b_labels.begin(), cone.b_labels.end(), t);
        if (it == cone.b_labels.end() || *it != t) throw std::logic_error("cone: target B_t outside window");
        return static_cast<std::size_t>(it - cone.b_labels.begin());
    };
    cone.d = BitMatrix(cone.b_labels.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& col = cols[c];
        // v is the first coordinate functional; h is the same one, or the
        // second coordinate where the two maps are independent.
        if (data.v_nonzero(col.s) && col.k == 0) cone.d.flip(row_of(col.t), c);
        if (data.h_nonzero(col.s) && col.k == (data.independent(col.s) ? 1 : 0)) cone.d.flip(row_of(col.t + p), c);
    }
    return cone;
}

namespace detail {

inline std::int64_t cone_rank_window(const KnotFloerData& data, const Slope& slope, int extra) {
    const std::int64_t abs_p = slope.p() < 0 ? -slope.p() : slope.p();
    std::int64_t total = 0;
    for (std::int64_t i = 0; i < abs_p; ++i)
        total += static_cast<std::int64_t>(build_cone(data, slope, SpincIndex{i}, extra).homology_rank());
    return total;
}

}  // namespace detail

// Rank of HF-hat of the surgered manifold, by brute force on the cone.
inline std::int64_t cone_rank_oracle(const KnotFloerData& data, const Slope& slope) {
    const std::int64_t r = detail::cone_rank_window(data, slope, 0);
    if (r != detail::cone_rank_window(data, slope, 2))
        throw std::logic_error("cone rank changed when the truncation window grew");
    return r;
}

inline bool rank_normalized(const KnotFloerData& data) { return nu_of(data) >= nu_of(mirror_of(data)); }

// Closed form, valid when nu(K) >= nu(m(K)) and q >= 1:
//   nu > 0 or p > 0:  p + 2 max(0, (2nu - 1) q - p) + q sum_s (a_s - 1)
//   nu = 0:           |p| + q sum_s (a_s - 1)
inline std::int64_t rank_formula(const KnotFloerData& data, const Slope& slope) {
    const std::int64_t p = slope.p();
    const std::int64_t q = slope.q();
    if (q <= 0 || p == 0) throw std::invalid_argument("rank_formula needs p != 0 and q >= 1");
    if (!rank_normalized(data))
        throw std::invalid_argument("rank_formula needs nu(K) >= nu(m(K)); mirror the knot and negate the slope");
    const std::int64_t nu = nu_of(data);
    if (nu > 0 || p > 0) return p + 2 * std::max<std::int64_t>(0, (2 * nu - 1) * q - p) + q * data.excess();
    return (p < 0 ? -p : p) + q * data.excess();
}

// rank_formula after mirror normalization; 1/0 returns Y itself (rank one).
inline std::int64_t hat_rank(const KnotFloerData& data, const Slope& slope) {
    if (slope.is_infinite()) return 1;
    if (rank_normalized(data)) return rank_formula(data, slope);
    return rank_formula(mirror_of(data), slope.negated());
}

// Thin model of a knot with an L-space surgery: every A_s has rank one and nu = n_k.
inline KnotFloerData lspace_model(const LSpaceForm& form) {
    const int g = static_cast<int>(form.top());
    return KnotFloerData(g, std::vector<std::int64_t>(static_cast<std::size_t>(2 * g + 1), 1), g, g);
}

// dim of the image of (h_0, v_0) in F + F, for data with nu(K) = nu(m(K)) = 0.
inline int delta_dimension(const KnotFloerData& data) {
    if (nu_of(data) != 0 || nu_of(mirror_of(data)) != 0)
        throw std::invalid_argument("delta_dimension needs nu(K) = nu(m(K)) = 0");
    const auto a0 = static_cast<std::size_t>(data.rank(0));
    BitMatrix m(2, a0);
    if (data.v_nonzero(0)) m.set(0, 0);
    if (data.h_nonzero(0)) m.set(1, data.independent(0) ? 1 : 0);
    return static_cast<int>(m.rank());
}

}  // namespace cosmetic
