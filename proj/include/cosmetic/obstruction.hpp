#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "cosmetic/dedekind.hpp"
#include "cosmetic/hf_cone.hpp"
#include "cosmetic/knot_algebra.hpp"
#include "cosmetic/surgery.hpp"

namespace cosmetic {

// A knot in an integral homology L-space Y, as far as the invariants can see it.
struct KnotRecord {
    std::string name;
    std::optional<SeifertMatrix> seifert;
    SymLaurentPoly alexander;
    std::optional<KnotFloerData> hf;
    Rational lambda_ambient{0};
    std::optional<int> tau;
    bool nontrivial = true;

    // Fills the Alexander polynomial from the Seifert matrix when absent and
    // cross-checks the two when both are given. nontrivial defaults to Delta != 1.
    static KnotRecord make(std::string name, std::optional<SeifertMatrix> seifert,
                           std::optional<SymLaurentPoly> alexander, std::optional<KnotFloerData> hf = std::nullopt,
                           Rational lambda_ambient = Rational(0), std::optional<int> tau = std::nullopt,
                           std::optional<bool> nontrivial = std::nullopt) {
        if (!seifert && !alexander)
            throw std::invalid_argument("knot '" + name + "': needs a seifert_matrix or an alexander polynomial");
        KnotRecord k;
        k.name = std::move(name);
        if (seifert) {
            k.alexander = alexander_from_seifert(*seifert);
            if (alexander && !(*alexander == k.alexander))
                throw std::invalid_argument("knot '" + k.name + "': alexander " + alexander->str() +
                                            " disagrees with the Seifert matrix, which gives " + k.alexander.str());
        } else {
            k.alexander = *alexander;
        }
        k.seifert = std::move(seifert);
        if (hf && tau && hf->tau() != *tau)
            throw std::invalid_argument("knot '" + k.name + "': tau annotation disagrees with hf data");
        k.hf = std::move(hf);
        k.lambda_ambient = std::move(lambda_ambient);
        k.tau = tau;
        k.nontrivial = nontrivial.value_or(!k.alexander.is_one());
        return k;
    }

    AmbientData ambient() const { return AmbientData{lambda_ambient, "Y"}; }
    std::int64_t delta2() const { return delta2_at_one(alexander); }
};

// m(K) in -Y.
inline KnotRecord mirror(const KnotRecord& k) {
    KnotRecord m = k;
    m.name = k.name + "_mirror";
    if (k.seifert) m.seifert = k.seifert->mirror();
    if (k.hf) m.hf = mirror_of(*k.hf);
    m.lambda_ambient = -k.lambda_ambient;
    if (k.tau) m.tau = -*k.tau;
    return m;
}

enum class VerdictTag {
    DifferentHomology,
    DistinguishedByCassonGordon,
    DistinguishedByCassonWalker,
    DistinguishedByHFRank,
    UnknotCosmetic,
    Inconclusive,
};

inline constexpr std::array<VerdictTag, 6> kAllVerdictTags = {
    VerdictTag::DifferentHomology,     VerdictTag::DistinguishedByCassonGordon, VerdictTag::DistinguishedByCassonWalker,
    VerdictTag::DistinguishedByHFRank, VerdictTag::UnknotCosmetic,              VerdictTag::Inconclusive,
};

inline const char* to_string(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::DifferentHomology: return "DifferentHomology";
        case VerdictTag::DistinguishedByCassonGordon: return "DistinguishedByCassonGordon";
        case VerdictTag::DistinguishedByCassonWalker: return "DistinguishedByCassonWalker";
        case VerdictTag::DistinguishedByHFRank: return "DistinguishedByHFRank";
        case VerdictTag::UnknotCosmetic: return "UnknotCosmetic";
        case VerdictTag::Inconclusive: return "Inconclusive";
    }
    return "?";
}

// Witness values per tag:
//   DifferentHomology            |H_1| of each side
//   DistinguishedByCassonGordon  tau(L(p, q_i)); sigma(K, |p|) cancels
//   DistinguishedByCassonWalker  lambda(Y_{p/q_i}(K))
//   DistinguishedByHFRank        rank HF-hat(Y_{p/q_i}(K))
//   UnknotCosmetic, Inconclusive lambda(Y_{p/q_i}(K)), equal
struct Verdict {
    VerdictTag tag = VerdictTag::Inconclusive;
    Rational value1{0};
    Rational value2{0};
    // sigma(K, |p|), filled only on request and when a nonsingular Seifert matrix is available.
    std::optional<std::int64_t> sigma;
};

struct DistinguishOptions {
    bool with_sigma = false;
};

inline std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

// The cosmetic-surgery obstruction for two same-sign slopes. Steps, in order:
// first homology, total Casson-Gordon (knot-independent for equal p),
// Casson-Walker (fires whenever Delta''(1) != 0), HF-hat rank, and the unknot
// case, which is only claimed when the two lens spaces really are homeomorphic.
inline Verdict distinguish(const KnotRecord& k, const Slope& s1, const Slope& s2, DistinguishOptions opts = {}) {
    if (s1 == s2) throw std::invalid_argument("distinguish needs two distinct slopes");
    if ((!s1.is_infinite() && s1.p() == 0) || (!s2.is_infinite() && s2.p() == 0))
        throw std::invalid_argument("slope 0 is neither positive nor negative");
    if (s1.sign() * s2.sign() < 0) throw std::invalid_argument("slopes must have the same sign");

    Verdict out;
    const std::int64_t p1 = s1.p(), p2 = s2.p();
    if (abs64(p1) != abs64(p2)) {
        out.tag = VerdictTag::DifferentHomology;
        out.value1 = Rational(abs64(p1));
        out.value2 = Rational(abs64(p2));
        return out;
    }
    if (opts.with_sigma && k.seifert) {
        try {
            out.sigma = sigma_total(*k.seifert, static_cast<long>(abs64(p1)));
        } catch (const SingularValueError&) {
        }
    }

    if (dedekind_sum(s1.q(), p1) != dedekind_sum(s2.q(), p2)) {
        out.tag = VerdictTag::DistinguishedByCassonGordon;
        out.value1 = lens_tau_cg(LensSpace(p1, s1.q()));
        out.value2 = lens_tau_cg(LensSpace(p2, s2.q()));
        return out;
    }

    const std::int64_t d2 = k.delta2();
    out.value1 = casson_walker_surgered(k.ambient(), d2, s1);
    out.value2 = casson_walker_surgered(k.ambient(), d2, s2);
    if (d2 != 0) {
        out.tag = VerdictTag::DistinguishedByCassonWalker;
        return out;
    }

    std::optional<std::int64_t> rank1, rank2;
    if (k.hf) {
        rank1 = hat_rank(*k.hf, s1);
        rank2 = hat_rank(*k.hf, s2);
        if (*rank1 != *rank2) {
            out.tag = VerdictTag::DistinguishedByHFRank;
            out.value1 = Rational(*rank1);
            out.value2 = Rational(*rank2);
            return out;
        }
    }

    // Equal ranks |p| make K an L-space knot; with Delta = 1 its knot Floer
    // homology is that of the unknot.
    const bool lspace_surgery = rank1 && *rank1 == abs64(p1);
    const auto form = parse_lspace_form(k.alexander);
    const bool trivial = form && form->k() == 0 && (lspace_surgery || !k.nontrivial);
    if (trivial && lens_op_homeomorphic(LensSpace(p1, s1.q()), LensSpace(p2, s2.q())))
        out.tag = VerdictTag::UnknotCosmetic;
    else
        out.tag = VerdictTag::Inconclusive;
    return out;
}

struct SweepRow {
    std::string name;
    std::int64_t p;
    std::int64_t q1;  // 0 denotes the infinite slope
    std::int64_t q2;
    Verdict verdict;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    // Same-sign pairs with different |p|; DifferentHomology, not listed as rows.
    std::int64_t different_homology_pairs = 0;

    std::map<VerdictTag, std::int64_t> counts() const {
        std::map<VerdictTag, std::int64_t> c;
        for (auto tag : kAllVerdictTags) c[tag] = 0;
        for (const auto& row : rows) c[row.verdict.tag] += 1;
        return c;
    }
    std::int64_t count(VerdictTag tag) const { return counts().at(tag); }
};

// All same-sign slope pairs with a common p, |p| <= p_max, 0 <= q <= q_max
// (1/0 joins the p = +-1 families), sorted by (p, q1, q2).
inline SweepReport sweep(const KnotRecord& k, std::int64_t p_max, std::int64_t q_max, DistinguishOptions opts = {},
                         unsigned threads = 0) {
    if (p_max < 1 || q_max < 1) throw std::invalid_argument("sweep needs p_max, q_max >= 1");
    SweepReport report;
    std::vector<std::int64_t> family_sizes;
    for (std::int64_t sign : {-1, 1}) {
        for (std::int64_t abs_p = 1; abs_p <= p_max; ++abs_p) {
            const std::int64_t p = sign * abs_p;
            std::vector<std::int64_t> qs;
            if (abs_p == 1) qs.push_back(0);
            for (std::int64_t q = 1; q <= q_max; ++q)
                if (std::gcd(abs_p, q) == 1) qs.push_back(q);
            for (std::size_t i = 0; i < qs.size(); ++i)
                for (std::size_t j = i + 1; j < qs.size(); ++j) report.rows.push_back({k.name, p, qs[i], qs[j], {}});
            family_sizes.push_back(static_cast<std::int64_t>(qs.size()));
        }
        std::int64_t total = std::accumulate(family_sizes.begin(), family_sizes.end(), std::int64_t{0});
        std::int64_t same = 0;
        for (auto n : family_sizes) same += n * (n - 1) / 2;
        report.different_homology_pairs += total * (total - 1) / 2 - same;
        family_sizes.clear();
    }

    std::sort(report.rows.begin(), report.rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tie(a.p, a.q1, a.q2) < std::tie(b.p, b.q1, b.q2);
    });

    auto slope_of = [](std::int64_t p, std::int64_t q) { return q == 0 ? Slope::infinity() : Slope(p, q); };
    std::vector<std::exception_ptr> failures;
    std::mutex failures_mutex;
    auto work = [&](std::size_t begin, std::size_t stride) {
        try {
            for (std::size_t i = begin; i < report.rows.size(); i += stride) {
                auto& row = report.rows[i];
                row.verdict = distinguish(k, slope_of(row.p, row.q1), slope_of(row.p, row.q2), opts);
            }
        } catch (...) {
            std::lock_guard lock(failures_mutex);
            failures.push_back(std::current_exception());
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, report.rows.size())));
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& th : pool) th.join();
    }
    if (!failures.empty()) std::rethrow_exception(failures.front());
    return report;
}

}  // namespace cosmetic
