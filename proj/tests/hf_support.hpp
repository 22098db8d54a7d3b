#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "cosmetic/hf_cone.hpp"

namespace testing_support {

// Random valid model with genus <= max_g: odd symmetric ranks a_s <= max_rank
// with a_g = 1, a nu threshold, and the tau bit where it is free.
inline cosmetic::KnotFloerData random_floer_data(std::mt19937& rng, int max_g, int max_rank = 5) {
    const int g = std::uniform_int_distribution<int>(0, max_g)(rng);
    if (g == 0) return cosmetic::KnotFloerData::unknot();
    const int nu = std::uniform_int_distribution<int>(-g + 1, g)(rng);
    int tau = nu >= 1 ? nu : nu - 1;
    if (nu == 0 && std::uniform_int_distribution<int>(0, 1)(rng) == 0) tau = 0;
    std::uniform_int_distribution<int> half(0, (max_rank - 1) / 2);
    std::vector<std::int64_t> a(static_cast<std::size_t>(2 * g + 1), 1);
    for (int s = 0; s < g; ++s) {
        const bool independent = tau == nu - 1 && s <= -nu;
        std::int64_t r = 2 * half(rng) + 1;
        if (independent) r = std::max<std::int64_t>(r, 3);
        a[static_cast<std::size_t>(g + s)] = a[static_cast<std::size_t>(g - s)] = r;
    }
    return cosmetic::KnotFloerData(g, std::move(a), nu, tau);
}

// Every valid model with genus <= max_g and ranks a_s <= max_rank.
inline std::vector<cosmetic::KnotFloerData> all_floer_data(int max_g, int max_rank) {
    std::vector<cosmetic::KnotFloerData> out{cosmetic::KnotFloerData::unknot()};
    for (int g = 1; g <= max_g; ++g) {
        const int choices = (max_rank + 1) / 2;
        int combos = 1;
        for (int s = 0; s < g; ++s) combos *= choices;
        for (int code = 0; code < combos; ++code) {
            std::vector<std::int64_t> a(static_cast<std::size_t>(2 * g + 1), 1);
            for (int s = 0, c = code; s < g; ++s, c /= choices)
                a[static_cast<std::size_t>(g + s)] = a[static_cast<std::size_t>(g - s)] = 2 * (c % choices) + 1;
            for (int nu = -g + 1; nu <= g; ++nu) {
                std::vector<int> taus = nu >= 1 ? std::vector<int>{nu} : std::vector<int>{nu - 1};
                if (nu == 0) taus.push_back(0);
                for (int tau : taus) {
                    bool ok = true;
                    for (int s = 0; s <= -nu && s < g; ++s)
                        if (tau == nu - 1 && a[static_cast<std::size_t>(g + s)] < 3) ok = false;
                    if (ok) out.emplace_back(g, a, nu, tau);
                }
            }
        }
    }
    return out;
}

// Every L-space form with top exponent <= max_top.
inline std::vector<cosmetic::LSpaceForm> all_lspace_forms(int max_top) {
    std::vector<cosmetic::LSpaceForm> out;
    for (unsigned mask = 1; mask < (1u << max_top); ++mask) {
        std::vector<std::int64_t> n;
        for (int b = 0; b < max_top; ++b)
            if (mask & (1u << b)) n.push_back(b + 1);
        out.emplace_back(std::move(n));
    }
    return out;
}

}  // namespace testing_support
