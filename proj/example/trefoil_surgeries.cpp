// Invariants of p/q surgery on the right-handed trefoil, and the verdict for
// each pair of slopes with the same p.

#include <iostream>
#include <numeric>
#include <vector>

#include "cosmetic/cosmetic.hpp"

int main() {
    using namespace cosmetic;
    const SeifertMatrix a({{-1, 1}, {0, -1}});
    const KnotRecord trefoil =
        KnotRecord::make("right_trefoil", a, std::nullopt, lspace_model(LSpaceForm({1})));

    std::cout << "Delta = " << trefoil.alexander.str() << ", Delta''(1) = " << trefoil.delta2() << "\n\n";
    for (std::int64_t p : {1, 5, 7}) {
        std::vector<Slope> slopes;
        for (std::int64_t q = 1; q <= 4; ++q)
            if (std::gcd(p, q) == 1) slopes.emplace_back(p, q);
        for (const auto& s : slopes) {
            std::cout << s.str() << ": lambda=" << to_string(casson_walker_surgered(trefoil.ambient(), trefoil.delta2(), s))
                      << " rank=" << hat_rank(*trefoil.hf, s) << "\n";
        }
        for (std::size_t i = 0; i < slopes.size(); ++i)
            for (std::size_t j = i + 1; j < slopes.size(); ++j)
                std::cout << "  " << slopes[i].str() << " vs " << slopes[j].str() << ": "
                          << to_string(distinguish(trefoil, slopes[i], slopes[j]).tag) << "\n";
    }
}
