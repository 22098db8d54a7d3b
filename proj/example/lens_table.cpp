// Lens spaces L(p, q) for small p: Casson-Walker and Casson-Gordon invariants,
// grouped into orientation-preserving homeomorphism classes.

#include <iostream>
#include <numeric>
#include <vector>

#include "cosmetic/dedekind.hpp"

int main(int argc, char** argv) {
    using namespace cosmetic;
    const std::int64_t p_max = argc > 1 ? std::stoll(argv[1]) : 12;
    for (std::int64_t p = 2; p <= p_max; ++p) {
        std::vector<bool> done(static_cast<std::size_t>(p), false);
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1 || done[static_cast<std::size_t>(q)]) continue;
            std::cout << "L(" << p << ",q) for q in {";
            bool first = true;
            for (std::int64_t r = q; r < p; ++r) {
                if (std::gcd(p, r) != 1 || !lens_op_homeomorphic({p, q}, {p, r})) continue;
                done[static_cast<std::size_t>(r)] = true;
                std::cout << (first ? "" : ",") << r;
                first = false;
            }
            const LensSpace l(p, q);
            std::cout << "}: lambda=" << to_string(lens_lambda(l)) << " tau=" << to_string(lens_tau_cg(l)) << "\n";
        }
    }
}
