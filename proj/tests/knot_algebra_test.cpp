#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "cosmetic/knot_algebra.hpp"
#include "test_support.hpp"

using namespace cosmetic;
using testing_support::Matrix;

namespace {

const Matrix kRightTrefoil = {{-1, 1}, {0, -1}};
const Matrix kFigureEight = {{1, 1}, {0, -1}};
const Matrix kT25 = {{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}};

Matrix torus_2(std::size_t genus) {
    Matrix a(2 * genus, std::vector<std::int64_t>(2 * genus, 0));
    for (std::size_t i = 0; i < 2 * genus; ++i) {
        a[i][i] = -1;
        if (i + 1 < 2 * genus) a[i][i + 1] = 1;
    }
    return a;
}

// det(A - t A^T) by permutation expansion.
Rational leibniz_det(const Matrix& a, std::int64_t t) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rational acc = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) term *= Rational(a[i][perm[i]] - t * a[perm[i]][i]);
        acc += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

Integer eval_int(const IntPoly& p, std::int64_t x) { return p.eval(Integer(x)); }

}  // namespace

TEST(Polynomial, CyclotomicExamples) {
    EXPECT_EQ(cyclotomic(1), IntPoly({-1, 1}));
    EXPECT_EQ(cyclotomic(2), IntPoly({1, 1}));
    EXPECT_EQ(cyclotomic(6), IntPoly({1, -1, 1}));
    EXPECT_EQ(cyclotomic(12), IntPoly({1, 0, -1, 0, 1}));
}

TEST(Polynomial, CyclotomicProductIsXnMinusOne) {
    for (long n = 1; n <= 36; ++n) {
        IntPoly prod = IntPoly::constant(Integer(1));
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        EXPECT_EQ(prod, IntPoly::monomial(Integer(1), n) - IntPoly::constant(Integer(1))) << n;
    }
}

TEST(Polynomial, MinPolyOfTwoCosVanishesAtRoot) {
    for (long n = 1; n <= 40; ++n) {
        const IntPoly mp = min_poly_two_cos(n);
        EXPECT_EQ(mp.lead(), 1);
        if (n >= 3) {
            const long phi = cyclotomic(n).degree();
            EXPECT_EQ(mp.degree(), phi / 2) << n;
        }
        double acc = 0;
        const double u = 2 * std::cos(2 * std::numbers::pi / static_cast<double>(n));
        for (std::size_t i = mp.c.size(); i-- > 0;) acc = acc * u + mp.c[i].convert_to<double>();
        EXPECT_NEAR(acc, 0.0, 1e-7) << n;
    }
}

TEST(Polynomial, DivmodRecombines) {
    const RatPoly a({Rational(3), Rational(-1, 2), Rational(0), Rational(7, 3), Rational(2)});
    const RatPoly m({Rational(1), Rational(5, 4), Rational(-2)});
    const auto [q, r] = divmod(a, m);
    EXPECT_LT(r.degree(), m.degree());
    EXPECT_EQ(q * m + r, a);
}

TEST(SeifertMatrix, Validation) {
    EXPECT_NO_THROW(SeifertMatrix{kRightTrefoil});
    EXPECT_NO_THROW(SeifertMatrix{Matrix{}});
    EXPECT_THROW(SeifertMatrix(Matrix{{1, 0}, {0, 1}}), std::invalid_argument);
    EXPECT_THROW(SeifertMatrix(Matrix{{1, 2}, {0, 1}}), std::invalid_argument);
    EXPECT_THROW(SeifertMatrix(Matrix{{1, 1, 0}, {0, 1, 0}}), std::invalid_argument);
    EXPECT_THROW(SeifertMatrix(Matrix{{1}}), std::invalid_argument);
}

TEST(SeifertMatrix, MirrorIsMinusTranspose) {
    const SeifertMatrix m = SeifertMatrix(kRightTrefoil).mirror();
    EXPECT_EQ(m.rows(), (Matrix{{1, 0}, {-1, 1}}));
    EXPECT_EQ(m.mirror(), SeifertMatrix(kRightTrefoil));
}

TEST(Alexander, Examples) {
    EXPECT_EQ(alexander_from_seifert(SeifertMatrix(kRightTrefoil)), SymLaurentPoly({-1, 1}));
    EXPECT_EQ(alexander_from_seifert(SeifertMatrix(kRightTrefoil)).str(), "T - 1 + T^-1");
    EXPECT_EQ(alexander_from_seifert(SeifertMatrix(kFigureEight)), SymLaurentPoly({3, -1}));
    EXPECT_EQ(alexander_from_seifert(SeifertMatrix(kFigureEight)).str(), "-T + 3 - T^-1");
    EXPECT_EQ(alexander_from_seifert(SeifertMatrix(kT25)), SymLaurentPoly({1, -1, 1}));
    EXPECT_EQ(alexander_from_seifert(SeifertMatrix(Matrix{})), SymLaurentPoly());
    EXPECT_EQ(alexander_from_seifert(SeifertMatrix(Matrix{{-1, 1}, {0, -2}})), SymLaurentPoly({-3, 2}));
}

TEST(Alexander, TorusKnotsT2n) {
    for (std::size_t g = 1; g <= 5; ++g) {
        std::vector<std::int64_t> expect(g + 1);
        for (std::size_t j = 0; j <= g; ++j) expect[j] = (g - j) % 2 == 0 ? 1 : -1;
        EXPECT_EQ(alexander_from_seifert(SeifertMatrix(torus_2(g))), SymLaurentPoly(expect)) << g;
    }
}

TEST(Alexander, RejectsBadPolynomials) {
    EXPECT_THROW(SymLaurentPoly({2, 1}), std::invalid_argument);
    EXPECT_THROW(SymLaurentPoly(std::vector<std::int64_t>{}), std::invalid_argument);
    EXPECT_TRUE(SymLaurentPoly({1, 0, 0}).is_one());
}

TEST(Alexander, DeterminantPolynomialMatchesPermutationExpansion) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix a = testing_support::random_seifert_rows(1 + trial % 3, rng);
        const IntPoly p = seifert_determinant_poly(SeifertMatrix(a));
        for (std::int64_t t = -3; t <= 3; ++t) EXPECT_EQ(Rational(eval_int(p, t)), leibniz_det(a, t));
    }
}

TEST(Alexander, PropertiesOnRandomSeifertMatrices) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Matrix a = testing_support::random_seifert_rows(1 + trial % 3, rng);
        const SymLaurentPoly delta = alexander_from_seifert(SeifertMatrix(a));
        // |Delta(-1)| = |det(A + A^T)|.
        std::int64_t at_minus_one = delta.coeff(0);
        for (std::size_t j = 1; j <= delta.degree(); ++j) at_minus_one += 2 * delta.coeff(j) * (j % 2 == 0 ? 1 : -1);
        Matrix sym = a;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) sym[i][j] = a[i][j] + a[j][i];
        EXPECT_EQ(abs(Rational(at_minus_one)), abs(leibniz_det(sym, 0)));
        EXPECT_EQ(alexander_from_seifert(SeifertMatrix(a).mirror()), delta);
        std::uniform_int_distribution<std::size_t> idx(0, a.size() - 1);
        for (int step = 0; step < 4; ++step) {
            const std::size_t i = idx(rng), j = idx(rng);
            if (i != j) a = testing_support::congruence(a, i, j, step % 2 == 0 ? 1 : -1);
        }
        EXPECT_EQ(alexander_from_seifert(SeifertMatrix(a)), delta);
    }
}

TEST(Alexander, SecondDerivativeAtOne) {
    EXPECT_EQ(delta2_at_one(SymLaurentPoly({-1, 1})), 2);
    EXPECT_EQ(delta2_at_one(SymLaurentPoly({3, -1})), -2);
    EXPECT_EQ(delta2_at_one(SymLaurentPoly({1, -1, 1})), 6);
    EXPECT_EQ(delta2_at_one(alexander_from_seifert(SeifertMatrix(torus_2(3)))), 12);
    EXPECT_EQ(delta2_at_one(SymLaurentPoly({-3, 2})), 4);
    EXPECT_EQ(delta2_at_one(SymLaurentPoly()), 0);
}

TEST(Alexander, VanishingAtRootsOfUnity) {
    const SymLaurentPoly trefoil({-1, 1});
    EXPECT_TRUE(alexander_vanishes_at(trefoil, 1, 6));
    EXPECT_TRUE(alexander_vanishes_at(trefoil, 5, 6));
    EXPECT_TRUE(alexander_vanishes_at(trefoil, 2, 12));
    EXPECT_FALSE(alexander_vanishes_at(trefoil, 1, 3));
    EXPECT_FALSE(alexander_vanishes_at(trefoil, 1, 2));
    EXPECT_TRUE(alexander_vanishes_at(SymLaurentPoly({1, -1, 1}), 3, 10));
    EXPECT_FALSE(alexander_vanishes_at(SymLaurentPoly({1, -1, 1}), 2, 10));
}

TEST(LSpaceForm, RoundTrip) {
    const LSpaceForm f({1, 3, 4});
    const SymLaurentPoly p = f.polynomial();
    EXPECT_EQ(p, SymLaurentPoly({-1, 1, 0, -1, 1}));
    ASSERT_TRUE(parse_lspace_form(p).has_value());
    EXPECT_EQ(*parse_lspace_form(p), f);
    EXPECT_EQ(LSpaceForm().polynomial(), SymLaurentPoly());
    EXPECT_EQ(parse_lspace_form(SymLaurentPoly())->k(), 0u);
}

TEST(LSpaceForm, Recognition) {
    EXPECT_TRUE(parse_lspace_form(SymLaurentPoly({-1, 1})).has_value());
    EXPECT_TRUE(parse_lspace_form(SymLaurentPoly({1, -1, 1})).has_value());
    EXPECT_FALSE(parse_lspace_form(SymLaurentPoly({3, -1})).has_value());
    EXPECT_FALSE(parse_lspace_form(SymLaurentPoly({-3, 2})).has_value());
    EXPECT_FALSE(parse_lspace_form(SymLaurentPoly({1, 1, -1})).has_value());
}

TEST(LSpaceForm, RejectsBadExponents) {
    EXPECT_THROW(LSpaceForm({0, 2}), std::invalid_argument);
    EXPECT_THROW(LSpaceForm({3, 2}), std::invalid_argument);
    EXPECT_THROW(LSpaceForm({2, 2}), std::invalid_argument);
}

TEST(LSpaceForm, SecondDerivativeAgreesAndNeverVanishes) {
    // Every strictly increasing sequence with n_k <= 9.
    for (unsigned mask = 1; mask < (1u << 9); ++mask) {
        std::vector<std::int64_t> n;
        for (int b = 0; b < 9; ++b)
            if (mask & (1u << b)) n.push_back(b + 1);
        const LSpaceForm f(n);
        const std::int64_t d2 = delta2_from_form(f);
        EXPECT_EQ(d2, delta2_at_one(f.polynomial()));
        EXPECT_NE(d2, 0);
        EXPECT_GT(d2, 0);
    }
}
