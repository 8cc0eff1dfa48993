#include <mzv/error.hpp>
#include <mzv/expression.hpp>
#include <mzv/maps.hpp>
#include <mzv/mzv_eval.hpp>
#include <mzv/regularization.hpp>

#include "random_words.hpp"

#include <gtest/gtest.h>

namespace mzv {
namespace {

WordSum e(const char* s) { return parse_expression(s); }

constexpr Product all_tags[] = {Product::Shuffle, Product::Stuffle, Product::StarShuffle, Product::StarStuffle};

TEST(Regularization, Decompositions) {
    RegDecomposition a = reg_decompose(e("yxy"), Product::Shuffle);
    ASSERT_EQ(a.coefficients.size(), 2u);
    EXPECT_EQ(a.coefficients[0], e("-2*xyy"));
    EXPECT_EQ(a.coefficients[1], e("xy"));

    RegDecomposition b = reg_decompose(e("xyy"), Product::Shuffle);
    ASSERT_EQ(b.coefficients.size(), 1u);
    EXPECT_EQ(b.coefficients[0], e("xyy"));

    RegDecomposition c = reg_decompose(e("yxy"), Product::Stuffle);
    ASSERT_EQ(c.coefficients.size(), 2u);
    EXPECT_EQ(c.coefficients[0], e("-xyy - xxy"));
    EXPECT_EQ(c.coefficients[1], e("xy"));
    EXPECT_THROW(reg_decompose(e("yx"), Product::Shuffle), NotInH1);
}

TEST(Regularization, EulerRelation) {
    WordSum w = shuffle(e("y"), e("xy")) - stuffle(e("y"), e("xy"));
    EXPECT_EQ(reg(w, Product::Shuffle), e("xyy - xxy"));
    EXPECT_EQ(reg(e("xyxy"), Product::Shuffle), e("xyxy"));
    EXPECT_TRUE(reg(shuffle(e("y"), e("xxyy")), Product::Shuffle).is_zero());
}

TEST(Regularization, YPowers) {
    for (unsigned i = 0; i <= 8; ++i) {
        EXPECT_EQ(y_power(Product::Shuffle, i), WordSum(Word::power(Letter::Y, i), Rational(factorial(i))));
        EXPECT_EQ(y_power(Product::Stuffle, i), product_power(Product::Stuffle, e("y"), i));
    }
}

TEST(Regularization, ExhaustiveReconstructionToWeightNine) {
    for (Product tag : all_tags)
        for (std::size_t k = 1; k <= 9; ++k)
            for (const Word& w : enumerate_words(k, Space::H1)) {
                RegDecomposition d = reg_decompose(w, tag);
                ASSERT_EQ(d.reconstruct(), WordSum(w)) << product_name(tag) << " " << w.str();
                for (const auto& c : d.coefficients) ASSERT_TRUE(c.in_h0());
            }
}

TEST(RegularizationProperty, PeelingAgreesWithElimination) {
    testing::WordGen g(61);
    for (int i = 0; i < testing::property_cases; ++i) {
        Product tag = all_tags[g.uniform(0, 3)];
        WordSum w = g.h1_sum(3, 7);
        RegDecomposition a = reg_decompose(w, tag), b = reg_decompose_by_elimination(w, tag);
        ASSERT_EQ(a.coefficients.size(), b.coefficients.size()) << w.str();
        for (std::size_t j = 0; j < a.coefficients.size(); ++j) EXPECT_EQ(a.coefficients[j], b.coefficients[j]);
    }
}

TEST(RegularizationProperty, StarConjugation) {
    testing::WordGen g(62);
    for (int i = 0; i < testing::property_cases; ++i) {
        WordSum w = g.h1_sum(3, 7);
        RegDecomposition star = reg_decompose(w, Product::StarShuffle);
        RegDecomposition plain = reg_decompose(S_map(w), Product::Shuffle);
        ASSERT_EQ(star.coefficients.size(), plain.coefficients.size());
        for (std::size_t j = 0; j < star.coefficients.size(); ++j)
            EXPECT_EQ(star.coefficients[j], S_inv(plain.coefficients[j]));
    }
}

TEST(RegularizationProperty, RegIsMultiplicative) {
    testing::WordGen g(63);
    for (int i = 0; i < testing::property_cases; ++i) {
        Product tag = all_tags[g.uniform(0, 3)];
        Word u = g.h1_word(g.uniform(1, 4)), v = g.h1_word(g.uniform(1, 3));
        EXPECT_EQ(reg(product(tag, u, v), tag), product(tag, reg(u, tag), reg(v, tag)))
            << product_name(tag) << " " << u.str() << " " << v.str();
    }
}

TEST(Regularization, RhoMap) {
    const unsigned digits = 30;
    PrecisionGuard g(working_digits(digits));
    ZetaSource z = zeta_source(digits);
    EXPECT_EQ(rho_apply(TPolynomial<HPReal>({HPReal(1)}), z, 4).coefficients(), std::vector<HPReal>{1});
    auto t = rho_apply(TPolynomial<HPReal>({HPReal(0), HPReal(1)}), z, 4);
    EXPECT_EQ(t.degree(), 1);
    EXPECT_EQ(t[0], 0);
    auto t2 = rho_apply(TPolynomial<HPReal>({HPReal(0), HPReal(0), HPReal(1)}), z, 4);
    EXPECT_LT(abs_diff(t2[0], zeta_single(2, digits)), tolerance_for(digits));
    EXPECT_EQ(t2[2], 1);
}

TEST(Regularization, ZPolynomials) {
    const unsigned digits = 30;
    PrecisionGuard g(working_digits(digits));
    ZEvaluator z = [digits](const WordSum& w) { return z_value(w, digits); };
    auto a = z_reg_polynomial(e("xy"), Product::Shuffle, z);
    EXPECT_EQ(a.degree(), 0);
    EXPECT_LT(abs_diff(a[0], zeta({2}, digits)), tolerance_for(digits));
    auto b = z_reg_polynomial(e("y"), Product::Shuffle, z);
    EXPECT_EQ(b.degree(), 1);
    EXPECT_EQ(b[1], 1);
    auto c = z_reg_polynomial(e("yxy"), Product::Shuffle, z);
    EXPECT_LT(abs_diff(c[0], -2 * zeta({2, 1}, digits)), tolerance_for(digits));
    EXPECT_LT(abs_diff(c[1], zeta({2}, digits)), tolerance_for(digits));
}

// Z^sh(w) = rho(Z^*(w)) for every h1 word of weight <= 6.
TEST(Regularization, ShuffleRegularizationIsRhoOfStuffle) {
    const unsigned digits = 40;
    PrecisionGuard g(working_digits(digits));
    ZEvaluator z = [digits](const WordSum& w) { return z_value(w, digits); };
    ZetaSource zs = zeta_source(digits);
    for (std::size_t k = 1; k <= 6; ++k)
        for (const Word& w : enumerate_words(k, Space::H1)) {
            auto sh = z_reg_polynomial(w, Product::Shuffle, z);
            auto st = rho_apply(z_reg_polynomial(w, Product::Stuffle, z), zs, static_cast<int>(k));
            for (std::size_t i = 0; i < std::max(sh.size(), st.size()); ++i)
                EXPECT_LT(abs_diff(sh.coefficient(i), st.coefficient(i)), tolerance_for(digits)) << w.str() << " T^" << i;
        }
}

} // namespace
} // namespace mzv
