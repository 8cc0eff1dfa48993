#include <mzv/error.hpp>
#include <mzv/bernoulli.hpp>
#include <mzv/closed_forms.hpp>
#include <mzv/config.hpp>
#include <mzv/maps.hpp>
#include <mzv/mzv_eval.hpp>
#include <mzv/products.hpp>

#include "random_words.hpp"

#include <gtest/gtest.h>
#include <mpfr.h>

namespace mzv {
namespace {

constexpr unsigned digits = 40;

class Numeric : public ::testing::Test {
protected:
    PrecisionGuard guard{working_digits(digits)};
    HPReal tol = tolerance_for(digits);
};

TEST(Bernoulli, Values) {
    EXPECT_EQ(bernoulli(0), 1);
    EXPECT_EQ(bernoulli(1), make_rational(-1, 2));
    EXPECT_EQ(bernoulli(2), make_rational(1, 6));
    EXPECT_EQ(bernoulli(3), 0);
    EXPECT_EQ(bernoulli(12), make_rational(-691, 2730));
}

// Single zetas against MPFR's own zeta function.
TEST_F(Numeric, SingleZetaAgainstLibraryOracle) {
    for (int s = 2; s <= 16; ++s) {
        HPReal oracle;
        mpfr_zeta_ui(oracle.backend().data(), static_cast<unsigned long>(s), MPFR_RNDN);
        EXPECT_LT(abs_diff(zeta({s}, digits), oracle), tol) << s;
        EXPECT_LT(abs_diff(zeta_word(Word::z(s), digits, MzvMethod::Direct), oracle), tol) << s;
    }
}

TEST_F(Numeric, KnownValues) {
    EXPECT_LT(abs_diff(zeta({2}, digits), pi_power(2) / 6), tol);
    EXPECT_LT(abs_diff(zeta({2, 1}, digits), zeta({3}, digits)), tol);
    EXPECT_LT(abs_diff(zeta({3, 1}, digits), pi_power(4) / 360), tol);
    EXPECT_LT(abs_diff(zeta({2, 2}, digits), pi_power(4) / 120), tol);
    EXPECT_LT(abs_diff(zeta_star({2, 1}, digits), zeta({2, 1}, digits) + zeta({3}, digits)), tol);
    EXPECT_LT(abs_diff(zeta_star({2, 2}, digits), zeta({4}, digits) * 7 / 4), tol);
    EXPECT_EQ(zeta({}, digits), 1);
    EXPECT_THROW(zeta({1, 2}, digits), NotAdmissible);
    EXPECT_THROW(zeta_word(Word::from_string("yxy"), digits), NotInH0);
}

TEST_F(Numeric, RoutesAgree) {
    for (std::size_t k = 2; k <= 8; ++k)
        for (const Word& w : enumerate_words(k, Space::H0))
            EXPECT_LT(abs_diff(zeta_word(w, digits, MzvMethod::SplitHalf), zeta_word(w, digits, MzvMethod::SplitThird)), tol)
                << w.str();
    EXPECT_THROW(zeta_word(index_to_word({2, 1}), digits, MzvMethod::Direct), BadRange);
}

TEST_F(Numeric, X0Sums) {
    EXPECT_LT(abs_diff(x0_sum(4, 2, 1, digits), pi_power(4) / 360), tol);
    EXPECT_LT(abs_diff(x0_sum(4, 2, 2, digits), pi_power(4) / 120), tol);
    EXPECT_THROW(x0_sum(3, 2, 2, digits), BadRange);
}

TEST_F(Numeric, PolylogAtHalf) {
    // Li_1(1/2) = log 2
    EXPECT_LT(abs_diff(polylog({1}, make_rational(1, 2), digits), log(HPReal(2))), tol);
}

TEST_F(Numeric, DigitsCap) {
    Config saved = config();
    Config c = saved;
    c.digits_cap = 50;
    set_config(c);
    EXPECT_THROW(zeta({3}, 60), PrecisionExhausted);
    set_config(saved);
}

TEST_F(Numeric, StuffleConsistencyExhaustiveToWeightSix) {
    const HPReal t = pow(HPReal(10), -static_cast<int>(digits - 5));
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; a + b <= 6; ++b)
            for (const Word& u : enumerate_words(a, Space::H0))
                for (const Word& v : enumerate_words(b, Space::H0))
                    EXPECT_LT(abs_diff(zeta_word(u, digits) * zeta_word(v, digits), z_value(stuffle(u, v), digits)), t)
                        << u.str() << " " << v.str();
}

TEST_F(Numeric, PropertyStuffleAndShuffleConsistency) {
    testing::WordGen g(71);
    const HPReal t = pow(HPReal(10), -static_cast<int>(digits - 5));
    for (int i = 0; i < testing::property_cases; ++i) {
        const int a = g.uniform(2, 6), b = g.uniform(2, 8 - a);
        Word u = g.h0_word(a), v = g.h0_word(b);
        HPReal lhs = zeta_word(u, digits) * zeta_word(v, digits);
        EXPECT_LT(abs_diff(lhs, z_value(stuffle(u, v), digits)), t) << u.str() << " " << v.str();
        EXPECT_LT(abs_diff(lhs, z_value(shuffle(u, v), digits)), t) << u.str() << " " << v.str();
    }
}

TEST_F(Numeric, PropertyDuality) {
    testing::WordGen g(72);
    for (int i = 0; i < testing::property_cases; ++i) {
        Word w = g.h0_word(g.uniform(2, 8));
        EXPECT_LT(abs_diff(zeta_word(w, digits), zeta(word_to_index(dual(w)), digits)), tol) << w.str();
    }
}

TEST_F(Numeric, ClosedFormExamples) {
    ClosedForm z4 = closed_form("zeta2n", {{"n", 2}}, digits);
    ASSERT_TRUE(z4.coefficient);
    EXPECT_EQ(*z4.coefficient, make_rational(1, 90));
    EXPECT_EQ(z4.pi_power, 4);
    EXPECT_LT(abs_diff(z4.value, zeta({4}, digits)), tol);
    EXPECT_EQ(*closed_form("zeta2n", {{"n", 0}}, digits).coefficient, make_rational(-1, 2));
    EXPECT_THROW(closed_form("zeta2n", {}, digits), BadRange);
    EXPECT_THROW(closed_form("nope", {{"n", 1}}, digits), BadRange);
}

TEST_F(Numeric, RootOfUnityFormsMatchRecursions) {
    for (long k = 1; k <= 3; ++k)
        for (long n = 0; n <= 4; ++n) {
            ClosedForm a = closed_form("z2k_n", {{"k", k}, {"n", n}}, digits);
            ClosedForm b = closed_form("z2k_n_recursive", {{"k", k}, {"n", n}}, digits);
            EXPECT_LT(abs_diff(a.value, b.value), tolerance_for(digits)) << k << "," << n;
            EXPECT_LT(abs(a.imaginary), HPReal("1e-30"));
            ClosedForm c = closed_form("zs2k_n", {{"k", k}, {"n", n}}, digits);
            ClosedForm d = closed_form("zs2k_n_recursive", {{"k", k}, {"n", n}}, digits);
            EXPECT_LT(abs_diff(c.value, d.value), tolerance_for(digits)) << k << "," << n;
            if (a.reconstructed) {
                EXPECT_EQ(*a.coefficient, *b.coefficient) << k << "," << n;
            }
        }
}

TEST_F(Numeric, ResSumWithOneReproducesHoffman) {
    for (long k = 1; k <= 5; ++k)
        for (long n = 1; n <= k; ++n)
            for (long star : {0L, 1L}) {
                ClosedForm a = closed_form("res_2a", {{"m", 1}, {"k", k}, {"n", n}, {"star", star}}, digits);
                ClosedForm b = closed_form("res_hoffman", {{"k", k}, {"n", n}, {"star", star}}, digits);
                ASSERT_TRUE(a.reconstructed && a.coefficient) << k << "," << n;
                EXPECT_EQ(*a.coefficient, *b.coefficient) << k << "," << n << " star=" << star;
            }
}

} // namespace
} // namespace mzv
