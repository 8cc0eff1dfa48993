#include <mzv/error.hpp>
#include <mzv/expression.hpp>
#include <mzv/maps.hpp>

#include "random_words.hpp"

#include <gtest/gtest.h>

namespace mzv {
namespace {

WordSum e(const char* s) { return parse_expression(s); }

TEST(Maps, SigmaAndS) {
    EXPECT_EQ(sigma(e("y")), e("x + y"));
    EXPECT_EQ(sigma(e("xy")), e("xx + xy"));
    EXPECT_EQ(sigma_inv(sigma(e("xyy"))), e("xyy"));
    EXPECT_EQ(S_map(e("xyy")), e("xxy + xyy"));
    EXPECT_EQ(S_map(e("y")), e("y"));
    EXPECT_EQ(S_inv(e("xyy")), e("-xxy + xyy"));
    EXPECT_EQ(S_tilde(e("xy")), e("xx + xy"));
    EXPECT_EQ(S_tilde(e("x")), e("x"));
    EXPECT_EQ(S_tilde_inv(S_tilde(e("xyxy"))), e("xyxy"));
}

TEST(Maps, Tau) {
    EXPECT_EQ(tau(e("xxy")), e("xyy"));
    EXPECT_EQ(tau(e("xy")), e("xy"));
}

TEST(Maps, Derivations) {
    EXPECT_EQ(partial_n(1, e("xy")), e("xyy - xxy"));
    EXPECT_TRUE(partial_n(1, WordSum::one()).is_zero());
    EXPECT_EQ(partial_n(2, e("x")), e("xxy + xyy"));
    EXPECT_EQ(partial_n_star(1, e("xy")), S_inv(partial_n(1, S_map(e("xy")))));
    EXPECT_EQ(partial_n_star(1, e("x")), e("xy"));
    EXPECT_EQ(partial_n_star(1, e("y")), e("-xy"));
}

TEST(Maps, OhnoOperators) {
    EXPECT_EQ(ohno_sigma(0, e("xyxy")), e("xyxy"));
    EXPECT_EQ(ohno_sigma(1, e("xy")), e("xxy"));
    EXPECT_EQ(ohno_sigma(1, e("xyy")), e("xxyy + xyxy"));
    EXPECT_EQ(ohno_sigma_bar(1, e("xyy")), e("xyyy"));
    EXPECT_EQ(ohno_sigma_bar(0, e("xyy")), e("xyy"));
    EXPECT_EQ(ohno_sigma_bar(1, e("xxy")), e("xxyy + xyxy"));
    EXPECT_THROW(ohno_sigma(1, e("yx")), NotInH1);
    EXPECT_THROW(ohno_sigma_bar(1, e("yy")), NotInH0);
    EXPECT_EQ(ohno_sigma_star(1, e("xy")), S_inv(ohno_sigma(1, S_map(e("xy")))));
}

TEST(Maps, Names) {
    EXPECT_EQ(apply_named_map("dn:1", e("xy")), e("xyy - xxy"));
    EXPECT_EQ(apply_named_map("tau", e("xxy")), e("xyy"));
    EXPECT_THROW(apply_named_map("nope", e("xy")), ParseError);
    EXPECT_THROW(apply_named_map("dn:x", e("xy")), ParseError);
}

TEST(MapsProperty, InverseLaws) {
    testing::WordGen g(51);
    for (int i = 0; i < testing::property_cases; ++i) {
        WordSum u = g.any_sum(4, 10);
        EXPECT_EQ(S_inv(S_map(u)), u);
        EXPECT_EQ(S_map(S_inv(u)), u);
        EXPECT_EQ(sigma_inv(sigma(u)), u);
        EXPECT_EQ(sigma(sigma_inv(u)), u);
        EXPECT_EQ(S_tilde_inv(S_tilde(u)), u);
        EXPECT_EQ(S_tilde(S_tilde_inv(u)), u);
        EXPECT_EQ(tau(tau(u)), u);
    }
}

TEST(MapsProperty, LeibnizForPartialN) {
    testing::WordGen g(53);
    for (int i = 0; i < testing::property_cases; ++i) {
        const int n = g.uniform(1, 3);
        const int a = g.uniform(0, 4), b = g.uniform(0, 8 - n - a < 0 ? 0 : 8 - n - a);
        Word u = g.word(a), v = g.word(b);
        EXPECT_EQ(partial_n(n, u + v), concat(partial_n(n, u), v) + concat(u, partial_n(n, v)))
            << n << " " << u.str() << " " << v.str();
        // tau-conjugate is again a derivation
        auto bar = [n](const WordSum& w) { return tau(partial_n(n, tau(w))); };
        EXPECT_EQ(bar(u + v), concat(bar(u), v) + concat(u, bar(v)));
    }
}

TEST(MapsProperty, PartialNMapsH0IntoH0) {
    testing::WordGen g(54);
    for (int i = 0; i < testing::property_cases; ++i) {
        Word u = g.h0_word(g.uniform(2, 7));
        EXPECT_TRUE(partial_n(g.uniform(1, 3), u).in_h0()) << u.str();
    }
}

TEST(MapsProperty, LeftSTildeDerivationForPartialNStar) {
    testing::WordGen g(55);
    for (int i = 0; i < testing::property_cases; ++i) {
        const int n = g.uniform(1, 3);
        const int a = g.uniform(1, 4), b = g.uniform(1, std::max(1, 8 - n - a));
        Word u = g.word(a), v = g.word(b);
        WordSum lhs = partial_n_star(n, u + v);
        WordSum twisted = S_tilde_inv(partial_n_star(n, S_tilde(u)));
        EXPECT_EQ(lhs, concat(twisted, v) + concat(u, partial_n_star(n, v))) << n << " " << u.str() << " " << v.str();
    }
}

} // namespace
} // namespace mzv
