#include <mzv/error.hpp>
#include <mzv/expression.hpp>
#include <mzv/maps.hpp>
#include <mzv/products.hpp>

#include "random_words.hpp"

#include <gtest/gtest.h>

namespace mzv {

void PrintTo(Product p, std::ostream* os) { *os << product_name(p); }

namespace {

WordSum e(const char* s) { return parse_expression(s); }

TEST(Products, ShuffleExamples) {
    EXPECT_EQ(shuffle(e("xy"), e("xy")), e("2*xyxy + 4*xxyy"));
    EXPECT_EQ(shuffle(e("xyxxy"), e("()")), e("xyxxy"));
    EXPECT_EQ(shuffle(e("y"), e("xy")), e("yxy + 2*xyy"));
    EXPECT_EQ(shuffle(e("xy"), e("xy")).str(), "2*xyxy + 4*xxyy");
}

TEST(Products, StuffleExamples) {
    EXPECT_EQ(stuffle(e("xy"), e("xy")), e("2*xyxy + xxxy"));
    EXPECT_EQ(stuffle(e("xyy"), e("()")), e("xyy"));
    EXPECT_EQ(stuffle(e("y"), e("xy")), e("yxy + xyy + xxy"));
    EXPECT_THROW(stuffle(e("x"), e("y")), NotInH1);
}

TEST(Products, StarExamples) {
    EXPECT_EQ(star_shuffle(e("y"), e("xy")), e("yxy + 2*xyy - 3*xxy"));
    EXPECT_EQ(star_shuffle(e("y"), e("y")), e("2*yy - 2*xy"));
    EXPECT_EQ(star_stuffle(e("y"), e("xy")), e("yxy + xyy - xxy"));
    EXPECT_EQ(star_stuffle(e("xy"), e("xy")), e("2*xyxy - xxxy"));
    EXPECT_EQ(star_shuffle(e("xxy"), e("()")), e("xxy"));
    EXPECT_THROW(star_stuffle(e("xx"), e("y")), NotInH1);
}

TEST(Products, PowersAndNames) {
    EXPECT_EQ(product_power(Product::Shuffle, e("y"), 3), e("6*yyy"));
    EXPECT_EQ(product_power(Product::Stuffle, e("xy"), 0), WordSum::one());
    EXPECT_EQ(parse_product("star-stuffle"), Product::StarStuffle);
    EXPECT_THROW(parse_product("concat"), ParseError);
}

TEST(Products, CacheDoesNotChangeResults) {
    WordSum u = e("xyxy + 2*xxyy"), v = e("xyy - y");
    set_product_cache_limit(0);
    WordSum uncached = stuffle(u, v);
    set_product_cache_limit(1u << 16);
    clear_product_cache();
    EXPECT_EQ(stuffle(u, v), uncached);
    EXPECT_EQ(stuffle(u, v), uncached);
    EXPECT_GT(product_cache_size(), 0u);
}

TEST(Products, ExhaustiveCommutativityToWeightSix) {
    for (Product p : {Product::Shuffle, Product::Stuffle, Product::StarShuffle, Product::StarStuffle}) {
        const Space sp = (p == Product::Shuffle || p == Product::StarShuffle) ? Space::H : Space::H1;
        for (std::size_t a = 1; a <= 3; ++a)
            for (std::size_t b = 1; a + b <= 6; ++b)
                for (const Word& u : enumerate_words(a, sp))
                    for (const Word& v : enumerate_words(b, sp))
                        ASSERT_EQ(product(p, u, v), product(p, v, u)) << product_name(p) << " " << u.str() << " " << v.str();
    }
}

class ProductProperty : public ::testing::TestWithParam<Product> {};

TEST_P(ProductProperty, CommutativeAssociativeWeightAdditive) {
    const Product p = GetParam();
    const bool h1_only = p == Product::Stuffle || p == Product::StarStuffle;
    testing::WordGen g(31 + static_cast<int>(p));
    for (int i = 0; i < testing::property_cases; ++i) {
        const std::size_t a = g.uniform(1, 3), b = g.uniform(1, 3), c = g.uniform(1, 2);
        Word u = h1_only ? g.h1_word(a) : g.word(a);
        Word v = h1_only ? g.h1_word(b) : g.word(b);
        Word t = h1_only ? g.h1_word(c) : g.word(c);
        WordSum uv = product(p, u, v);
        EXPECT_EQ(uv, product(p, v, u));
        EXPECT_EQ(product(p, uv, t), product(p, u, product(p, v, t)));
        EXPECT_EQ(uv.homogeneous_weight(), std::optional<std::size_t>(a + b));
    }
}

INSTANTIATE_TEST_SUITE_P(AllProducts, ProductProperty,
                         ::testing::Values(Product::Shuffle, Product::Stuffle, Product::StarShuffle,
                                           Product::StarStuffle),
                         [](const auto& info) {
                             std::string n(product_name(info.param));
                             std::erase(n, '-');
                             return n;
                         });

TEST(ProductProperty, Closure) {
    testing::WordGen g(41);
    for (int i = 0; i < testing::property_cases; ++i) {
        Word u = g.h0_word(g.uniform(2, 4)), v = g.h0_word(g.uniform(2, 4));
        for (Product p : {Product::Shuffle, Product::Stuffle, Product::StarShuffle, Product::StarStuffle})
            EXPECT_TRUE(product(p, u, v).in_h0()) << product_name(p);
        Word a = g.h1_word(g.uniform(1, 4)), b = g.h1_word(g.uniform(1, 4));
        EXPECT_TRUE(shuffle(a, b).in_h1());
        EXPECT_TRUE(star_shuffle(a, b).in_h1());
    }
}

TEST(ProductProperty, ConjugationByS) {
    testing::WordGen g(43);
    for (int i = 0; i < testing::property_cases; ++i) {
        const std::size_t a = g.uniform(1, 4), b = g.uniform(1, 8 - static_cast<int>(a));
        Word u = g.h1_word(a), v = g.h1_word(b);
        EXPECT_EQ(S_map(star_stuffle(u, v)), stuffle(S_map(u), S_map(v))) << u.str() << " " << v.str();
        EXPECT_EQ(S_map(star_shuffle(u, v)), shuffle(S_map(u), S_map(v))) << u.str() << " " << v.str();
        // the conjugation route as an independent star-shuffle oracle on all of h
        Word x = g.word(a), y = g.word(b);
        EXPECT_EQ(star_shuffle(x, y), S_inv(shuffle(S_map(x), S_map(y)))) << x.str() << " " << y.str();
    }
}

TEST(ProductProperty, TauIsShuffleAutomorphism) {
    testing::WordGen g(47);
    for (int i = 0; i < testing::property_cases; ++i) {
        const std::size_t a = g.uniform(1, 4), b = g.uniform(1, 8 - static_cast<int>(a));
        WordSum u = g.word(a), v = g.word(b);
        EXPECT_EQ(tau(shuffle(u, v)), shuffle(tau(u), tau(v)));
    }
}

} // namespace
} // namespace mzv
