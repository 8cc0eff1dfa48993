#include <mzv/error.hpp>
#include <mzv/generating.hpp>
#include <mzv/mzv_eval.hpp>
#include <mzv/power_series.hpp>

#include <gtest/gtest.h>

namespace mzv {
namespace {

TEST(PowerSeries, ExpAndInverseOverQ) {
    using S = PowerSeries<Rational>;
    S x(univariate(6));
    x.add({1}, 1);
    S ex = x.exp();
    for (int i = 0; i <= 6; ++i) EXPECT_EQ(ex.coefficient({i}), Rational(1) / Rational(factorial(i)));
    S prod = ex * ex.inverse();
    EXPECT_EQ(prod.coefficient({0}), 1);
    for (int i = 1; i <= 6; ++i) EXPECT_EQ(prod.coefficient({i}), 0);
    EXPECT_THROW(ex.exp(), BadRange);
}

TEST(PowerSeries, WeightedTruncation) {
    using S = PowerSeries<Rational>;
    Truncation tr{{1, 2}, 4, {}};
    S a(tr);
    a.add({1, 0}, 1);
    a.add({0, 1}, 1);
    S sq = a * a;
    EXPECT_EQ(sq.coefficient({2, 0}), 1);
    EXPECT_EQ(sq.coefficient({1, 1}), 2);
    EXPECT_EQ(sq.coefficient({0, 2}), 1);
    S cube = sq * a;
    EXPECT_EQ(cube.coefficient({1, 2}), 0); // degree 5, dropped
    EXPECT_EQ(cube.coefficient({2, 1}), 3);
}

TEST(PowerSeries, WordCoefficients) {
    using S = PowerSeries<WordSum, WordRing<Product::Shuffle>>;
    S a(univariate(3));
    a.add({1}, WordSum(Word::from_string("y")));
    S ex = a.exp();
    // exp_sh(y t) has t^n coefficient y^{sh n}/n! = y^n
    EXPECT_EQ(ex.coefficient({3}), WordSum(Word::from_string("yyy")));
}

TEST(Generating, KnNkExample) {
    GeneratingReport r = generating_check("kn_nk", {{"k", 2}}, 4, 40);
    EXPECT_TRUE(r.passed);
    EXPECT_LT(r.max_deviation, HPReal("1e-30"));
    EXPECT_GT(r.compared, 0u);
}

TEST(Generating, BernoulliCorollaryExact) {
    GeneratingReport r = generating_check("bernoulli_corollary", {}, 12, 30);
    EXPECT_TRUE(r.passed);
    EXPECT_TRUE(r.exact);
}

TEST(Generating, OhnoZagierSmall) {
    GeneratingReport r = generating_check("ohno_zagier", {}, 6, 40);
    EXPECT_TRUE(r.passed) << (r.mismatches.empty() ? "" : r.mismatches.front());
}

TEST(Generating, UnknownNameThrows) { EXPECT_THROW(generating_check("nope", {}, 4, 30), BadRange); }

TEST(Generating, NamesRun) {
    for (auto name : generating_names()) {
        Params p;
        if (name == "gen_2k" || name == "exp_ast" || name == "k_ast_sk" || name == "kn_nk" || name == "mzv_mzsv_inverse")
            p["k"] = 2;
        GeneratingReport r = generating_check(name, p, 4, 30);
        EXPECT_TRUE(r.passed) << name;
    }
}

} // namespace
} // namespace mzv
