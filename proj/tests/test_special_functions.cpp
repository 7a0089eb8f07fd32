#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "rpq/special_functions.hpp"

namespace {

using rpq::DeformationSpec;

TEST(Exponential, ValueAtZero) {
    for (const auto& d : {DeformationSpec::arik_coon(0.5), DeformationSpec::quesne(0.5),
                          DeformationSpec::generalized_quesne(1.2, 0.7)}) {
        EXPECT_EQ(rpq::exp_big_E(d, 0.0), 1.0);
        EXPECT_EQ(rpq::exp_small_e(d, 0.0), 1.0);
    }
}

TEST(Exponential, MatchesDirectPartialSums) {
    const double q = 0.5;
    const auto ac = DeformationSpec::arik_coon(q);
    double big = 0.0, small = 0.0, fact = 1.0;
    for (int n = 0; n < 200; ++n) {
        if (n > 0) fact *= (1.0 - std::pow(q, n)) / (1.0 - q);
        big += std::pow(q, n * (n - 1) / 2.0) / fact;
        small += 1.0 / fact;
    }
    EXPECT_NEAR(rpq::exp_big_E(ac, 1.0), big, 1e-12);
    EXPECT_NEAR(rpq::exp_small_e(ac, 1.0), small, 1e-11);
}

TEST(Exponential, Reciprocity) {
    const std::vector<DeformationSpec> grid{
        DeformationSpec::arik_coon(0.3),
        DeformationSpec::arik_coon(0.5),
        DeformationSpec::arik_coon(0.9),
        DeformationSpec::jagannathan_srinivasa(0.9, 0.5),
        DeformationSpec::jagannathan_srinivasa(1.0, 0.7),
        DeformationSpec::chakrabarty_jagannathan(0.9, 0.5),
        DeformationSpec::quesne(0.5),
        DeformationSpec::quesne(0.8),
        DeformationSpec::generalized_quesne(1.2, 0.7),
        DeformationSpec::generalized_quesne(1.1, 0.8)};
    for (const auto& d : grid)
        for (double z : {0.1, 0.3, 0.7})
            EXPECT_NEAR(rpq::exp_big_E(d, -z) * rpq::exp_small_e(d, z), 1.0, 1e-8) << d.descriptor();
}

TEST(Exponential, ClassicalLimit) {
    const auto ac = DeformationSpec::arik_coon(1.0 - 1e-6);
    for (double z : {-1.0, -0.4, 0.3, 1.0}) {
        EXPECT_NEAR(rpq::exp_big_E(ac, z), std::exp(z), 1e-4);
        EXPECT_NEAR(rpq::exp_small_e(ac, z), std::exp(z), 1e-4);
    }
}

TEST(Exponential, ArikCoonSmallRadius) {
    EXPECT_THROW(rpq::exp_small_e(DeformationSpec::arik_coon(0.5), 2.0), rpq::ConvergenceError);
    EXPECT_NO_THROW(rpq::exp_small_e(DeformationSpec::arik_coon(0.5), 1.9));
}

TEST(Exponential, GrowingTermsAreRejected) {
    // [n] shrinks like (q^nu / p^mu)^n while eps2^C(n,2) grows, so every z != 0 diverges.
    const auto mp = DeformationSpec::multi_parameter(1.1, 0.8, 1.0, 0.0, 1.0);
    EXPECT_THROW(rpq::exp_big_E(mp, 0.3), rpq::ConvergenceError);
    EXPECT_EQ(rpq::exp_big_E(mp, 0.0), 1.0);
}

TEST(Exponential, BudgetExhaustion) {
    EXPECT_THROW(rpq::exp_big_E(DeformationSpec::arik_coon(0.5), 1.0, rpq::SeriesOptions{1e-30, 3}),
                 rpq::ConvergenceError);
}

}  // namespace
