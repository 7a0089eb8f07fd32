#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rpq/distributions.hpp"
#include "rpq/special_functions.hpp"

namespace {

using rpq::BinomialParams;
using rpq::DeformationSpec;
using rpq::EulerParams;
using rpq::InversePolyaParams;
using rpq::Method;
using rpq::PolyaParams;

// Kinds with eps1 = 1, where the binomial table is a genuine distribution.
std::vector<DeformationSpec> unit_eps1_grid() {
    return {DeformationSpec::arik_coon(0.3), DeformationSpec::arik_coon(0.5),
            DeformationSpec::arik_coon(0.9), DeformationSpec::jagannathan_srinivasa(1.0, 0.7),
            DeformationSpec::quesne(0.5), DeformationSpec::quesne(0.8)};
}

std::vector<DeformationSpec> full_grid() {
    auto g = unit_eps1_grid();
    g.push_back(DeformationSpec::jagannathan_srinivasa(0.9, 0.5));
    g.push_back(DeformationSpec::chakrabarty_jagannathan(0.9, 0.5));
    g.push_back(DeformationSpec::generalized_quesne(1.2, 0.7));
    g.push_back(DeformationSpec::generalized_quesne(1.1, 0.8));
    g.push_back(DeformationSpec::multi_parameter(1.1, 0.8, 1.0, 0.0, 1.0));
    return g;
}

double brute_binomial_term(const DeformationSpec& d, int n, double p0, int k) {
    double tail = 1.0;
    for (int i = 1; i <= n - k; ++i) tail *= std::pow(d.eps1(), i - 1) - p0 * std::pow(d.eps2(), i - 1);
    return oracle::binomial(d, n, k) * std::pow(p0, k) * tail;
}

double brute_moment(const rpq::PmfTable& t, int j) {
    const auto b = t.bracket_deformation();
    double s = 0.0;
    for (std::size_t i = 0; i < t.probs.size(); ++i) s += rpq::falling_factorial(b, t.support[i], j) * t.probs[i];
    return s;
}

double max_gap(const std::vector<double>& a, const std::vector<double>& b) {
    double g = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) g = std::max(g, oracle::relative_gap(a[i], b[i]));
    return a.size() == b.size() ? g : INFINITY;
}

TEST(Binomial, WorkedValues) {
    const auto ac = DeformationSpec::arik_coon(0.5);
    const auto t = rpq::binomial_pmf(ac, {2, 0.5}, Method::Direct);
    ASSERT_EQ(t.probs.size(), 3u);
    EXPECT_NEAR(t.probs[0], 0.375, 1e-15);
    EXPECT_NEAR(t.probs[1], 0.375, 1e-15);
    EXPECT_NEAR(t.probs[2], 0.25, 1e-15);
    EXPECT_NEAR(rpq::binomial_mean(ac, {2, 0.5}), 0.75, 1e-15);
    EXPECT_NEAR(rpq::binomial_variance(ac, {2, 0.5}), 0.375, 1e-15);
    EXPECT_NEAR(rpq::binomial_factorial_moment(ac, {2, 0.5}, 2), 0.375, 1e-15);
    EXPECT_NEAR(rpq::binomial_factorial_moment(ac, {2, 0.5}, 3), 0.0, 0.0);
    for (const auto& d : full_grid()) {
        const auto one = rpq::binomial_pmf(d, {1, 0.4}, Method::Direct);
        EXPECT_NEAR(one.probs[0], 0.6, 1e-15);
        EXPECT_NEAR(one.probs[1], 0.4, 1e-15);
    }
}

TEST(Binomial, DirectMatchesProductOracle) {
    for (const auto& d : full_grid())
        for (int n : {3, 8})
            for (double p0 : {0.2, 0.5}) {
                const auto t = rpq::binomial_pmf(d, {n, p0}, Method::Direct);
                for (int k = 0; k <= n; ++k)
                    EXPECT_LT(oracle::relative_gap(t.probs[static_cast<std::size_t>(k)],
                                                   brute_binomial_term(d, n, p0, k)),
                              1e-12)
                        << d.descriptor();
            }
}

TEST(Binomial, RecursionMatchesDirect) {
    for (const auto& d : full_grid())
        for (int n : {1, 5, 8}) {
            const auto a = rpq::binomial_pmf(d, {n, 0.3}, Method::Direct);
            const auto b = rpq::binomial_pmf(d, {n, 0.3}, Method::Recursive);
            EXPECT_LT(max_gap(a.probs, b.probs), 1e-10) << d.descriptor();
        }
}

TEST(Binomial, NormalizedWhenEps1IsOne) {
    for (const auto& d : unit_eps1_grid())
        for (int n : {1, 4, 10}) {
            const auto t = rpq::binomial_pmf(d, {n, 0.35}, Method::Direct);
            EXPECT_NEAR(t.sum(), 1.0, 1e-9) << d.descriptor();
            EXPECT_LT(t.normalization_residual, 1e-9);
        }
}

TEST(Binomial, MomentsAgainstBruteForce) {
    for (const auto& d : unit_eps1_grid()) {
        const BinomialParams params{6, 0.4};
        const auto t = rpq::binomial_pmf(d, params, Method::Direct);
        for (int j : {1, 2})
            EXPECT_LT(oracle::relative_gap(rpq::binomial_factorial_moment(d, params, j), brute_moment(t, j)), 1e-7);
        const double mean = brute_moment(t, 1);
        double second = 0.0;
        for (std::size_t i = 0; i < t.probs.size(); ++i)
            second += std::pow(rpq::number(d, t.support[i]), 2) * t.probs[i];
        EXPECT_NEAR(rpq::binomial_mean(d, params), mean, 1e-8);
        EXPECT_NEAR(rpq::binomial_variance(d, params), second - mean * mean, 1e-8) << d.descriptor();
        const auto r1 = rpq::binomial_product_moment(d, params, 1);
        EXPECT_NEAR(r1.closed_form, rpq::binomial_mean(d, params), 1e-12);
        EXPECT_LT(r1.rel_err, 1e-8);
    }
}

TEST(Binomial, ClassicalFactorialMomentOnArikCoon) {
    const auto ac = DeformationSpec::arik_coon(0.5);
    const BinomialParams params{3, 0.5};
    const auto t = rpq::binomial_pmf(ac, params, Method::Direct);
    for (int i : {2, 3}) {
        double brute = 0.0;
        for (std::size_t k = 0; k < t.probs.size(); ++k) {
            double f = 1.0;
            for (int v = 0; v < i; ++v) f *= t.support[k] - v;
            brute += f * t.probs[k];
        }
        EXPECT_NEAR(rpq::binomial_classical_factorial_moment(ac, params, i), brute, 1e-7);
        EXPECT_NEAR(rpq::binomial_classical_factorial_moment(ac, params, i, 2), brute, 1e-7);
        EXPECT_NEAR(rpq::classical_factorial_moment_of(t, i), brute, 1e-15);
    }
}

TEST(Binomial, ClassicalLimit) {
    const auto ac = DeformationSpec::arik_coon(1.0 - 1e-6);
    const int n = 6;
    const double p0 = 0.3;
    const auto t = rpq::binomial_pmf(ac, {n, p0}, Method::Direct);
    double c = 1.0;
    for (int k = 0; k <= n; ++k) {
        EXPECT_NEAR(t.probs[static_cast<std::size_t>(k)], c * std::pow(p0, k) * std::pow(1 - p0, n - k), 1e-3);
        c = c * (n - k) / (k + 1);
    }
}

TEST(Binomial, ParameterGuards) {
    const auto ac = DeformationSpec::arik_coon(0.5);
    EXPECT_THROW(rpq::binomial_pmf(ac, {3, 1.5}, Method::Direct), rpq::DomainError);
    EXPECT_THROW(rpq::binomial_pmf(ac, {-1, 0.5}, Method::Direct), rpq::DomainError);
}

TEST(Euler, RatioNormalizationAndMethods) {
    const auto ac = DeformationSpec::arik_coon(0.5);
    const EulerParams params{0.5, 1e-12, 10000};
    const auto direct = rpq::euler_pmf(ac, params, Method::Direct);
    const auto rec = rpq::euler_pmf(ac, params, Method::Recursive);
    EXPECT_TRUE(direct.truncated);
    EXPECT_NEAR(direct.sum(), 1.0, 1e-8);
    EXPECT_LT(max_gap(direct.probs, rec.probs), 1e-10);
    EXPECT_NEAR(direct.probs[0], rpq::exp_big_E(ac, -0.5), 1e-15);
    for (std::size_t x = 0; x + 1 < direct.probs.size(); ++x)
        EXPECT_NEAR(direct.probs[x + 1] / direct.probs[x], 0.5 / rpq::number(ac, x + 1.0), 1e-12);
}

TEST(Euler, FactorialMoments) {
    const EulerParams params{0.6, 1e-14, 10000};
    for (const auto& d : unit_eps1_grid()) {
        if (d.kind() == rpq::Kind::ArikCoon) {
            EXPECT_NEAR(rpq::euler_factorial_moment(d, params, 1), 0.6, 1e-12);
            EXPECT_NEAR(rpq::euler_factorial_moment(d, params, 2), 0.36, 1e-12);
        }
        const auto t = rpq::euler_pmf(d, params, Method::Direct);
        for (int j : {1, 2})
            EXPECT_LT(oracle::relative_gap(rpq::euler_factorial_moment(d, params, j), brute_moment(t, j)), 1e-5)
                << d.descriptor();
    }
    EXPECT_NEAR(rpq::euler_factorial_moment(DeformationSpec::arik_coon(0.5), {1e-9, 1e-12, 10000}, 1), 0.0, 1e-8);
}

TEST(Euler, ClassicalMeanOnArikCoon) {
    const auto ac = DeformationSpec::arik_coon(0.5);
    const EulerParams params{0.7, 1e-15, 10000};
    const auto t = rpq::euler_pmf(ac, params, Method::Direct);
    double mean = 0.0;
    for (std::size_t k = 0; k < t.probs.size(); ++k) mean += t.support[k] * t.probs[k];
    EXPECT_NEAR(rpq::euler_classical_factorial_moment(ac, params, 1), mean, 1e-7);
    EXPECT_NEAR(rpq::euler_classical_factorial_moment(ac, params, 1, 4), mean, 1e-7);
}

TEST(Euler, DivergentExponentialPropagates) {
    const auto mp = DeformationSpec::multi_parameter(1.1, 0.8, 1.0, 0.0, 1.0);
    EXPECT_THROW(rpq::euler_pmf(mp, {0.3, 1e-12, 10000}, Method::Direct), rpq::ConvergenceError);
}

TEST(Polya, HypergeometricIsUnitStep) {
    for (const auto& d : full_grid()) {
        const auto h = rpq::hypergeometric_pmf(d, 3, 4.0, 5.0);
        const auto p = rpq::polya_pmf(d, {3, 4.0, 5.0, -1}, Method::Direct);
        EXPECT_EQ(h.probs, p.probs);
        EXPECT_EQ(h.family, rpq::Family::Hypergeometric);
    }
    const auto atom = rpq::hypergeometric_pmf(DeformationSpec::arik_coon(0.5), 0, 2.0, 3.0);
    ASSERT_EQ(atom.probs.size(), 1u);
    EXPECT_NEAR(atom.probs[0], 1.0, 1e-15);
}

TEST(Polya, NormalizationOnArikCoon) {
    const auto ac = DeformationSpec::arik_coon(0.5);
    const auto two = rpq::polya_pmf(ac, {1, 1.0, 1.0, -1}, Method::Direct);
    EXPECT_EQ(two.probs.size(), 2u);
    EXPECT_NEAR(two.sum(), 1.0, 1e-9);
    for (double q : {0.3, 0.5, 0.9}) {
        const auto d = DeformationSpec::arik_coon(q);
        EXPECT_NEAR(rpq::polya_pmf(d, PolyaParams::from_urn(4, 3, 5, 1), Method::Direct).sum(), 1.0, 1e-9);
        EXPECT_NEAR(rpq::polya_pmf(d, PolyaParams::from_urn(4, 3, 5, 2), Method::Direct).sum(), 1.0, 1e-9);
        EXPECT_NEAR(rpq::hypergeometric_pmf(d, 4, 6.0, 3.0).sum(), 1.0, 1e-9);
    }
}

TEST(Polya, RecursionMatchesDirect) {
    for (const auto& d : full_grid())
        for (const auto& params : {PolyaParams{4, 6.0, 3.0, -1}, PolyaParams{3, 2.5, 1.5, -1},
                                   PolyaParams::from_urn(4, 3, 5, 1)}) {
            const auto a = rpq::polya_pmf(d, params, Method::Direct);
            const auto b = rpq::polya_pmf(d, params, Method::Recursive);
            EXPECT_LT(max_gap(a.probs, b.probs), 1e-10) << d.descriptor();
        }
}

TEST(Polya, FactorialMomentsOnSingleBaseKinds) {
    for (const auto& d : unit_eps1_grid()) {
        const PolyaParams params{2, 2.0, 2.0, -1};
        const auto t = rpq::polya_pmf(d, params, Method::Direct);
        for (int j : {1, 2})
            EXPECT_LT(oracle::relative_gap(rpq::polya_factorial_moment(d, params, j), brute_moment(t, j)), 1e-7)
                << d.descriptor();
    }
}

TEST(Polya, ClassicalHypergeometricLimit) {
    const auto ac = DeformationSpec::arik_coon(1.0 - 1e-6);
    auto choose = [](int a, int b) {
        double c = 1.0;
        for (int i = 0; i < b; ++i) c = c * (a - i) / (i + 1);
        return b < 0 || b > a ? 0.0 : c;
    };
    const int n = 4, m = 6, u = 5;
    const auto t = rpq::hypergeometric_pmf(ac, n, m, u);
    for (int k = 0; k <= n; ++k)
        EXPECT_NEAR(t.probs[static_cast<std::size_t>(k)], choose(m, k) * choose(u, n - k) / choose(m + u, n), 1e-3);
}

TEST(Polya, DrawProbabilityForms) {
    const auto ac = DeformationSpec::arik_coon(0.5);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= i; ++j) {
            const double from_m = rpq::urn_draw_probability(ac, i, j, 2.0 / -1.0, 3.0 / -1.0, 1);
            EXPECT_NEAR(from_m, rpq::urn_draw_probability_counts(ac, i, j, 2, 3, 1), 1e-13);
        }
    EXPECT_NEAR(rpq::urn_draw_probability_counts(ac, 1, 1, 4, 0, 1), 1.0, 1e-15);
    const auto near_one = DeformationSpec::arik_coon(1.0 - 1e-7);
    EXPECT_NEAR(rpq::urn_draw_probability_counts(near_one, 3, 2, 2, 3, 1), (2.0 + 1.0) / (2.0 + 3.0 + 2.0), 1e-3);
}

TEST(InversePolya, FinitePointNormalizesOnArikCoon) {
    const auto ac = DeformationSpec::arik_coon(0.5);
    const InversePolyaParams params{2, 3.0, 4.0, -1, 1e-14, 10000};
    const auto t = rpq::inverse_polya_pmf(ac, params, Method::Direct);
    EXPECT_NEAR(t.sum(), 1.0, 1e-6);
}

TEST(InversePolya, InfiniteSupportNormalizesOnArikCoon) {
    for (double q : {0.3, 0.5, 0.9}) {
        const auto d = DeformationSpec::arik_coon(q);
        const InversePolyaParams params{2, -2.5, -1.7, 1, 1e-14, 100000};
        const auto t = rpq::inverse_polya_pmf(d, params, Method::Direct);
        EXPECT_TRUE(t.truncated);
        EXPECT_NEAR(t.sum(), 1.0, 1e-6) << d.descriptor();
    }
}

TEST(InversePolya, RecursionMatchesDirect) {
    for (const auto& d : full_grid()) {
        const InversePolyaParams params{2, 3.0, 4.0, -1, 1e-12, 10000};
        const auto a = rpq::inverse_polya_pmf(d, params, Method::Direct);
        const auto b = rpq::inverse_polya_pmf(d, params, Method::Recursive);
        EXPECT_LT(max_gap(a.probs, b.probs), 1e-10) << d.descriptor();
    }
}

TEST(InversePolya, FirstMomentOnArikCoon) {
    const auto ac = DeformationSpec::arik_coon(0.5);
    const InversePolyaParams params{2, -2.5, -1.7, 1, 1e-40, 100000};
    const auto t = rpq::inverse_polya_pmf(ac, params, Method::Direct);
    EXPECT_LT(oracle::relative_gap(rpq::inverse_polya_factorial_moment(ac, params, 1), brute_moment(t, 1)), 1e-5);
}

TEST(Sampling, DegenerateAndDeterministic) {
    const auto ac = DeformationSpec::arik_coon(0.5);
    const auto atom = rpq::binomial_pmf(ac, {0, 0.5}, Method::Direct);
    const auto zeros = rpq::sample(atom, 7, 100);
    EXPECT_TRUE(std::all_of(zeros.begin(), zeros.end(), [](int v) { return v == 0; }));
    const auto t = rpq::binomial_pmf(ac, {6, 0.4}, Method::Direct);
    EXPECT_EQ(rpq::sample(t, 42, 1000), rpq::sample(t, 42, 1000));
    EXPECT_NE(rpq::sample(t, 42, 1000), rpq::sample(t, 43, 1000));
}

TEST(Sampling, DeformedMeanWithinThreeStandardErrors) {
    const auto ac = DeformationSpec::arik_coon(0.5);
    const auto t = rpq::binomial_pmf(ac, {8, 0.4}, Method::Direct);
    const auto draws = rpq::sample(t, 2024, 100000);
    double mean = 0.0, second = 0.0;
    for (std::size_t k = 0; k < t.probs.size(); ++k) {
        const double v = rpq::number(ac, t.support[k]);
        mean += v * t.probs[k];
        second += v * v * t.probs[k];
    }
    double emp = 0.0;
    for (int k : draws) emp += rpq::number(ac, k);
    emp /= static_cast<double>(draws.size());
    EXPECT_LT(std::fabs(emp - mean), 3.0 * std::sqrt((second - mean * mean) / draws.size()));
}

TEST(Sampling, RejectsUnnormalizedTable) {
    auto t = rpq::binomial_pmf(DeformationSpec::arik_coon(0.5), {1, 0.5}, Method::Direct);
    t.probs = {0.5, 0.7};
    rpq::annotate(t);
    EXPECT_THROW(rpq::sample(t, 1, 10), rpq::DomainError);
}

}  // namespace
