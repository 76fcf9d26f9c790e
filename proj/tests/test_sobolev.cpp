#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "hyper/constructors.hpp"
#include "hyper/sobolev.hpp"

using namespace hyper;

namespace {

struct Cyclic3 : ::testing::Test {
    GelfandPair pair{cyclic(3), {0}};
    DualData dual = compute_dual(pair);
    PointFunction delta{{1.0, 0.0, 0.0}};
    SobolevParams params = SobolevParams::make(1.0, {0.0, 1.0, 2.0});
};

// Σ π (1+γ²)^s |f̂|² summed directly from the definition.
double direct_norm(const DualData& dual, const FourierCoefficients& c, double s, const std::vector<double>& gamma) {
    double sum = 0.0;
    for (std::size_t i = 0; i < dual.size(); ++i)
        sum += dual.plancherel[i] * std::pow(1.0 + gamma[i] * gamma[i], s) * std::norm(c[i]);
    return std::sqrt(sum);
}

std::vector<double> zeros(std::size_t n) { return std::vector<double>(n, 0.0); }

std::vector<double> index_gamma(std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<double>(i);
    return g;
}

}  // namespace

TEST_F(Cyclic3, NormOfIdentityIndicator) {
    EXPECT_NEAR(sobolev_norm(pair, dual, delta, params), std::sqrt(8.0 / 3.0), 1e-12);
    const auto h2 = SobolevParams::make(2.0, {0.0, 1.0, 2.0});
    EXPECT_NEAR(sobolev_norm(pair, dual, delta, h2), std::sqrt(10.0), 1e-12);
}

TEST_F(Cyclic3, SupnormConstant) {
    EXPECT_NEAR(supnorm_constant(pair, dual, params), std::sqrt(17.0 / 30.0), 1e-12);
    EXPECT_NEAR(supnorm_constant(pair, dual, SobolevParams::make(1.0, zeros(3))), 1.0, 1e-12);
    EXPECT_NEAR(character_bound(dual), 1.0, 1e-12);
}

TEST_F(Cyclic3, EmbeddingsOfIdentityIndicator) {
    const auto l2 = check_l2_embedding(pair, dual, delta, params);
    EXPECT_NEAR(l2.lhs, 1.0, 1e-12);
    EXPECT_NEAR(l2.rhs, std::sqrt(8.0 / 3.0), 1e-12);
    EXPECT_TRUE(l2.pass);

    const auto mono = check_monotone_embedding(pair, dual, delta, 2.0, 1.0, params.gamma);
    EXPECT_NEAR(mono.lhs, std::sqrt(8.0 / 3.0), 1e-12);
    EXPECT_NEAR(mono.rhs, std::sqrt(10.0), 1e-12);
    EXPECT_TRUE(mono.pass);

    const auto sup = check_supnorm_embedding(pair, dual, delta, params);
    EXPECT_NEAR(sup.lhs, 1.0, 1e-12);
    EXPECT_NEAR(sup.rhs, std::sqrt(17.0 / 30.0) * std::sqrt(8.0 / 3.0), 1e-12);
    EXPECT_NEAR(sup.rhs, 1.229, 1e-3);
    EXPECT_TRUE(sup.pass);
}

TEST_F(Cyclic3, ModulusOfIdentityIndicator) {
    const double eps = character_oscillation(dual);
    EXPECT_NEAR(eps, std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(decay_norm(dual, params), std::sqrt(17.0 / 30.0), 1e-12);
    const double expected = std::sqrt(3.0) * std::sqrt(8.0 / 3.0) * std::sqrt(17.0 / 30.0);
    EXPECT_NEAR(modulus_bound(pair, dual, delta, params, eps), expected, 1e-12);
    EXPECT_NEAR(expected, 2.13, 5e-3);
    const auto r = check_modulus_embedding(pair, dual, delta, params);
    EXPECT_NEAR(r.lhs, 1.0, 1e-12);
    EXPECT_TRUE(r.pass);
    EXPECT_THROW(modulus_bound(pair, dual, delta, params, -1.0), ParameterError);
}

TEST_F(Cyclic3, ConstantFunctionHasNoOscillation) {
    const auto r = check_modulus_embedding(pair, dual, PointFunction{{2.0, 2.0, 2.0}}, params);
    EXPECT_NEAR(r.lhs, 0.0, 1e-15);
    EXPECT_TRUE(r.pass);
}

TEST_F(Cyclic3, ZeroFunction) {
    const PointFunction zero{{0.0, 0.0, 0.0}};
    EXPECT_EQ(sobolev_norm(pair, dual, zero, params), 0.0);
    EXPECT_EQ(sobolev_inner(pair, dual, delta, zero, params), Complex(0.0));
    const auto r = check_supnorm_embedding(pair, dual, zero, params);
    EXPECT_EQ(r.lhs, 0.0);
    EXPECT_EQ(r.rhs, 0.0);
    EXPECT_TRUE(r.pass);
}

TEST_F(Cyclic3, ZeroGammaIsEquality) {
    const auto p = SobolevParams::make(3.0, zeros(3));
    const auto r = check_l2_embedding(pair, dual, delta, p);
    EXPECT_NEAR(r.margin, 0.0, 1e-12);
    const auto m = check_monotone_embedding(pair, dual, delta, 3.0, 1.0, p.gamma);
    EXPECT_NEAR(m.margin, 0.0, 1e-12);
}

TEST_F(Cyclic3, ParameterErrors) {
    EXPECT_THROW(SobolevParams::make(0.0, {0, 0, 0}), ParameterError);
    EXPECT_THROW(SobolevParams::make(-1.0, {0, 0, 0}), ParameterError);
    EXPECT_THROW(SobolevParams::make(1.0, {0, -1, 0}), ParameterError);
    EXPECT_THROW(SobolevParams::make(1.0, {0, NAN, 0}), ParameterError);
    EXPECT_THROW(check_monotone_embedding(pair, dual, delta, 1.0, 1.0, params.gamma), ParameterError);
    EXPECT_THROW(check_monotone_embedding(pair, dual, delta, 1.0, 2.0, params.gamma), ParameterError);
    EXPECT_THROW(check_monotone_embedding(pair, dual, delta, 1.0, 0.0, params.gamma), ParameterError);
    EXPECT_THROW(sobolev_norm(pair, dual, delta, SobolevParams::make(1.0, {0.0, 1.0})), ParameterError);
}

TEST(Sobolev, NonInvariantInputRejected) {
    GelfandPair pair = double_coset_pair(s3_table(), {0, 1});
    const auto dual = compute_dual(pair);
    PointFunction f{{0, 0, 1, 0, 0, 0}};
    EXPECT_THROW(sobolev_norm(pair, dual, f, SobolevParams::make(1.0, {0, 1})), BiInvarianceError);
}

TEST(Gamma, Presets) {
    EXPECT_EQ(parse_gamma_preset("zero"), GammaPreset::Zero);
    EXPECT_EQ(parse_gamma_preset("index"), GammaPreset::Index);
    EXPECT_EQ(parse_gamma_preset("spectral-gap"), GammaPreset::SpectralGap);
    EXPECT_FALSE(parse_gamma_preset("nope").has_value());

    GelfandPair pair(hamming(3), {0});
    const auto dual = compute_dual(pair);
    EXPECT_EQ(gamma_preset(pair, dual, GammaPreset::Zero), zeros(4));
    EXPECT_EQ(gamma_preset(pair, dual, GammaPreset::Index), index_gamma(4));
}

TEST(Gamma, SpectralGapOnCube) {
    GelfandPair pair(hamming(3), {0});
    const auto dual = compute_dual(pair);
    // Nearest-neighbour walk: eigenvalue (d − 2j)/d on the j-th eigenspace.
    const auto gamma = gamma_preset(pair, dual, GammaPreset::SpectralGap, 1);
    std::vector<double> sorted = gamma;
    std::sort(sorted.begin(), sorted.end());
    const std::vector<double> expected{0.0, 2.0 / 3.0, 4.0 / 3.0, 2.0};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(sorted[i], expected[i], 1e-12);
    EXPECT_NEAR(gamma[0], 0.0, 1e-12);
    // One uniform step off the identity: eigenvalue −1/7 on every non-trivial character.
    const auto uniform = gamma_preset(pair, dual, GammaPreset::SpectralGap);
    for (std::size_t i = 1; i < 4; ++i) EXPECT_NEAR(uniform[i], 1.0 + 1.0 / 7.0, 1e-12);
}

TEST(SobolevProperty, NormAxiomsAndHilbertStructure) {
    Rng rng(17);
    for (const auto& [name, pair] : fixture::bundled_pairs()) {
        const auto dual = compute_dual(pair);
        const auto params = SobolevParams::make(1.5, index_gamma(dual.size()));
        for (int t = 0; t < 20; ++t) {
            const auto f = fixture::random_biinvariant(pair, rng);
            const auto g = fixture::random_biinvariant(pair, rng);
            const Complex lambda = rng.complex_normal();
            PointFunction lf = f, sum = f, diff = f;
            for (Index x = 0; x < f.size(); ++x) {
                lf[x] = lambda * f[x];
                sum[x] = f[x] + g[x];
                diff[x] = f[x] - g[x];
            }
            const double nf = sobolev_norm(pair, dual, f, params);
            const double ng = sobolev_norm(pair, dual, g, params);
            const double ns = sobolev_norm(pair, dual, sum, params);
            const double nd = sobolev_norm(pair, dual, diff, params);
            EXPECT_NEAR(sobolev_norm(pair, dual, lf, params), std::abs(lambda) * nf, 1e-12 * std::max(1.0, nf * std::abs(lambda))) << name;
            EXPECT_LE(ns, nf + ng + 1e-12) << name;
            EXPECT_NEAR(ns * ns + nd * nd, 2.0 * (nf * nf + ng * ng), 1e-10 * std::max(1.0, nf * nf + ng * ng)) << name;
            EXPECT_NEAR(std::abs(sobolev_inner(pair, dual, f, f, params) - nf * nf), 0.0, 1e-12 * std::max(1.0, nf * nf)) << name;
            const auto coeffs = fourier(pair, dual, f);
            EXPECT_NEAR(nf, direct_norm(dual, coeffs, 1.5, params.gamma), 1e-12 * std::max(1.0, nf)) << name;
        }
    }
}

TEST(SobolevProperty, ZeroGammaCollapsesToL2) {
    Rng rng(23);
    for (const auto& [name, pair] : fixture::bundled_pairs()) {
        const auto dual = compute_dual(pair);
        for (double s : {0.5, 1.0, 2.0, 4.0}) {
            const auto params = SobolevParams::make(s, zeros(dual.size()));
            const auto f = fixture::random_biinvariant(pair, rng);
            const auto g = fixture::random_biinvariant(pair, rng);
            const double l2 = l2_norm(pair, f);
            EXPECT_NEAR(sobolev_norm(pair, dual, f, params), l2, 1e-12 * std::max(1.0, l2)) << name;
            Complex inner = 0.0;
            for (Index x = 0; x < f.size(); ++x) inner += pair.group().haar(x) * f[x] * std::conj(g[x]);
            EXPECT_NEAR(std::abs(sobolev_inner(pair, dual, f, g, params) - inner), 0.0, 1e-10 * std::max(1.0, std::abs(inner))) << name;
        }
    }
}

TEST(SobolevProperty, MonotoneInSmoothness) {
    Rng rng(29);
    for (const auto& [name, pair] : fixture::bundled_pairs()) {
        const auto dual = compute_dual(pair);
        const auto gamma = index_gamma(dual.size());
        for (int t = 0; t < 10; ++t) {
            const auto f = fixture::random_biinvariant(pair, rng);
            double previous = 0.0;
            for (double s : {0.5, 1.0, 2.0, 4.0}) {
                const double n = sobolev_norm(pair, dual, f, SobolevParams::make(s, gamma));
                EXPECT_GE(n, previous) << name;
                previous = n;
            }
        }
    }
}

TEST(SobolevProperty, AllEmbeddingsHoldOnRandomInputs) {
    Rng rng(31);
    for (const auto& [name, pair] : fixture::bundled_pairs()) {
        const auto dual = compute_dual(pair);
        for (auto preset : {GammaPreset::Zero, GammaPreset::Index, GammaPreset::SpectralGap}) {
            const auto gamma = gamma_preset(pair, dual, preset);
            const auto params = SobolevParams::make(1.0, gamma);
            for (int t = 0; t < 50; ++t) {
                const auto f = fixture::random_biinvariant(pair, rng);
                EXPECT_TRUE(check_l2_embedding(pair, dual, f, params).pass) << name;
                EXPECT_TRUE(check_monotone_embedding(pair, dual, f, 1.0, 0.5, gamma).pass) << name;
                EXPECT_TRUE(check_supnorm_embedding(pair, dual, f, params).pass) << name;
                EXPECT_TRUE(check_modulus_embedding(pair, dual, f, params).pass) << name;
            }
        }
    }
}

TEST(SobolevProperty, SupnormFromCoefficientsAgrees) {
    Rng rng(37);
    GelfandPair pair(hamming(4), {0});
    const auto dual = compute_dual(pair);
    const auto params = SobolevParams::make(2.0, index_gamma(dual.size()));
    const auto f = fixture::random_biinvariant(pair, rng);
    const auto a = check_supnorm_embedding(pair, dual, f, params);
    const auto b = check_supnorm_embedding(pair, dual, fourier(pair, dual, f), params);
    EXPECT_NEAR(a.lhs, b.lhs, 1e-12 * std::max(1.0, a.lhs));
    EXPECT_NEAR(a.rhs, b.rhs, 1e-12 * std::max(1.0, a.rhs));
}

TEST(Sobolev, SlackScalesWithBound) {
    GelfandPair pair(cyclic(3), {0});
    const auto dual = compute_dual(pair);
    const auto params = SobolevParams::make(1.0, {0.0, 0.0, 0.0});
    PointFunction big{{1e6, 0.0, 0.0}};
    const auto r = check_l2_embedding(pair, dual, big, params);
    EXPECT_NEAR(r.slack, 1e-12 * r.rhs, 1e-18 * r.rhs);
    EXPECT_TRUE(r.pass);
}
