#pragma once

// Sobolev norms weighted by (1 + γ(φ)²)^s on the spherical dual, and the
// quantitative embedding inequalities into L², into lower smoothness, and into
// bounded functions.

#include <optional>
#include <string_view>
#include <vector>

#include "hyper/spectral.hpp"

namespace hyper {

inline constexpr double kDefaultSlack = 1e-12;

struct SobolevParams {
    double s = 1.0;
    /// γ(φ) ≥ 0 per dual object, in canonical dual order.
    std::vector<double> gamma;

    /// Throws ParameterError unless s > 0 and every γ is finite and ≥ 0.
    static SobolevParams make(double s, std::vector<double> gamma);

    /// (1 + γ(φ_i)²)^s
    double weight(Index i) const;
};

struct EmbeddingReport {
    double lhs = 0.0;
    double rhs = 0.0;
    /// Embedding constant, or 1 where the inequality has none.
    double constant = 1.0;
    double margin = 0.0;
    /// Slack actually applied: slack · max(1, rhs).
    double slack = 0.0;
    bool pass = true;
};

enum class GammaPreset { Zero, Index, SpectralGap };

/// Parses "zero", "index" or "spectral-gap". Returns nullopt otherwise.
std::optional<GammaPreset> parse_gamma_preset(std::string_view name);

/// γ ≡ 0; γ(φ_k) = k; or γ(φ) = 1 − Re λ(φ) where λ(φ) is the eigenvalue of a
/// translation operator on φ. With no block given the operator is the
/// Haar-weighted average of translations by all blocks other than K, i.e. a
/// single random-walk step off the identity.
std::vector<double> gamma_preset(const GelfandPair& pair, const DualData& dual, GammaPreset preset,
                                 std::optional<Index> operator_block = std::nullopt);

double sobolev_norm(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                    const SobolevParams& params);
double sobolev_norm(const DualData& dual, const FourierCoefficients& coeffs, const SobolevParams& params);

Complex sobolev_inner(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                      const PointFunction& g, const SobolevParams& params);

/// ‖f‖_{L²} computed on G directly.
double l2_norm(const GelfandPair& pair, const PointFunction& f);

/// ‖f‖_{L²} ≤ ‖f‖_{H^s_γ}.
EmbeddingReport check_l2_embedding(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                                   const SobolevParams& params, double slack = kDefaultSlack);

/// ‖f‖_{H^σ_γ} ≤ ‖f‖_{H^s_γ} for s > σ > 0 (ParameterError otherwise).
EmbeddingReport check_monotone_embedding(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                                         double s, double sigma, const std::vector<double>& gamma,
                                         double slack = kDefaultSlack);

/// max_{x,φ} |φ(x)|.
double character_bound(const DualData& dual);

/// (Σ_φ π(φ) (1 + γ(φ)²)^{−s})^{1/2}, the L²(π) norm of (1 + γ²)^{−s/2}.
double decay_norm(const DualData& dual, const SobolevParams& params);

/// C(γ, s) = M · (Σ_φ π(φ)(1 + γ(φ)²)^{−s})^{1/2} with M = max |φ(x)|.
double supnorm_constant(const GelfandPair& pair, const DualData& dual, const SobolevParams& params);

/// ‖f‖_∞ ≤ C(γ, s) ‖f‖_{H^s_γ}.
EmbeddingReport check_supnorm_embedding(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                                        const SobolevParams& params, double slack = kDefaultSlack);
/// Same inequality for a function given by its coefficients; ‖f‖_∞ is read
/// off the inverse transform.
EmbeddingReport check_supnorm_embedding(const GelfandPair& pair, const DualData& dual,
                                        const FourierCoefficients& coeffs, const SobolevParams& params,
                                        double slack = kDefaultSlack);

/// max_{φ, x, a} |φ(x) − φ(a)|.
double character_oscillation(const DualData& dual);

/// eps · ‖f‖_{H^s_γ} · ‖(1 + γ²)^{−s/2}‖_{L²(π)}. eps must be ≥ 0.
double modulus_bound(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                     const SobolevParams& params, double eps);

/// max_{x,a} |f(x) − f(a)| ≤ modulus_bound with eps = character_oscillation.
EmbeddingReport check_modulus_embedding(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                                        const SobolevParams& params, double slack = kDefaultSlack);

}  // namespace hyper
