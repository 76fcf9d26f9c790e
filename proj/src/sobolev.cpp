#include "hyper/sobolev.hpp"

#include <algorithm>
#include <cmath>

namespace hyper {

namespace {

void check_gamma_length(const DualData& dual, const SobolevParams& params) {
    if (params.gamma.size() != dual.size()) {
        throw ParameterError("gamma has " + std::to_string(params.gamma.size()) + " entries but the dual has " +
                             std::to_string(dual.size()));
    }
}

EmbeddingReport finish(double lhs, double rhs, double constant, double slack) {
    EmbeddingReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.constant = constant;
    r.margin = rhs - lhs;
    r.slack = slack * std::max(1.0, rhs);
    r.pass = r.margin >= -r.slack;
    return r;
}

double sup_abs(const PointFunction& f) {
    double worst = 0.0;
    for (const auto& v : f.values) worst = std::max(worst, std::abs(v));
    return worst;
}

}  // namespace

SobolevParams SobolevParams::make(double s, std::vector<double> gamma) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ParameterError("Sobolev exponent s must be a positive real");
    for (double g : gamma) {
        if (!(g >= 0.0) || !std::isfinite(g)) throw ParameterError("gamma must be finite and nonnegative");
    }
    return SobolevParams{s, std::move(gamma)};
}

double SobolevParams::weight(Index i) const { return std::pow(1.0 + gamma.at(i) * gamma.at(i), s); }

std::optional<GammaPreset> parse_gamma_preset(std::string_view name) {
    if (name == "zero") return GammaPreset::Zero;
    if (name == "index") return GammaPreset::Index;
    if (name == "spectral-gap") return GammaPreset::SpectralGap;
    return std::nullopt;
}

std::vector<double> gamma_preset(const GelfandPair& pair, const DualData& dual, GammaPreset preset,
                                 std::optional<Index> operator_block) {
    std::vector<double> gamma(dual.size(), 0.0);
    switch (preset) {
        case GammaPreset::Zero:
            break;
        case GammaPreset::Index:
            for (Index i = 0; i < gamma.size(); ++i) gamma[i] = static_cast<double>(i);
            break;
        case GammaPreset::SpectralGap: {
            // Translation by a block measure acts on φ by the scalar φ(block).
            std::vector<double> step(pair.blocks(), 0.0);
            if (operator_block) {
                if (*operator_block >= pair.blocks()) throw ParameterError("operator block out of range");
                step[*operator_block] = 1.0;
            } else {
                double total = 0.0;
                for (Index b = 1; b < pair.blocks(); ++b) total += pair.block_haar(b);
                for (Index b = 1; b < pair.blocks(); ++b) step[b] = pair.block_haar(b) / total;
                if (pair.blocks() == 1) step[0] = 1.0;
            }
            for (Index i = 0; i < dual.size(); ++i) {
                Complex eigenvalue = 0.0;
                for (Index b = 0; b < pair.blocks(); ++b) eigenvalue += step[b] * dual.characters[i][b];
                gamma[i] = std::max(0.0, 1.0 - eigenvalue.real());
            }
            break;
        }
    }
    return gamma;
}

double sobolev_norm(const DualData& dual, const FourierCoefficients& coeffs, const SobolevParams& params) {
    check_gamma_length(dual, params);
    if (coeffs.size() != dual.size()) throw StructuralError("coefficient count does not match the dual");
    double sum = 0.0;
    for (Index i = 0; i < dual.size(); ++i) sum += dual.plancherel[i] * params.weight(i) * std::norm(coeffs[i]);
    return std::sqrt(sum);
}

double sobolev_norm(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                    const SobolevParams& params) {
    return sobolev_norm(dual, fourier(pair, dual, f), params);
}

Complex sobolev_inner(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                      const PointFunction& g, const SobolevParams& params) {
    check_gamma_length(dual, params);
    const auto fh = fourier(pair, dual, f);
    const auto gh = fourier(pair, dual, g);
    Complex sum = 0.0;
    for (Index i = 0; i < dual.size(); ++i) sum += dual.plancherel[i] * params.weight(i) * fh[i] * std::conj(gh[i]);
    return sum;
}

double l2_norm(const GelfandPair& pair, const PointFunction& f) {
    return std::sqrt(l2_norm_squared(pair.group(), f));
}

EmbeddingReport check_l2_embedding(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                                   const SobolevParams& params, double slack) {
    return finish(l2_norm(pair, f), sobolev_norm(pair, dual, f, params), 1.0, slack);
}

EmbeddingReport check_monotone_embedding(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                                         double s, double sigma, const std::vector<double>& gamma, double slack) {
    if (!(s > sigma) || !(sigma > 0.0)) throw ParameterError("monotone embedding requires s > sigma > 0");
    const auto coeffs = fourier(pair, dual, f);
    const double lower = sobolev_norm(dual, coeffs, SobolevParams::make(sigma, gamma));
    const double upper = sobolev_norm(dual, coeffs, SobolevParams::make(s, gamma));
    return finish(lower, upper, 1.0, slack);
}

double character_bound(const DualData& dual) {
    double m = 0.0;
    for (const auto& phi : dual.characters)
        for (const auto& v : phi.values) m = std::max(m, std::abs(v));
    return m;
}

double decay_norm(const DualData& dual, const SobolevParams& params) {
    check_gamma_length(dual, params);
    double sum = 0.0;
    for (Index i = 0; i < dual.size(); ++i) sum += dual.plancherel[i] / params.weight(i);
    return std::sqrt(sum);
}

double supnorm_constant(const GelfandPair& /*pair*/, const DualData& dual, const SobolevParams& params) {
    return character_bound(dual) * decay_norm(dual, params);
}

EmbeddingReport check_supnorm_embedding(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                                        const SobolevParams& params, double slack) {
    const double constant = supnorm_constant(pair, dual, params);
    const double norm = sobolev_norm(pair, dual, f, params);
    return finish(sup_abs(f), constant * norm, constant, slack);
}

EmbeddingReport check_supnorm_embedding(const GelfandPair& pair, const DualData& dual,
                                        const FourierCoefficients& coeffs, const SobolevParams& params,
                                        double slack) {
    const double constant = supnorm_constant(pair, dual, params);
    const double norm = sobolev_norm(dual, coeffs, params);
    return finish(sup_abs(inverse_fourier(pair, dual, coeffs)), constant * norm, constant, slack);
}

double character_oscillation(const DualData& dual) {
    double eps = 0.0;
    for (const auto& phi : dual.characters)
        for (const auto& a : phi.values)
            for (const auto& b : phi.values) eps = std::max(eps, std::abs(a - b));
    return eps;
}

double modulus_bound(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                     const SobolevParams& params, double eps) {
    if (!(eps >= 0.0)) throw ParameterError("eps must be nonnegative");
    return eps * sobolev_norm(pair, dual, f, params) * decay_norm(dual, params);
}

EmbeddingReport check_modulus_embedding(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                                        const SobolevParams& params, double slack) {
    double oscillation = 0.0;
    for (const auto& a : f.values)
        for (const auto& b : f.values) oscillation = std::max(oscillation, std::abs(a - b));
    const double eps = character_oscillation(dual);
    const double constant = eps * decay_norm(dual, params);
    return finish(oscillation, modulus_bound(pair, dual, f, params, eps), constant, slack);
}

}  // namespace hyper
