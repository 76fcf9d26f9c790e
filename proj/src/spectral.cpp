#include "hyper/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "hyper/random.hpp"

namespace hyper {

namespace {

double round9(double v) {
    const double r = std::round(v * 1e9) / 1e9;
    return r == 0.0 ? 0.0 : r;  // fold -0
}

bool rounded_less(const Character& a, const Character& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto ka = std::make_tuple(round9(a[i].real()), round9(a[i].imag()));
        const auto kb = std::make_tuple(round9(b[i].real()), round9(b[i].imag()));
        if (ka != kb) return ka < kb;
    }
    return false;
}

double distance_from_trivial(const Character& c) {
    double worst = 0.0;
    for (const auto& v : c.values) worst = std::max(worst, std::abs(v - Complex(1.0)));
    return worst;
}

void order_characters(std::vector<Character>& chars) {
    auto trivial = std::min_element(chars.begin(), chars.end(), [](const Character& a, const Character& b) {
        return distance_from_trivial(a) < distance_from_trivial(b);
    });
    std::iter_swap(chars.begin(), trivial);
    std::sort(chars.begin() + 1, chars.end(), rounded_less);
}

void require_biinvariant(const GelfandPair& pair, const PointFunction& f, double tol) {
    const double residual = biinvariance_residual(pair, f);
    if (!(residual <= tol)) {
        throw BiInvarianceError("function is not K-bi-invariant (block deviation " + std::to_string(residual) + ")");
    }
}

}  // namespace

DualData compute_dual(const GelfandPair& pair, const DualOptions& options) {
    if (!is_gelfand_pair(pair)) throw NotGelfandPairError("bi-invariant convolution algebra is not commutative");
    const auto& q = pair.quotient();
    const auto m = static_cast<Eigen::Index>(q.size());
    const auto e = static_cast<Eigen::Index>(q.identity());

    for (int attempt = 0; attempt < options.max_retries; ++attempt) {
        const std::uint64_t seed = options.seed + static_cast<std::uint64_t>(attempt);
        Rng rng(seed);
        Eigen::MatrixXd mixed = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index a = 0; a < m; ++a) {
            const double r = rng.uniform(-1.0, 1.0);
            for (Eigen::Index b = 0; b < m; ++b)
                for (Eigen::Index d = 0; d < m; ++d) mixed(b, d) += r * q.c(a, b, d);
        }

        Eigen::EigenSolver<Eigen::MatrixXd> solver(mixed, true);
        if (solver.info() != Eigen::Success) continue;
        const Eigen::VectorXcd lambda = solver.eigenvalues();
        bool collision = false;
        for (Eigen::Index i = 0; i < m && !collision; ++i)
            for (Eigen::Index j = i + 1; j < m && !collision; ++j)
                collision = std::abs(lambda(i) - lambda(j)) < options.separation;
        if (collision) continue;

        const Eigen::MatrixXcd vectors = solver.eigenvectors();
        DualData dual;
        dual.seed_used = seed;
        for (Eigen::Index i = 0; i < m; ++i) {
            const Complex anchor = vectors(e, i);
            if (std::abs(anchor) < 1e-12) {
                throw ConsistencyError("eigenvector vanishes on the identity block");
            }
            Character phi;
            phi.values.resize(static_cast<std::size_t>(m));
            for (Eigen::Index b = 0; b < m; ++b) phi.values[static_cast<std::size_t>(b)] = vectors(b, i) / anchor;
            phi.values[static_cast<std::size_t>(e)] = 1.0;
            dual.characters.push_back(std::move(phi));
        }
        order_characters(dual.characters);

        for (const auto& phi : dual.characters) {
            const auto report = verify_character(pair, phi, options.tol);
            if (!report.passed()) {
                std::string names;
                for (const auto& f : report.failures()) names += (names.empty() ? "" : ", ") + f;
                throw ConsistencyError("computed character fails: " + names);
            }
        }
        dual.plancherel = plancherel_weights(pair, dual.characters);
        return dual;
    }
    throw DegenerateSpectrumError("eigenvalue collision persisted across " + std::to_string(options.max_retries) +
                                  " random combinations");
}

ValidationReport verify_character(const GelfandPair& pair, const PointFunction& phi, double tol) {
    const auto& g = pair.group();
    const auto n = g.size();
    if (phi.size() != n) throw StructuralError("character length does not match hypergroup size");

    ValidationReport report;
    report.tolerance = tol;
    auto record = [&](std::string_view name, double residual) {
        CheckResult c;
        c.name = name;
        c.residual = residual;
        c.passed = residual <= tol;
        report.checks.push_back(std::move(c));
    };

    record(character_check::kBiInvariance, biinvariance_residual(pair, phi));
    record(character_check::kIdentity, std::abs(phi[g.identity()] - Complex(1.0)));

    // translated[u][y] = φ(u ∗ y)
    std::vector<Complex> translated(n * n);
    for (Index u = 0; u < n; ++u)
        for (Index y = 0; y < n; ++y) translated[u * n + y] = translate_value(g, phi, u, y);

    const auto omega = pair.omega_k();
    double mult = 0.0;
    for (Index x = 0; x < n; ++x) {
        for (Index y = 0; y < n; ++y) {
            Complex integral = 0.0;
            for (Index k : pair.subgroup()) {
                const auto xk = g.product(x, k);
                Complex inner = 0.0;
                for (Index u = 0; u < n; ++u)
                    if (xk[u] != 0.0) inner += xk[u] * translated[u * n + y];
                integral += omega[k] * inner;
            }
            mult = std::max(mult, std::abs(integral - phi[x] * phi[y]));
        }
    }
    record(character_check::kMultiplicativity, mult);

    double conj = 0.0;
    for (Index x = 0; x < n; ++x) conj = std::max(conj, std::abs(phi[g.inv(x)] - std::conj(phi[x])));
    record(character_check::kConjugation, conj);
    return report;
}

ValidationReport verify_character(const GelfandPair& pair, const Character& phi, double tol) {
    return verify_character(pair, lift_blocks(pair, phi.values), tol);
}

std::vector<double> plancherel_weights(const GelfandPair& pair, std::span<const Character> characters) {
    std::vector<double> weights;
    weights.reserve(characters.size());
    for (const auto& phi : characters) {
        if (phi.size() != pair.blocks()) throw StructuralError("character length does not match block count");
        double mass = 0.0;
        for (Index b = 0; b < pair.blocks(); ++b) mass += pair.block_haar(b) * std::norm(phi[b]);
        weights.push_back(1.0 / mass);
    }
    return weights;
}

FourierCoefficients fourier(const GelfandPair& pair, const DualData& dual, const PointFunction& f,
                            const FourierOptions& options) {
    const auto& g = pair.group();
    if (f.size() != g.size()) throw StructuralError("function length does not match hypergroup size");
    const PointFunction* input = &f;
    PointFunction projected;
    if (!(biinvariance_residual(pair, f) <= options.tol)) {
        if (!options.project) require_biinvariant(pair, f, options.tol);
        projected = biinvariant_project(pair, f);
        input = &projected;
    }
    FourierCoefficients out{std::vector<Complex>(dual.size())};
    for (Index i = 0; i < dual.size(); ++i) {
        const auto& phi = dual.characters[i];
        Complex sum = 0.0;
        for (Index x = 0; x < g.size(); ++x) sum += g.haar(x) * phi[pair.block_of(g.inv(x))] * (*input)[x];
        out.values[i] = sum;
    }
    return out;
}

PointFunction inverse_fourier(const GelfandPair& pair, const DualData& dual, const FourierCoefficients& coeffs) {
    if (coeffs.size() != dual.size()) throw StructuralError("coefficient count does not match the dual");
    const auto& g = pair.group();
    PointFunction f{std::vector<Complex>(g.size())};
    for (Index x = 0; x < g.size(); ++x) {
        const Index b = pair.block_of(x);
        Complex sum = 0.0;
        for (Index i = 0; i < dual.size(); ++i) sum += dual.plancherel[i] * dual.characters[i][b] * coeffs[i];
        f[x] = sum;
    }
    return f;
}

double l2_norm_squared(const FiniteHypergroup& g, const PointFunction& f) {
    if (f.size() != g.size()) throw StructuralError("function length does not match hypergroup size");
    double sum = 0.0;
    for (Index x = 0; x < g.size(); ++x) sum += g.haar(x) * std::norm(f[x]);
    return sum;
}

double plancherel_residual(const GelfandPair& pair, const DualData& dual, const PointFunction& f) {
    require_biinvariant(pair, f, kDefaultValidationTol);
    const double lhs = l2_norm_squared(pair.group(), f);
    const auto coeffs = fourier(pair, dual, f);
    double rhs = 0.0;
    for (Index i = 0; i < dual.size(); ++i) rhs += dual.plancherel[i] * std::norm(coeffs[i]);
    return std::abs(lhs - rhs) / std::max(1.0, lhs);
}

PointFunction convolve_functions(const FiniteHypergroup& g, const PointFunction& f1, const PointFunction& f2) {
    if (f1.size() != g.size() || f2.size() != g.size()) {
        throw StructuralError("function length does not match hypergroup size");
    }
    PointFunction out{std::vector<Complex>(g.size())};
    for (Index x = 0; x < g.size(); ++x) {
        Complex sum = 0.0;
        for (Index y = 0; y < g.size(); ++y) {
            if (f1[y] == 0.0) continue;
            sum += g.haar(y) * f1[y] * translate_value(g, f2, g.inv(y), x);
        }
        out[x] = sum;
    }
    return out;
}

}  // namespace hyper
